#pragma once

#include "vdt/ratpoly.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace vdt {

/// One point of an effective divisor on C. The location is exact when the
/// root was recognized as a Gaussian rational, otherwise numerically
/// isolated from a square-free factor.
struct DivisorPoint {
    std::complex<double> location;
    int multiplicity = 1;
    bool exact = false;
    std::optional<GaussianRational> exact_location;
};

/// Effective divisor sum alpha_i * {a_i} with pairwise distinct points.
struct DivisorOnC {
    std::vector<DivisorPoint> points;

    int total_degree() const {
        int s = 0;
        for (const auto& p : points) s += p.multiplicity;
        return s;
    }
    bool empty() const { return points.empty(); }
    /// Minimal multiplicity; 0 for the empty divisor.
    int min_multiplicity() const {
        int m = 0;
        for (const auto& p : points) m = (m == 0) ? p.multiplicity : std::min(m, p.multiplicity);
        return m;
    }
};

/// Zero divisor of p: exact multiplicities from the square-free
/// decomposition, locations isolated numerically (Aberth iteration on each
/// square-free factor) or exactly when the root is Gaussian rational.
DivisorOnC roots_with_multiplicity(const RatPoly& p);

/// Roots of a square-free polynomial, in doubles.
std::vector<std::complex<double>> roots_squarefree(const RatPoly& p);

}  // namespace vdt
