#pragma once

#include "vdt/curves.hpp"
#include "vdt/divisor.hpp"

#include <limits>
#include <string>
#include <vector>

namespace vdt {

/// Truncation level "infinity".
inline constexpr int kUntruncated = std::numeric_limits<int>::max();

/// Strictly increasing evaluation radii, all > 1 (the counting integral
/// starts at 1).
struct RadialGrid {
    std::vector<double> radii;

    explicit RadialGrid(std::vector<double> r) : radii(std::move(r)) {
        for (size_t i = 0; i < radii.size(); ++i) {
            if (radii[i] <= 1.0) throw std::invalid_argument("RadialGrid: radius <= 1");
            if (i > 0 && radii[i] <= radii[i - 1])
                throw std::invalid_argument("RadialGrid: radii not increasing");
        }
    }
};

/// Flat per-radius table with a fixed column schema.
struct RadialReport {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    bool passed = true;
    std::string note;
};

/// Zero divisor of p with exact multiplicities. An identically zero input
/// signals that the curve lies inside the hyperplane and is rejected.
DivisorOnC pullback_divisor(const RatPoly& p);

/// N^[m](r, E) in closed form:
///   sum_{|a|<1} min(m,alpha) log r + sum_{1<=|a|<r} min(m,alpha) log(r/|a|).
/// Open-disk membership: points with |a| = r are excluded.
double counting_N(const DivisorOnC& e, int m, double r);

/// Circle average of log |.| by iterated trapezoid with doubling, starting
/// at 256 points, relative tolerance 1e-9, capped at 2^20 points.
double order_T(const std::vector<RatPoly>& components, double r);

/// Proximity function for a linear form q on the components (degree 1):
/// circle average of log( max_i|f_i| * max_j|q_j| / |sum q_j f_j| ).
double proximity_m(const std::vector<RatPoly>& components,
                   const std::vector<GaussianRational>& form, double r);

/// Exact defect of a polynomial curve from degrees:
/// 1 - (sum_i min(m, alpha_i)) / dk.
BigRat exact_defect(const DivisorOnC& e, int m, int dk);

/// First Main Theorem report for a linear hyperplane: columns
/// r, m, N, dT, deviation with deviation = m + N - d*T (d = 1).
RadialReport fmt_report(const PolyCurve& f, const std::vector<GaussianRational>& form,
                        const RadialGrid& grid);

}  // namespace vdt
