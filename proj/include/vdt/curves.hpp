#pragma once

#include "vdt/divisor.hpp"
#include "vdt/exterior.hpp"
#include "vdt/ratpoly.hpp"

#include <vector>

namespace vdt {

/// Polynomial holomorphic curve C -> P^n in a reduced representation
/// [f_0 : ... : f_n]: the components have trivial common gcd.
struct PolyCurve {
    int n = 0;
    std::vector<RatPoly> components;

    /// Derivative rows f^(0), ..., f^(k) as (k+1) vectors of length n+1.
    std::vector<std::vector<RatPoly>> derivative_rows(int k) const;

    /// Raw wedge of the derivative rows, before cancellation.
    KVector<RatPoly> raw_wedge(int k) const;

    int max_degree() const {
        int d = 0;
        for (const auto& p : components) d = std::max(d, p.degree());
        return d;
    }
};

/// The k-th derived curve after cancelling the common zeros of the
/// Wronskian coordinates by the function g; the stationary divisor is
/// the zero divisor of g.
struct DerivedCurve {
    int k = 0;
    KVector<RatPoly> plucker_components;
    RatPoly cancellation;
    DivisorOnC stationary_divisor;

    std::vector<RatPoly> coordinate_list() const {
        std::vector<RatPoly> out;
        for (const auto& [idx, c] : plucker_components.coords) out.push_back(c);
        return out;
    }
    int max_degree() const {
        int d = 0;
        for (const auto& [idx, c] : plucker_components.coords) d = std::max(d, c.degree());
        return d;
    }
};

/// Local normal form at a base point: an invertible change of coordinates
/// P under which the components vanish to strictly increasing orders
/// alpha_0 = 0 < alpha_1 < ... < alpha_n with unit leading jet coefficients.
struct NiceJet {
    std::vector<std::vector<GaussianRational>> change_of_coordinates;
    std::vector<int> exponents;
    GaussianRational base_point;
    /// Transformed components in the local coordinate w = z - base_point.
    std::vector<RatPoly> local_components;
};

/// Divides out the monic gcd of all components. Rejects all-zero input.
PolyCurve reduce_representation(const std::vector<RatPoly>& raw);

/// True iff the full Wronskian W(f_0,...,f_n) is not identically zero.
bool is_nondegenerate(const PolyCurve& f);

/// Constructs the k-th derived curve: Pluecker coordinates
/// W(f_{i_0},...,f_{i_k}) / g with g the monic gcd of all of them.
/// For k = 0 this is f itself with g = 1.
DerivedCurve derived_curve(const PolyCurve& f, int k);

struct ContractResult {
    std::vector<RatPoly> h;
    bool identity_holds = false;
};

/// h_i = a_i o f~ for the forms of A; checks exactly that
/// pair(A, raw wedge) equals the Wronskian of the h_i.
ContractResult contract(const PolyCurve& f, const DecomposableCovector& a);

/// Gaussian elimination on the jets at z0; the pivot at each stage is the
/// candidate of minimal current vanishing order, ties broken by original
/// component index.
NiceJet nice_coordinates_at(const PolyCurve& f, const GaussianRational& z0);

struct StationaryOrderCheck {
    int lhs = 0;
    int rhs = 0;
    bool equal = false;
};

/// lhs = ord_{z0} g from the derived curve, rhs = sum (alpha_i - i) from
/// the nice coordinates at z0.
StationaryOrderCheck stationary_order_check(const PolyCurve& f, int k, const GaussianRational& z0);

}  // namespace vdt
