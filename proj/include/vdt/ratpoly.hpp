#pragma once

#include "vdt/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace vdt {

/// Univariate polynomial over the Gaussian rationals, coefficients stored
/// lowest degree first. The zero polynomial has an empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<GaussianRational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) { trim(); }
    static RatPoly constant(GaussianRational a) { return RatPoly({std::move(a)}); }
    /// c * z^e
    static RatPoly monomial(GaussianRational c, int e);

    bool is_zero() const { return c_.empty(); }
    /// deg 0 for nonzero constants; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    GaussianRational coeff(int e) const {
        return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[e] : GaussianRational(0);
    }
    GaussianRational leading() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const GaussianRational& s, const RatPoly& a);
    RatPoly& operator+=(const RatPoly& b) { return *this = *this + b; }
    RatPoly& operator-=(const RatPoly& b) { return *this = *this - b; }
    RatPoly& operator*=(const RatPoly& b) { return *this = *this * b; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor). Throws on zero divisor.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
    /// Division known to be exact; throws if a nonzero remainder shows up.
    friend RatPoly exact_div(const RatPoly& a, const RatPoly& b);

    /// Formal derivative with respect to z (no factorial normalization).
    RatPoly derivative() const;
    RatPoly derivative(int order) const;

    GaussianRational eval(const GaussianRational& z) const;
    std::complex<double> eval(std::complex<double> z) const;

    /// Taylor shift: returns p(z + a).
    RatPoly shifted(const GaussianRational& a) const;

    RatPoly monic() const;
    RatPoly pow(unsigned e) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

/// Monic gcd. gcd(p, 0) is the monic normalization of p.
/// Throws if both arguments are identically zero.
RatPoly poly_gcd(const RatPoly& p, const RatPoly& q);

/// Yun's square-free decomposition: p = unit * prod factor_j^{m_j} with
/// square-free, pairwise coprime, monic factors and strictly increasing
/// multiplicities. Constants decompose to an empty list.
std::vector<std::pair<RatPoly, int>> squarefree_decompose(const RatPoly& p);

/// Largest m with (z - a)^m dividing p. Throws on the zero polynomial.
int ord_at(const RatPoly& p, const GaussianRational& a);

/// Wronskian det((p_j)^{(i)}), rows i = 0..k derivative orders,
/// columns the input polynomials.
RatPoly wronskian(const std::vector<RatPoly>& polys);

/// Determinant of a square RatPoly matrix by fraction-free (Bareiss)
/// elimination; all intermediate divisions are exact.
RatPoly det_poly(std::vector<std::vector<RatPoly>> m);

/// Refines the square-free parts of the given polynomials into a list of
/// monic, square-free, pairwise coprime polynomials whose roots cover
/// exactly the union of the input roots, and such that every input
/// polynomial has constant vanishing order along each returned factor.
std::vector<RatPoly> coprime_basis(const std::vector<RatPoly>& polys);

/// Largest m with c^m dividing p (c nonconstant, p nonzero).
int multiplicity_of_factor(const RatPoly& p, const RatPoly& c);

}  // namespace vdt
