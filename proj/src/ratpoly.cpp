#include "vdt/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace vdt {

RatPoly RatPoly::monomial(GaussianRational c, int e) {
    if (e < 0) throw std::invalid_argument("RatPoly::monomial: negative exponent");
    std::vector<GaussianRational> v(e + 1);
    v[e] = std::move(c);
    return RatPoly(std::move(v));
}

GaussianRational RatPoly::leading() const {
    if (is_zero()) throw std::domain_error("RatPoly::leading: zero polynomial");
    return c_.back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator-(const RatPoly& a) {
    std::vector<GaussianRational> v = a.c_;
    for (auto& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const GaussianRational& s, const RatPoly& a) {
    std::vector<GaussianRational> v = a.c_;
    for (auto& x : v) x *= s;
    return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<GaussianRational> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<GaussianRational> quo(a.degree() - db + 1);
    GaussianRational lead = b.c_.back();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        GaussianRational q = rem[i] / lead;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<GaussianRational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = GaussianRational(static_cast<std::int64_t>(i)) * c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative(int order) const {
    RatPoly p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
}

GaussianRational RatPoly::eval(const GaussianRational& z) const {
    GaussianRational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
    return r;
}

std::complex<double> RatPoly::eval(std::complex<double> z) const {
    std::complex<double> r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + it->to_complex();
    return r;
}

RatPoly RatPoly::shifted(const GaussianRational& a) const {
    // Horner with polynomial coefficients: p(z + a).
    RatPoly r;
    RatPoly lin({a, GaussianRational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + RatPoly::constant(*it);
    return r;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    GaussianRational inv = GaussianRational(1) / c_.back();
    return inv * *this;
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r = RatPoly::constant(GaussianRational(1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    return os.str();
}

RatPoly poly_gcd(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_gcd: both arguments zero");
    RatPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quo, rem] = divmod(a, b);
        (void)quo;
        a = b;
        // Normalizing each remainder keeps coefficient growth in check.
        b = rem.monic();
    }
    return a.monic();
}

std::vector<std::pair<RatPoly, int>> squarefree_decompose(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm over a field of characteristic zero.
    RatPoly a = p.monic();
    RatPoly d = a.derivative();
    RatPoly g = poly_gcd(a, d);
    RatPoly w = exact_div(a, g);
    RatPoly y = exact_div(d, g);
    int m = 1;
    while (w.degree() > 0) {
        RatPoly z = y - w.derivative();
        RatPoly f = z.is_zero() ? w : poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, m);
        if (z.is_zero()) break;
        w = exact_div(w, f);
        y = exact_div(z, f);
        ++m;
    }
    return out;
}

int ord_at(const RatPoly& p, const GaussianRational& a) {
    if (p.is_zero()) throw std::domain_error("ord_at: zero polynomial");
    RatPoly lin({-a, GaussianRational(1)});
    int m = 0;
    RatPoly cur = p;
    while (cur.eval(a).is_zero()) {
        cur = exact_div(cur, lin);
        ++m;
    }
    return m;
}

RatPoly wronskian(const std::vector<RatPoly>& polys) {
    if (polys.empty()) throw std::invalid_argument("wronskian: empty list");
    size_t k = polys.size();
    std::vector<std::vector<RatPoly>> m(k, std::vector<RatPoly>(k));
    for (size_t j = 0; j < k; ++j) {
        m[0][j] = polys[j];
        for (size_t i = 1; i < k; ++i) m[i][j] = m[i - 1][j].derivative();
    }
    return det_poly(std::move(m));
}

RatPoly det_poly(std::vector<std::vector<RatPoly>> m) {
    size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_poly: matrix not square");
    if (n == 0) return RatPoly::constant(GaussianRational(1));
    RatPoly prev = RatPoly::constant(GaussianRational(1));
    bool negate = false;
    for (size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p].is_zero()) {
            size_t s = p + 1;
            while (s < n && m[s][p].is_zero()) ++s;
            if (s == n) return RatPoly();
            std::swap(m[p], m[s]);
            negate = !negate;
        }
        for (size_t i = p + 1; i < n; ++i)
            for (size_t j = p + 1; j < n; ++j)
                m[i][j] = exact_div(m[p][p] * m[i][j] - m[i][p] * m[p][j], prev);
        prev = m[p][p];
    }
    RatPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

int multiplicity_of_factor(const RatPoly& p, const RatPoly& c) {
    if (p.is_zero() || c.degree() < 1)
        throw std::invalid_argument("multiplicity_of_factor: bad arguments");
    int m = 0;
    RatPoly cur = p;
    while (true) {
        auto [q, r] = divmod(cur, c);
        if (!r.is_zero()) return m;
        cur = q;
        ++m;
    }
}

std::vector<RatPoly> coprime_basis(const std::vector<RatPoly>& polys) {
    std::vector<RatPoly> basis;
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("coprime_basis: zero polynomial");
        for (auto& [factor, mult] : squarefree_decompose(p)) {
            (void)mult;
            RatPoly s = factor;
            for (size_t i = 0; i < basis.size() && s.degree() > 0; ++i) {
                RatPoly g = poly_gcd(s, basis[i]);
                if (g.degree() == 0) continue;
                RatPoly rest = exact_div(basis[i], g).monic();
                basis[i] = g;
                if (rest.degree() > 0) basis.push_back(rest);
                s = exact_div(s, g).monic();
            }
            if (s.degree() > 0) basis.push_back(s);
        }
    }
    return basis;
}

}  // namespace vdt
