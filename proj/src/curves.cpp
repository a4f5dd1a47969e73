#include "vdt/curves.hpp"

#include <stdexcept>

namespace vdt {

std::vector<std::vector<RatPoly>> PolyCurve::derivative_rows(int k) const {
    std::vector<std::vector<RatPoly>> rows(k + 1, std::vector<RatPoly>(n + 1));
    rows[0] = components;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j <= n; ++j) rows[i][j] = rows[i - 1][j].derivative();
    return rows;
}

KVector<RatPoly> PolyCurve::raw_wedge(int k) const {
    return plucker_of_vectors(derivative_rows(k));
}

PolyCurve reduce_representation(const std::vector<RatPoly>& raw) {
    bool all_zero = true;
    for (const auto& p : raw) all_zero = all_zero && p.is_zero();
    if (raw.empty() || all_zero)
        throw std::invalid_argument("reduce_representation: all components zero");
    RatPoly g;
    for (const auto& p : raw) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : poly_gcd(g, p);
        if (g.degree() == 0) break;
    }
    PolyCurve f;
    f.n = static_cast<int>(raw.size()) - 1;
    f.components.reserve(raw.size());
    for (const auto& p : raw)
        f.components.push_back(p.is_zero() ? p : exact_div(p, g));
    return f;
}

bool is_nondegenerate(const PolyCurve& f) {
    return !wronskian(f.components).is_zero();
}

DerivedCurve derived_curve(const PolyCurve& f, int k) {
    if (k < 0 || k > f.n) throw std::invalid_argument("derived_curve: k out of range");
    if (!is_nondegenerate(f)) throw std::invalid_argument("derived_curve: curve degenerate");
    KVector<RatPoly> raw = f.raw_wedge(k);
    RatPoly g;
    for (const auto& [idx, c] : raw.coords) {
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.degree() == 0) break;
    }
    DerivedCurve d;
    d.k = k;
    d.cancellation = g;
    d.plucker_components = KVector<RatPoly>(k + 1, f.n);
    for (const auto& [idx, c] : raw.coords)
        d.plucker_components.add_term(idx, exact_div(c, g));
    if (g.degree() > 0) d.stationary_divisor = roots_with_multiplicity(g);
    return d;
}

ContractResult contract(const PolyCurve& f, const DecomposableCovector& a) {
    if (a.ambient_n() != f.n) throw std::invalid_argument("contract: ambient mismatch");
    ContractResult r;
    for (const auto& form : a.forms) {
        RatPoly h;
        for (int j = 0; j <= f.n; ++j) h += form[j] * f.components[j];
        r.h.push_back(h);
    }
    RatPoly lhs = pair(a, f.raw_wedge(a.grade() - 1));
    RatPoly rhs = wronskian(r.h);
    r.identity_holds = (lhs == rhs);
    return r;
}

NiceJet nice_coordinates_at(const PolyCurve& f, const GaussianRational& z0) {
    if (!is_nondegenerate(f)) throw std::invalid_argument("nice_coordinates_at: curve degenerate");
    int n = f.n;
    struct Row {
        RatPoly poly;  // shifted to the local coordinate w = z - z0
        std::vector<GaussianRational> combo;
        int orig;
        int ord;
    };
    std::vector<Row> remaining;
    for (int i = 0; i <= n; ++i) {
        Row r;
        r.poly = f.components[i].shifted(z0);
        r.combo.assign(n + 1, GaussianRational(0));
        r.combo[i] = GaussianRational(1);
        r.orig = i;
        r.ord = r.poly.is_zero() ? -1 : ord_at(r.poly, GaussianRational(0));
        remaining.push_back(std::move(r));
    }
    std::vector<Row> selected;
    while (!remaining.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < remaining.size(); ++i) {
            if (remaining[i].ord < remaining[best].ord ||
                (remaining[i].ord == remaining[best].ord && remaining[i].orig < remaining[best].orig))
                best = i;
        }
        Row pivot = std::move(remaining[best]);
        remaining.erase(remaining.begin() + best);
        for (auto& r : remaining) {
            while (r.ord == pivot.ord) {
                GaussianRational c = r.poly.coeff(r.ord) / pivot.poly.coeff(pivot.ord);
                r.poly -= c * pivot.poly;
                for (int j = 0; j <= n; ++j) r.combo[j] -= c * pivot.combo[j];
                if (r.poly.is_zero())
                    throw std::logic_error("nice_coordinates_at: dependent components");
                r.ord = ord_at(r.poly, GaussianRational(0));
            }
        }
        selected.push_back(std::move(pivot));
    }
    NiceJet jet;
    jet.base_point = z0;
    jet.change_of_coordinates.assign(n + 1, std::vector<GaussianRational>(n + 1));
    for (int i = 0; i <= n; ++i) {
        // Unit leading jet coefficient.
        GaussianRational scale = GaussianRational(1) / selected[i].poly.coeff(selected[i].ord);
        selected[i].poly = scale * selected[i].poly;
        for (int j = 0; j <= n; ++j)
            jet.change_of_coordinates[i][j] = scale * selected[i].combo[j];
        jet.exponents.push_back(selected[i].ord);
        jet.local_components.push_back(selected[i].poly);
    }
    return jet;
}

StationaryOrderCheck stationary_order_check(const PolyCurve& f, int k, const GaussianRational& z0) {
    DerivedCurve d = derived_curve(f, k);
    NiceJet jet = nice_coordinates_at(f, z0);
    StationaryOrderCheck out;
    out.lhs = d.cancellation.degree() == 0 ? 0 : ord_at(d.cancellation, z0);
    out.rhs = 0;
    for (int i = 0; i <= k; ++i) out.rhs += jet.exponents[i] - i;
    out.equal = (out.lhs == out.rhs);
    return out;
}

}  // namespace vdt
