#include "vdt/smtlab.hpp"

#include <stdexcept>

namespace vdt {

SmtProblem::SmtProblem(PolyCurve curve_, int k_, HyperplaneFamily family_, RadialGrid grid_)
    : curve(std::move(curve_)), k(k_), family(std::move(family_)), grid(std::move(grid_)) {
    if (!is_nondegenerate(curve))
        throw std::invalid_argument("SmtProblem: curve degenerate: Wronskian vanishes identically");
    if (family.grade() != k + 1 || family.curve_n() != curve.n)
        throw std::invalid_argument("SmtProblem: family does not match (curve n, k)");
    family.validate();
    if (!is_subgeneral(family, family.subgeneral_N - 1))
        throw std::invalid_argument("SmtProblem: family not in (N_frak - 1)-subgeneral position");
    derived = derived_curve(curve, k);
    truncation = (k + 1) * (curve.n - k);
    for (const auto& cv : family.covectors) {
        RatPoly c = pair(cv, derived.plucker_components);
        if (c.is_zero())
            throw std::invalid_argument("SmtProblem: A_i* o F_k vanishes identically");
        compositions.push_back(std::move(c));
    }
    int nn = static_cast<int>(dim_n());
    int nN = static_cast<int>(dim_N());
    weights = compute_weights(family, nn - 1, nN - 1);
}

int weight_w(const MultiIndex& idx) { return idx.weight(); }

OrderBoundCheck wij_order_bound_check(const PolyCurve& f, int k, const MultiIndex& i_idx,
                                      const MultiIndex& j_idx, const GaussianRational& z0) {
    if (i_idx.grade() != k + 1 || j_idx.grade() != k + 1)
        throw std::invalid_argument("wij_order_bound_check: index cardinality != k+1");
    NiceJet jet = nice_coordinates_at(f, z0);
    // W(I,J) in nice coordinates: rows are the derivative orders in I,
    // columns the transformed components in J, at the local origin.
    std::vector<std::vector<RatPoly>> m(k + 1, std::vector<RatPoly>(k + 1));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            m[a][b] = jet.local_components[j_idx.entries[b]].derivative(i_idx.entries[a]);
    RatPoly w = det_poly(std::move(m));
    DerivedCurve d = derived_curve(f, k);
    int dk = d.cancellation.degree() == 0 ? 0 : ord_at(d.cancellation, z0);
    OrderBoundCheck out;
    out.bound = std::max(0, dk - i_idx.weight() + j_idx.weight());
    if (w.is_zero()) {
        // Identically zero determinant has infinite order; the bound holds.
        out.ord = -1;
        out.holds = true;
        return out;
    }
    out.ord = ord_at(w, GaussianRational(0));
    out.holds = out.ord >= out.bound;
    return out;
}

namespace {

// det(W) by Sylvester-Franke, cross-checked against the determinant of the
// compound matrix of the derivative matrix. A mismatch means a harness bug.
RatPoly det_w(const PolyCurve& f, int k) {
    RatPoly w = wronskian(f.components);
    RatPoly via_sf = w.pow(static_cast<unsigned>(binomial(f.n, k)));
    auto rows = f.derivative_rows(f.n);
    RatPoly via_compound = det_poly(compound_matrix(rows, k));
    if (via_sf != via_compound)
        throw std::logic_error("det_w: Sylvester-Franke and compound routes disagree (harness bug)");
    return via_sf;
}

}  // namespace

DetWBoundCheck detw_bound_check(const PolyCurve& f, int k) {
    if (!is_nondegenerate(f)) throw std::invalid_argument("detw_bound_check: curve degenerate");
    RatPoly dw = det_w(f, k);
    DerivedCurve d = derived_curve(f, k);
    int nn = static_cast<int>(binomial(f.n + 1, k + 1));
    DetWBoundCheck out;
    if (dw.degree() > 0) out.lhs_divisor = roots_with_multiplicity(dw);
    DivisorOnC rhs = d.stationary_divisor;
    for (auto& pt : rhs.points) pt.multiplicity *= nn;
    out.rhs_divisor = rhs;
    // Pointwise divisor inequality == exact divisibility by g^n_frak.
    RatPoly g_pow = d.cancellation.pow(static_cast<unsigned>(nn));
    auto [quo, rem] = divmod(dw, g_pow);
    (void)quo;
    out.holds = rem.is_zero();
    return out;
}

DivisorInequalityReport nochka_divisor_inequality_check(const SmtProblem& problem) {
    RatPoly dw = det_w(problem.curve, problem.k);
    const RatPoly& g = problem.derived.cancellation;
    long long nn = problem.dim_n();

    std::vector<RatPoly> relevant;
    if (dw.degree() > 0) relevant.push_back(dw);
    if (g.degree() > 0) relevant.push_back(g);
    for (const auto& c : problem.compositions)
        if (c.degree() > 0) relevant.push_back(c);

    DivisorInequalityReport rep;
    for (const auto& cluster : coprime_basis(relevant)) {
        DivisorMarginRow row;
        row.cluster = cluster;
        for (const auto& z : roots_squarefree(cluster)) row.locations.push_back(z);
        long long ord_dw = dw.degree() > 0 ? multiplicity_of_factor(dw, cluster) : 0;
        long long ord_g = g.degree() > 0 ? multiplicity_of_factor(g, cluster) : 0;
        BigRat rhs = BigRat(nn) * BigRat(ord_g);
        for (int i = 0; i < problem.family.q(); ++i) {
            const RatPoly& c = problem.compositions[i];
            long long ord = c.degree() > 0 ? multiplicity_of_factor(c, cluster) : 0;
            long long excess = ord - problem.truncation;
            if (excess > 0) rhs += problem.weights.weights[i] * BigRat(excess);
        }
        row.margin = BigRat(ord_dw) - rhs;
        if (row.margin < 0) rep.holds = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

bool log_wronskian_identity_check(const PolyCurve& f, int k) {
    const RatPoly& f0 = f.components[0];
    if (f0.is_zero())
        throw std::invalid_argument(
            "log_wronskian_identity_check: f_0 identically zero (permute coordinates first)");
    int n = f.n;
    // p[i][j] is the numerator of (f_j/f_0)^(i) over f_0^{i+1}:
    //   p[i+1][j] = p[i][j]' f_0 - (i+1) p[i][j] f_0'.
    std::vector<std::vector<RatPoly>> p(n + 1, std::vector<RatPoly>(n + 1));
    p[0] = f.components;
    RatPoly df0 = f0.derivative();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j)
            p[i + 1][j] = p[i][j].derivative() * f0 - GaussianRational(i + 1) * (p[i][j] * df0);

    // Componentwise identity: W_log(J) = f_0^{-(k+1)} W(J), cross-multiplied:
    //   det(p[i][j])_{i=0..k, j in J} = f_0^{k(k+1)/2} W(J).
    unsigned comp_exp = static_cast<unsigned>(k * (k + 1) / 2);
    RatPoly f0_comp = f0.pow(comp_exp);
    for (const auto& j_idx : all_multi_indices(n, k + 1)) {
        std::vector<std::vector<RatPoly>> m(k + 1, std::vector<RatPoly>(k + 1));
        std::vector<RatPoly> cols;
        for (int b = 0; b <= k; ++b) cols.push_back(f.components[j_idx.entries[b]]);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) m[a][b] = p[a][j_idx.entries[b]];
        if (det_poly(std::move(m)) != f0_comp * wronskian(cols)) return false;
    }

    // Determinant identity: det(W_log) = f_0^{-(k+1) n_frak} det(W).
    // Row I of the compound of p carries f_0^{-sum_{i in I}(i+1)}, so the
    // cross-multiplied form is det(compound(p)) = f_0^{E - (k+1) n_frak} det(W)
    // with E = sum_I sum_{i in I} (i+1).
    long long nn = binomial(n + 1, k + 1);
    long long e_total = 0;
    for (const auto& i_idx : all_multi_indices(n, k + 1))
        for (int i : i_idx.entries) e_total += i + 1;
    long long exponent = e_total - (k + 1) * nn;
    if (exponent < 0) throw std::logic_error("log_wronskian_identity_check: negative exponent");
    RatPoly lhs = det_poly(compound_matrix(p, k));
    RatPoly rhs = f0.pow(static_cast<unsigned>(exponent)) * det_w(f, k);
    return lhs == rhs;
}

RadialReport smt_report(const SmtProblem& problem) {
    RadialReport rep;
    rep.columns = {"r", "T_Fk", "N_trunc_sum", "lhs", "rhs", "slack"};
    long long coeff = problem.smt_coefficient();
    if (coeff <= 0) {
        rep.note = "vacuous";
        rep.passed = true;
        return rep;
    }
    std::vector<RatPoly> coords = problem.derived.coordinate_list();
    std::vector<DivisorOnC> divisors;
    for (const auto& c : problem.compositions)
        divisors.push_back(c.degree() > 0 ? pullback_divisor(c) : DivisorOnC{});
    for (double r : problem.grid.radii) {
        double t = order_T(coords, r);
        double nsum = 0;
        for (const auto& d : divisors) nsum += counting_N(d, problem.truncation, r);
        double lhs = static_cast<double>(coeff) * t;
        double slack = nsum - lhs;
        rep.rows.push_back({r, t, nsum, lhs, nsum, slack});
    }
    // Boundedness proxy for S_Fk = O(1): no later slack may drop more than
    // 0.1 below the slack at the reference radius 100 (or the first radius
    // when the grid starts beyond it).
    size_t ref = 0;
    for (size_t i = 0; i < problem.grid.radii.size(); ++i)
        if (problem.grid.radii[i] <= 100.0) ref = i;
    double ref_slack = rep.rows.empty() ? 0.0 : rep.rows[ref][5];
    for (size_t i = ref; i < rep.rows.size(); ++i)
        if (rep.rows[i][5] < ref_slack - 0.1) rep.passed = false;
    return rep;
}

DefectRelationReport defect_relation_report(const SmtProblem& problem) {
    DefectRelationReport rep;
    int dk = problem.derived.max_degree();
    for (const auto& c : problem.compositions) {
        DivisorOnC d = c.degree() > 0 ? pullback_divisor(c) : DivisorOnC{};
        rep.defects.push_back(exact_defect(d, problem.truncation, dk));
    }
    rep.sum_of_defects = 0;
    for (const auto& x : rep.defects) rep.sum_of_defects += x;
    rep.bound = 2 * problem.dim_N() - problem.dim_n();
    rep.holds = rep.sum_of_defects <= BigRat(rep.bound);
    return rep;
}

RamificationReport ramification_report(const SmtProblem& problem) {
    RamificationReport rep;
    rep.lhs = 0;
    for (const auto& c : problem.compositions) {
        DivisorOnC d = c.degree() > 0 ? pullback_divisor(c) : DivisorOnC{};
        if (d.empty()) {
            rep.mu.push_back(std::nullopt);
            rep.lhs += 1;  // (1 - x/infinity) = 1
        } else {
            int mu = d.min_multiplicity();
            rep.mu.push_back(mu);
            rep.lhs += BigRat(1) - BigRat(BigInt(problem.truncation), BigInt(mu));
        }
    }
    rep.bound = 2 * problem.dim_N() - problem.dim_n();
    rep.holds = rep.lhs <= BigRat(rep.bound);
    return rep;
}

}  // namespace vdt
