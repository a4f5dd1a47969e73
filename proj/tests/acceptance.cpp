// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include "vdt/corpus.hpp"
#include "vdt/json_io.hpp"
#include "vdt/smtlab.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

using namespace vdt;

namespace {

// Tolerances pinned for the acceptance gate.
constexpr double kSlackTolerance = 0.1;        // SMT slack boundedness margin
constexpr double kPipelineMatchTol = 1e-9;     // k=0 degeneration, term-for-term
constexpr double kFmtCoordinateTol = 1e-6;     // FMT oscillation, exact cases
constexpr double kFmtRandomTol = 0.5;          // FMT oscillation, random corpus

std::mt19937_64 g_rng(20240817);

GaussianRational rnd_gr(int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    return GaussianRational(d(g_rng), d(g_rng));
}

RatPoly ipoly(std::initializer_list<std::int64_t> coeffs) {
    std::vector<GaussianRational> c;
    for (auto x : coeffs) c.emplace_back(x);
    return RatPoly(std::move(c));
}

RatPoly zp(int e) { return RatPoly::monomial(GaussianRational(1), e); }

bool criterion_exterior_identities() {
    int done = 0;
    while (done < 200) {
        std::uniform_int_distribution<int> nd(1, 4);
        int n = nd(g_rng);
        std::uniform_int_distribution<int> kd(0, n);
        int k = kd(g_rng);
        // Sylvester-Franke on a random square matrix.
        std::vector<std::vector<GaussianRational>> m(n + 1,
                                                     std::vector<GaussianRational>(n + 1));
        for (auto& row : m)
            for (auto& x : row) x = rnd_gr(2);
        GaussianRational det = det_scalar(m);
        if (det_scalar(compound_matrix(m, k)) !=
            pow_gr(det, static_cast<unsigned long>(binomial(n, k))))
            return false;
        // Cauchy-Binet pairing: covector forms vs wedge of vectors.
        std::vector<std::vector<GaussianRational>> forms, vecs;
        forms.assign(k + 1, std::vector<GaussianRational>(n + 1));
        int guard = 0;
        do {
            for (auto& row : forms)
                for (auto& x : row) x = rnd_gr(2);
        } while (rank_scalar(forms) < k + 1 && ++guard < 100);
        if (rank_scalar(forms) < k + 1) continue;
        vecs.assign(k + 1, std::vector<GaussianRational>(n + 1));
        for (auto& row : vecs)
            for (auto& x : row) x = rnd_gr(2);
        DecomposableCovector a(forms);
        std::vector<std::vector<GaussianRational>> prod(
            k + 1, std::vector<GaussianRational>(k + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (int c = 0; c <= n; ++c) prod[i][j] += forms[i][c] * vecs[j][c];
        if (pair(a, plucker_of_vectors(vecs)) != det_scalar(prod)) return false;
        ++done;
    }
    return true;
}

bool criterion_derived_curves() {
    int base_points_checked = 0;
    for (int t = 0; t < 25; ++t) {
        PolyCurve f = random_curve(g_rng, 2, 4, 2);
        for (int k = 1; k <= 2; ++k) {
            DerivedCurve d = derived_curve(f, k);
            KVector<RatPoly> raw = f.raw_wedge(k);
            RatPoly common;
            bool first = true;
            for (const auto& idx : all_multi_indices(f.n, k + 1)) {
                if (d.cancellation * d.plucker_components.coord(idx) != raw.coord(idx))
                    return false;
                const RatPoly& c = d.plucker_components.coord(idx);
                if (!c.is_zero()) {
                    common = first ? c : poly_gcd(common, c);
                    first = false;
                }
            }
            if (common.degree() != 0) return false;
            // Stationary-order equality at designed base points: all exact
            // stationary points plus one regular point.
            std::vector<GaussianRational> pts = {rnd_gr(1)};
            for (const auto& p : d.stationary_divisor.points)
                if (p.exact) pts.push_back(*p.exact_location);
            for (const auto& z0 : pts) {
                if (!stationary_order_check(f, k, z0).equal) return false;
                ++base_points_checked;
            }
        }
    }
    return base_points_checked >= 50;
}

HyperplaneFamily points_of_p1(int q) {
    HyperplaneFamily fam;
    fam.subgeneral_N = 3;
    std::vector<std::vector<GaussianRational>> rows = {
        {1, 0}, {0, 1}, {1, -1}, {1, 1}, {1, -2}, {1, 2}, {2, -1}, {3, 1}};
    for (int i = 0; i < q; ++i)
        fam.covectors.emplace_back(std::vector<std::vector<GaussianRational>>{rows[i]});
    return fam;
}

bool criterion_nochka_weights() {
    int families = 0;
    // General-position families: weights must be identically 1.
    for (int t = 0; t < 12; ++t) {
        HyperplaneFamily fam = random_family(g_rng, 2, 0, 5 + (t % 3), 0, 3);
        int n = static_cast<int>(fam.ambient_dim()) - 1;
        int N = fam.subgeneral_N - 1;
        WeightAssignment w = compute_weights(fam, n, N);
        if (w.constant != BigRat(1)) return false;
        for (const auto& x : w.weights)
            if (x != BigRat(1)) return false;
        if (!verify_weights(fam, n, N, w).all()) return false;
        ++families;
    }
    // Genuinely subgeneral families (N > n).
    for (int t = 0; t < 20 && families < 32; ++t) {
        HyperplaneFamily fam;
        try {
            fam = random_family(g_rng, 2, 0, 7, 4, 3);
        } catch (const std::runtime_error&) {
            continue;
        }
        int n = static_cast<int>(fam.ambient_dim()) - 1;  // 2
        int N = fam.subgeneral_N - 1;                     // 3
        WeightAssignment w = compute_weights(fam, n, N);
        if (!verify_weights(fam, n, N, w).all()) return false;
        ++families;
    }
    // Points of P^1 with N = 2 (n = 1, q in 5..8): includes the forced
    // case q = 5 where the Nochka constant is exactly 1/2.
    for (int q = 5; q <= 8; ++q) {
        HyperplaneFamily fam = points_of_p1(q);
        WeightAssignment w = compute_weights(fam, 1, 2);
        if (!verify_weights(fam, 1, 2, w).all()) return false;
        if (q == 5 && w.constant != BigRat(1, 2)) return false;
        ++families;
    }
    return families >= 30;
}

bool criterion_select_indices() {
    std::uniform_int_distribution<int> num(1, 10);
    std::vector<HyperplaneFamily> fams;
    fams.push_back(points_of_p1(5));
    fams.push_back(random_family(g_rng, 2, 0, 6, 4, 3));
    for (auto& fam : fams) {
        int n = static_cast<int>(fam.ambient_dim()) - 1;
        int N = fam.subgeneral_N - 1;
        WeightAssignment w = compute_weights(fam, n, N);
        BigInt den = 1;
        for (const auto& x : w.weights)
            den = boost::multiprecision::lcm(den, denominator(x));
        for (int t = 0; t < 20; ++t) {
            std::vector<BigRat> a(fam.q());
            for (auto& x : a) x = BigRat(num(g_rng));
            for (int m = 1; m <= std::min(fam.q(), N + 1); ++m) {
                for (const auto& sub : subsets_of_size(fam.q(), m)) {
                    std::vector<int> got = select_indices(fam, w, sub, a);
                    // Independent oracle: first lexicographic full-rank
                    // subset of size rank(R) satisfying the cleared-power
                    // inequality.
                    int r = rank_of(fam, sub);
                    BigRat lhs = 1;
                    for (int i : sub)
                        lhs *= pow_rat(a[i], static_cast<unsigned long>(
                                                 numerator(w.weights[i] * BigRat(den))));
                    std::vector<int> expect;
                    for (const auto& pick : subsets_of_size(m, r)) {
                        std::vector<int> cand;
                        for (int p : pick) cand.push_back(sub[p]);
                        if (rank_of(fam, cand) != r) continue;
                        BigRat prod = 1;
                        for (int i : cand) prod *= a[i];
                        if (lhs <= pow_rat(prod, static_cast<unsigned long>(den))) {
                            expect = cand;
                            break;
                        }
                    }
                    if (expect.empty() || got != expect) return false;
                }
            }
        }
    }
    return true;
}

HyperplaneFamily coordinate_lines_p2() {
    HyperplaneFamily fam;
    fam.subgeneral_N = 3;
    for (auto row : std::vector<std::vector<GaussianRational>>{
             {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}})
        fam.covectors.emplace_back(std::vector<std::vector<GaussianRational>>{row});
    return fam;
}

bool criterion_divisor_inequality() {
    std::vector<SmtProblem> problems;
    int exceeding = 0;
    RadialGrid grid({2, 10});

    // Designed: contact order 3 > truncation 2 at z = 0.
    problems.emplace_back(PolyCurve{2, {ipoly({1}), ipoly({0, 1}), zp(3)}}, 0,
                          coordinate_lines_p2(), grid);
    // Designed: contact order 4 > truncation 2.
    problems.emplace_back(PolyCurve{2, {ipoly({1}), ipoly({0, 1}), zp(4)}}, 0,
                          coordinate_lines_p2(), grid);
    // Designed: derived-curve contact z^3 with truncation 2 at k = 1.
    {
        HyperplaneFamily fam;
        fam.subgeneral_N = 3;
        fam.covectors.emplace_back(
            std::vector<std::vector<GaussianRational>>{{1, 0, 0}, {0, 1, 0}});
        fam.covectors.emplace_back(
            std::vector<std::vector<GaussianRational>>{{1, 0, 0}, {0, 0, 1}});
        fam.covectors.emplace_back(
            std::vector<std::vector<GaussianRational>>{{0, 1, 0}, {0, 0, 1}});
        problems.emplace_back(PolyCurve{2, {ipoly({1}), zp(2), zp(3)}}, 1, fam, grid);
    }
    for (const auto& p : problems) {
        for (const auto& comp : p.compositions)
            for (const auto& [factor, mult] : squarefree_decompose(comp))
                if (factor.degree() >= 1 && mult > p.truncation) ++exceeding;
    }
    // The three designed problems must actually exercise the positive part.
    bool designed_exceed = exceeding >= 3;

    while (problems.size() < 10) {
        CorpusParams params;
        params.n = 2;
        params.k = static_cast<int>(problems.size() % 2);
        params.q = 5;
        params.max_deg = 3;
        params.coeff_range = 2;
        ProblemFile pf = random_problem(g_rng, params);
        problems.emplace_back(pf.curve, pf.k, pf.family, grid);
    }

    for (const auto& p : problems) {
        auto rep = nochka_divisor_inequality_check(p);
        if (!rep.holds) return false;
        for (const auto& row : rep.rows)
            if (row.margin < 0) return false;
    }
    return designed_exceed;
}

bool criterion_log_identities() {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            if ((n + 1) * binomial(n, k) != (k + 1) * binomial(n + 1, k + 1)) return false;
    for (int t = 0; t < 10; ++t) {
        PolyCurve f = random_curve(g_rng, 2, 3, 2);
        if (f.components[0].is_zero()) continue;
        for (int k = 0; k <= 2; ++k)
            if (!log_wronskian_identity_check(f, k)) return false;
    }
    // Nonconstant leading component.
    if (!log_wronskian_identity_check({2, {ipoly({0, 1}), ipoly({1}), zp(2)}}, 1)) return false;
    return true;
}

bool criterion_smt_slack() {
    RadialGrid grid(default_grid());
    for (int t = 0; t < 4; ++t) {
        CorpusParams params;
        params.n = 2;
        params.k = t % 2;
        params.q = 5;  // q - 2*3 + 3 = 2 > 0: nonvacuous
        params.max_deg = 3;
        params.coeff_range = 2;
        ProblemFile pf = random_problem(g_rng, params);
        SmtProblem p(pf.curve, pf.k, pf.family, grid);
        if (p.smt_coefficient() <= 0) return false;
        RadialReport rep = smt_report(p);
        if (!rep.passed) return false;
        // Re-derive the boundedness proxy from the rows.
        double ref = 0;
        bool have_ref = false;
        for (size_t i = 0; i < grid.radii.size(); ++i) {
            double slack = rep.rows[i].back();
            if (grid.radii[i] <= 100.0 + 1e-9) {
                ref = slack;
                have_ref = true;
            } else if (have_ref && slack < ref - kSlackTolerance) {
                return false;
            }
        }
    }
    return true;
}

bool criterion_cartan_nochka_degeneration() {
    RadialGrid grid({2, 10, 100, 1e3});
    for (int t = 0; t < 3; ++t) {
        CorpusParams params;
        params.n = 2;
        params.k = 0;
        params.q = 6;
        params.max_deg = 3;
        params.coeff_range = 2;
        ProblemFile pf = random_problem(g_rng, params);
        SmtProblem p(pf.curve, 0, pf.family, grid);
        RadialReport rep = smt_report(p);
        double coeff = static_cast<double>(p.smt_coefficient());
        for (size_t i = 0; i < grid.radii.size(); ++i) {
            double r = grid.radii[i];
            // Direct Cartan-Nochka computation on f itself.
            double t_direct = order_T(pf.curve.components, r);
            double n_direct = 0;
            for (int j = 0; j < pf.family.q(); ++j) {
                RatPoly comp;
                for (int c = 0; c <= pf.curve.n; ++c)
                    comp += pf.family.covectors[j].forms[0][c] * pf.curve.components[c];
                n_direct += counting_N(pullback_divisor(comp), p.truncation, r);
            }
            if (std::abs(rep.rows[i][1] - t_direct) > kPipelineMatchTol) return false;
            if (std::abs(rep.rows[i][2] - n_direct) > kPipelineMatchTol) return false;
            if (std::abs(rep.rows[i][3] - coeff * t_direct) > kPipelineMatchTol) return false;
            if (std::abs(rep.rows[i][4] - n_direct) > kPipelineMatchTol) return false;
        }
    }
    return true;
}

bool criterion_defect_relation() {
    // Worked example: F_1 of the parabola against the coordinate covectors.
    {
        PolyCurve f{2, {ipoly({1}), ipoly({0, 1}), zp(2)}};
        HyperplaneFamily fam;
        fam.subgeneral_N = 3;
        fam.covectors.emplace_back(
            std::vector<std::vector<GaussianRational>>{{1, 0, 0}, {0, 1, 0}});
        fam.covectors.emplace_back(
            std::vector<std::vector<GaussianRational>>{{1, 0, 0}, {0, 0, 1}});
        fam.covectors.emplace_back(
            std::vector<std::vector<GaussianRational>>{{0, 1, 0}, {0, 0, 1}});
        SmtProblem p(f, 1, fam, RadialGrid({2, 10}));
        auto rep = defect_relation_report(p);
        if (rep.defects != std::vector<BigRat>{BigRat(1), BigRat(1, 2), BigRat(0)}) return false;
        if (rep.sum_of_defects != BigRat(3, 2) || rep.bound != 3 || !rep.holds) return false;
    }
    for (int t = 0; t < 4; ++t) {
        CorpusParams params;
        params.n = 2;
        params.k = t % 2;
        params.q = 5;
        params.max_deg = 3;
        params.coeff_range = 2;
        ProblemFile pf = random_problem(g_rng, params);
        SmtProblem p(pf.curve, pf.k, pf.family, RadialGrid({2, 10}));
        auto rep = defect_relation_report(p);
        if (!rep.holds) return false;
        for (const auto& d : rep.defects)
            if (d < 0 || d > 1) return false;
    }
    return true;
}

bool criterion_ramification() {
    // Designed doubled-contact instance with a disjoint hyperplane.
    {
        PolyCurve f{2, {ipoly({1}), zp(2), zp(4)}};
        SmtProblem p(f, 0, coordinate_lines_p2(), RadialGrid({2, 10}));
        auto rep = ramification_report(p);
        // Covector order in coordinate_lines_p2: z_2, z_0, z_1, sum.
        if (rep.mu.size() != 4) return false;
        if (rep.mu[0] != 4) return false;                 // z^4
        if (rep.mu[1].has_value()) return false;          // composition 1: disjoint
        if (rep.mu[2] != 2) return false;                 // z^2
        if (rep.mu[3] != 1) return false;                 // 1 + z^2 + z^4
        if (rep.lhs != BigRat(1, 2) || !rep.holds) return false;
    }
    for (int t = 0; t < 4; ++t) {
        CorpusParams params;
        params.n = 2;
        params.k = t % 2;
        params.q = 5;
        params.max_deg = 3;
        params.coeff_range = 2;
        ProblemFile pf = random_problem(g_rng, params);
        SmtProblem p(pf.curve, pf.k, pf.family, RadialGrid({2, 10}));
        if (!ramification_report(p).holds) return false;
    }
    return true;
}

bool criterion_fmt() {
    RadialGrid grid({2, 10, 100, 1e3, 1e4, 1e5, 1e6});
    // Coordinate-hyperplane cases: deviation exactly representable.
    struct Case {
        PolyCurve f;
        std::vector<GaussianRational> form;
    };
    std::vector<Case> exact_cases = {
        {{1, {ipoly({1}), ipoly({0, 1})}}, {GaussianRational(0), GaussianRational(1)}},
        {{1, {ipoly({1}), ipoly({0, 1})}}, {GaussianRational(1), GaussianRational(0)}},
        {{2, {ipoly({1}), ipoly({0, 1}), zp(2)}},
         {GaussianRational(0), GaussianRational(0), GaussianRational(1)}},
    };
    for (const auto& c : exact_cases) {
        RadialReport rep = fmt_report(c.f, c.form, grid);
        double lo = rep.rows[0].back(), hi = lo;
        for (const auto& row : rep.rows) {
            lo = std::min(lo, row.back());
            hi = std::max(hi, row.back());
        }
        if (hi - lo >= kFmtCoordinateTol) return false;
    }
    // Random cases: oscillation below the corpus tolerance.
    for (int t = 0; t < 5; ++t) {
        PolyCurve f = random_curve(g_rng, 2, 3, 2);
        std::vector<GaussianRational> form(3);
        RatPoly comp;
        do {
            for (auto& x : form) x = rnd_gr(2);
            comp = RatPoly();
            for (int j = 0; j <= 2; ++j) comp += form[j] * f.components[j];
        } while (comp.is_zero());
        RadialReport rep = fmt_report(f, form, grid);
        double lo = rep.rows[0].back(), hi = lo;
        for (const auto& row : rep.rows) {
            lo = std::min(lo, row.back());
            hi = std::max(hi, row.back());
        }
        if (hi - lo >= kFmtRandomTol) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria = {
        {"1. exterior identities (compound determinant, pairing)", criterion_exterior_identities},
        {"2. derived-curve factorization and stationary orders", criterion_derived_curves},
        {"3. weight conditions i-iv, forced constants", criterion_nochka_weights},
        {"4. product index selection vs exhaustive oracle", criterion_select_indices},
        {"5. divisor inequality margins (incl. high contact)", criterion_divisor_inequality},
        {"6. logarithmic identities and exponent bookkeeping", criterion_log_identities},
        {"7. main-theorem slack boundedness", criterion_smt_slack},
        {"8. k=0 degeneration vs direct computation", criterion_cartan_nochka_degeneration},
        {"9. defect relation (exact rationals)", criterion_defect_relation},
        {"10. ramification inequality (incl. doubled contact)", criterion_ramification},
        {"11. first-main-theorem deviation boundedness", criterion_fmt},
    };
    bool all = true;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << c.name << ": FAIL (exception: " << e.what() << ")\n";
            all = false;
            continue;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << c.name << ": " << (ok ? "pass" : "FAIL") << " (" << ms << " ms)\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}
