#include "vdt/nochka.hpp"

#include "vdt/simplex.hpp"

#include <numeric>
#include <stdexcept>

namespace vdt {

std::vector<std::vector<int>> subsets_of_size(int total, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > total) return out;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int j = m - 1;
        while (j >= 0 && idx[j] == total - (m - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < m; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

std::vector<std::vector<GaussianRational>> HyperplaneFamily::coordinate_matrix() const {
    std::vector<std::vector<GaussianRational>> rows;
    auto indices = all_multi_indices(curve_n(), grade());
    for (const auto& cv : covectors) {
        std::vector<GaussianRational> row;
        row.reserve(indices.size());
        for (const auto& idx : indices) row.push_back(cv.minor_at(idx));
        rows.push_back(std::move(row));
    }
    return rows;
}

void HyperplaneFamily::validate() const {
    if (covectors.empty()) throw std::invalid_argument("HyperplaneFamily: empty");
    for (const auto& cv : covectors) {
        if (cv.grade() != grade() || cv.ambient_n() != curve_n())
            throw std::invalid_argument("HyperplaneFamily: mixed grades or ambients");
    }
    auto rows = coordinate_matrix();
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) {
            std::vector<std::vector<GaussianRational>> two{rows[i], rows[j]};
            if (rank_scalar(two) < 2)
                throw std::invalid_argument("HyperplaneFamily: proportional covectors");
        }
}

int rank_of(const HyperplaneFamily& family, const std::vector<int>& subset) {
    if (subset.empty()) return 0;
    auto rows = family.coordinate_matrix();
    std::vector<std::vector<GaussianRational>> sel;
    for (int i : subset) {
        if (i < 0 || i >= family.q()) throw std::out_of_range("rank_of: index out of range");
        sel.push_back(rows[i]);
    }
    return rank_scalar(std::move(sel));
}

bool is_subgeneral(const HyperplaneFamily& family, int N) {
    if (family.q() < N + 1) throw std::invalid_argument("is_subgeneral: q < N+1");
    long long full = family.ambient_dim();
    for (const auto& sub : subsets_of_size(family.q(), N + 1))
        if (rank_of(family, sub) != full) return false;
    return true;
}

namespace {

// Rank constraints that are not already implied by 0 <= omega(i) <= 1:
// subsets R with |R| <= N+1 and rank(R) < |R|, deduplicated.
struct RankConstraint {
    std::vector<int> subset;
    int rank;
};

std::vector<RankConstraint> binding_rank_constraints(const HyperplaneFamily& family, int N) {
    std::vector<RankConstraint> out;
    int q = family.q();
    for (int m = 2; m <= std::min(q, N + 1); ++m)
        for (const auto& sub : subsets_of_size(q, m)) {
            int r = rank_of(family, sub);
            if (r < m) out.push_back({sub, r});
        }
    return out;
}

// Base LP skeleton in the variables omega_1..omega_q (all >= 0):
// the rank constraints plus omega_i <= 1.
LinearProgram base_lp(const HyperplaneFamily& family, int q,
                      const std::vector<RankConstraint>& rank_cs) {
    LinearProgram lp;
    lp.objective.assign(q, 0);
    for (int i = 0; i < q; ++i) {
        std::vector<BigRat> row(q, 0);
        row[i] = 1;
        lp.a_le.push_back(row);
        lp.b_le.push_back(1);
    }
    for (const auto& rc : rank_cs) {
        std::vector<BigRat> row(q, 0);
        for (int i : rc.subset) row[i] = 1;
        lp.a_le.push_back(row);
        lp.b_le.push_back(rc.rank);
    }
    (void)family;
    return lp;
}

}  // namespace

WeightAssignment compute_weights(const HyperplaneFamily& family, int n, int N) {
    int q = family.q();
    if (q < 2 * N - n + 1)
        throw std::invalid_argument("compute_weights: q < 2N-n+1");
    if (!is_subgeneral(family, N))
        throw std::invalid_argument("compute_weights: family not in N-subgeneral position");

    BigRat lower{BigInt(n + 1), BigInt(2 * N - n + 1)};
    BigRat upper{BigInt(n), BigInt(N)};
    BigRat sum_coeff(q - 2 * N + n - 1);  // sum omega = omega~ * sum_coeff + (n+1)

    auto rank_cs = binding_rank_constraints(family, N);

    // Stage 1: the largest feasible omega~, trying each attainment pin
    // omega_j = omega~ and maximizing it.
    std::optional<BigRat> best;
    int best_pin = -1;
    for (int j = 0; j < q; ++j) {
        LinearProgram lp = base_lp(family, q, rank_cs);
        for (int i = 0; i < q; ++i) {
            if (i == j) continue;
            std::vector<BigRat> row(q, 0);
            row[i] = 1;
            row[j] = -1;
            lp.a_le.push_back(row);  // omega_i <= omega_j
            lp.b_le.push_back(0);
        }
        {
            std::vector<BigRat> row(q, 0);
            row[j] = 1;
            lp.a_le.push_back(row);
            lp.b_le.push_back(upper);
            std::vector<BigRat> row2(q, 0);
            row2[j] = -1;
            lp.a_le.push_back(row2);
            lp.b_le.push_back(-lower);
        }
        {
            std::vector<BigRat> row(q, 1);
            row[j] -= sum_coeff;
            lp.a_eq.push_back(row);
            lp.b_eq.push_back(BigRat(n + 1));
        }
        lp.objective[j] = 1;
        LpResult res = solve_lp(lp);
        if (res.status != LpStatus::Optimal) continue;
        if (!best || res.value > *best) {
            best = res.value;
            best_pin = j;
        }
    }
    if (!best)
        throw std::logic_error("compute_weights: no feasible Nochka constant (contradicts the weight theorem)");

    // Stage 2: with omega~ fixed and pinned at best_pin, lexicographically
    // maximize the weights by index for a deterministic representative.
    BigRat omega_t = *best;
    BigRat target = omega_t * sum_coeff + BigRat(n + 1);
    std::vector<std::optional<BigRat>> fixed(q);
    fixed[best_pin] = omega_t;
    for (int i = 0; i < q; ++i) {
        if (fixed[i]) continue;
        LinearProgram lp = base_lp(family, q, rank_cs);
        for (int t = 0; t < q; ++t) {
            std::vector<BigRat> row(q, 0);
            row[t] = 1;
            lp.a_le.push_back(row);
            lp.b_le.push_back(omega_t);
        }
        {
            std::vector<BigRat> row(q, 1);
            lp.a_eq.push_back(row);
            lp.b_eq.push_back(target);
        }
        for (int t = 0; t < q; ++t) {
            if (!fixed[t]) continue;
            std::vector<BigRat> row(q, 0);
            row[t] = 1;
            lp.a_eq.push_back(row);
            lp.b_eq.push_back(*fixed[t]);
        }
        lp.objective[i] = 1;
        LpResult res = solve_lp(lp);
        if (res.status != LpStatus::Optimal)
            throw std::logic_error("compute_weights: lexicographic stage infeasible");
        fixed[i] = res.value;
    }

    WeightAssignment w;
    w.constant = omega_t;
    for (int i = 0; i < q; ++i) w.weights.push_back(*fixed[i]);
    return w;
}

WeightReport verify_weights(const HyperplaneFamily& family, int n, int N,
                            const WeightAssignment& w) {
    WeightReport rep;
    int q = family.q();
    rep.cond_i = static_cast<int>(w.weights.size()) == q;
    BigRat maxw = 0, sum = 0;
    for (const auto& x : w.weights) {
        if (x < 0 || x > 1) rep.cond_i = false;
        if (x > maxw) maxw = x;
        sum += x;
    }
    rep.cond_ii = (maxw == w.constant) &&
                  (sum == w.constant * BigRat(q - 2 * N + n - 1) + BigRat(n + 1));
    rep.cond_iii = (w.constant >= BigRat(BigInt(n + 1), BigInt(2 * N - n + 1))) &&
                   (w.constant <= BigRat(BigInt(n), BigInt(N)));
    rep.cond_iv = true;
    for (int m = 1; m <= std::min(q, N + 1) && rep.cond_iv; ++m) {
        for (const auto& sub : subsets_of_size(q, m)) {
            BigRat s = 0;
            for (int i : sub) s += w.weights[i];
            if (s > BigRat(rank_of(family, sub))) {
                rep.cond_iv = false;
                rep.failing_subset = sub;
                break;
            }
        }
    }
    return rep;
}

std::vector<int> select_indices(const HyperplaneFamily& family, const WeightAssignment& w,
                                const std::vector<int>& subset, const std::vector<BigRat>& a) {
    if (subset.empty()) throw std::invalid_argument("select_indices: empty subset");
    for (int i : subset)
        if (a[i] < 1) throw std::invalid_argument("select_indices: a_i < 1");
    int r = rank_of(family, subset);

    // Clear the rational exponents by the common denominator of the weights.
    BigInt den = 1;
    for (int i : subset) den = boost::multiprecision::lcm(den, denominator(w.weights[i]));
    // lhs^den = prod a_i^(omega_i * den)
    BigRat lhs = 1;
    for (int i : subset) {
        BigRat e = w.weights[i] * BigRat(den);
        lhs *= pow_rat(a[i], static_cast<unsigned long>(numerator(e)));
    }
    int m = static_cast<int>(subset.size());
    for (const auto& pick : subsets_of_size(m, r)) {
        std::vector<int> cand;
        for (int p : pick) cand.push_back(subset[p]);
        if (rank_of(family, cand) != r) continue;
        BigRat prod = 1;
        for (int i : cand) prod *= a[i];
        if (lhs <= pow_rat(prod, static_cast<unsigned long>(den))) return cand;
    }
    throw std::logic_error("select_indices: exhaustive search failed (falsifies the product estimate)");
}

}  // namespace vdt
