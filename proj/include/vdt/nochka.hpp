#pragma once

#include "vdt/exterior.hpp"
#include "vdt/rational.hpp"

#include <optional>
#include <vector>

namespace vdt {

/// Family of q decomposable hyperplanes of P(Lambda^{k+1} C^{n+1}),
/// stored by their defining covectors. subgeneral_N is the parameter
/// such that any subgeneral_N of them have empty intersection.
struct HyperplaneFamily {
    std::vector<DecomposableCovector> covectors;
    int subgeneral_N = 0;

    int q() const { return static_cast<int>(covectors.size()); }
    int grade() const { return covectors.front().grade(); }
    int curve_n() const { return covectors.front().ambient_n(); }
    /// Dimension of the Pluecker coordinate space, C(n+1, k+1).
    long long ambient_dim() const { return binomial(curve_n() + 1, grade()); }

    /// Row i = Pluecker coordinates of covector i, lexicographic order.
    std::vector<std::vector<GaussianRational>> coordinate_matrix() const;

    /// Validates the family invariants (nonzero, pairwise non-proportional).
    void validate() const;
};

/// Nochka weights omega(i) and the Nochka constant omega~ = max omega(i).
struct WeightAssignment {
    std::vector<BigRat> weights;
    BigRat constant;
};

/// Exact rank of the covector coordinate matrix over the rows in R
/// (indices are 0-based here; rank of the empty set is 0).
int rank_of(const HyperplaneFamily& family, const std::vector<int>& subset);

/// True iff every (N+1)-subset of the family spans the full dual space,
/// i.e. the corresponding hyperplanes have empty intersection.
bool is_subgeneral(const HyperplaneFamily& family, int N);

/// Exact-rational feasibility search for Nochka weights satisfying
/// conditions i)-iv) of the weight theorem, with n and N the
/// projective-space parameters (instantiated as n = dim - 1,
/// N = subgeneral_N - 1 when applied to the main theorem).
WeightAssignment compute_weights(const HyperplaneFamily& family, int n, int N);

struct WeightReport {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;
    std::optional<std::vector<int>> failing_subset;  // witness for iv
    bool all() const { return cond_i && cond_ii && cond_iii && cond_iv; }
};

WeightReport verify_weights(const HyperplaneFamily& family, int n, int N,
                            const WeightAssignment& w);

/// Nochka product selection: distinct indices i_1,...,i_{rank(R)} in R
/// with full rank and prod_{i in R} a_i^{omega(i)} <= prod_k a_{i_k}.
/// The power inequality is decided on integers after clearing the common
/// denominator of the weights. Throws if no subset works.
std::vector<int> select_indices(const HyperplaneFamily& family, const WeightAssignment& w,
                                const std::vector<int>& subset, const std::vector<BigRat>& a);

/// All cardinality-m subsets of {0,...,total-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int total, int m);

}  // namespace vdt
