#pragma once

#include "vdt/ratpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace vdt {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Strictly increasing subset of {0,...,n}, the index I of a Pluecker
/// coordinate. Ranked lexicographically among all subsets of the same
/// cardinality, so the rank of {0,...,k} is 0.
struct MultiIndex {
    std::vector<int> entries;
    int ambient_n = 0;

    MultiIndex() = default;
    MultiIndex(std::vector<int> e, int n) : entries(std::move(e)), ambient_n(n) {
        for (size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] < 0 || entries[i] > n)
                throw std::invalid_argument("MultiIndex: entry out of range");
            if (i > 0 && entries[i] <= entries[i - 1])
                throw std::invalid_argument("MultiIndex: entries not strictly increasing");
        }
    }

    int grade() const { return static_cast<int>(entries.size()); }

    /// Zero-based lexicographic rank among subsets of the same cardinality.
    long long rank() const {
        long long r = 0;
        int k = grade() - 1, prev = -1;
        for (int j = 0; j <= k; ++j) {
            for (int t = prev + 1; t < entries[j]; ++t) r += binomial(ambient_n - t, k - j);
            prev = entries[j];
        }
        return r;
    }

    /// w(I) = sum (i_j - j), the staircase deficiency.
    int weight() const {
        int w = 0;
        for (size_t j = 0; j < entries.size(); ++j) w += entries[j] - static_cast<int>(j);
        return w;
    }

    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.entries < b.entries; }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.entries == b.entries && a.ambient_n == b.ambient_n;
    }
};

/// All cardinality-`grade` subsets of {0,...,n} in lexicographic order.
inline std::vector<MultiIndex> all_multi_indices(int n, int grade) {
    std::vector<MultiIndex> out;
    if (grade < 0 || grade > n + 1) return out;
    std::vector<int> idx(grade);
    for (int i = 0; i < grade; ++i) idx[i] = i;
    while (true) {
        out.emplace_back(idx, n);
        int j = grade - 1;
        while (j >= 0 && idx[j] == n - (grade - 1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int t = j + 1; t < grade; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

template <class C>
C coeff_from_scalar(const GaussianRational& s);
template <>
inline GaussianRational coeff_from_scalar<GaussianRational>(const GaussianRational& s) { return s; }
template <>
inline RatPoly coeff_from_scalar<RatPoly>(const GaussianRational& s) { return RatPoly::constant(s); }

inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatPoly& c) { return c.is_zero(); }

/// Determinant over the exact scalar field.
inline GaussianRational det_scalar(std::vector<std::vector<GaussianRational>> m) {
    size_t n = m.size();
    GaussianRational det(1);
    for (size_t p = 0; p < n; ++p) {
        size_t s = p;
        while (s < n && m[s][p].is_zero()) ++s;
        if (s == n) return GaussianRational(0);
        if (s != p) {
            std::swap(m[p], m[s]);
            det = -det;
        }
        det *= m[p][p];
        for (size_t i = p + 1; i < n; ++i) {
            GaussianRational f = m[i][p] / m[p][p];
            for (size_t j = p; j < n; ++j) m[i][j] -= f * m[p][j];
        }
    }
    return det;
}

inline GaussianRational determinant(std::vector<std::vector<GaussianRational>> m) {
    return det_scalar(std::move(m));
}
inline RatPoly determinant(std::vector<std::vector<RatPoly>> m) { return det_poly(std::move(m)); }

/// Rank of a rectangular matrix over the Gaussian rationals.
inline int rank_scalar(std::vector<std::vector<GaussianRational>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            GaussianRational f = m[i][col] / m[rank][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Element of Lambda^grade(C^{n+1}) in Pluecker coordinates. The
/// coefficient type is generic: exact scalars for hyperplane data,
/// polynomials for Wronskian matrices.
template <class C>
struct KVector {
    int grade_ = 0;
    int ambient_n = 0;
    std::map<MultiIndex, C> coords;

    KVector() = default;
    KVector(int grade, int n) : grade_(grade), ambient_n(n) {}

    int grade() const { return grade_; }
    bool is_zero() const { return coords.empty(); }

    void add_term(const MultiIndex& idx, C c) {
        if (coeff_is_zero(c)) return;
        auto it = coords.find(idx);
        if (it == coords.end()) {
            coords.emplace(idx, std::move(c));
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) coords.erase(it);
        }
    }

    C coord(const MultiIndex& idx) const {
        auto it = coords.find(idx);
        return it == coords.end() ? C{} : it->second;
    }

    static KVector basis(const MultiIndex& idx) {
        KVector v(idx.grade(), idx.ambient_n);
        v.add_term(idx, coeff_from_scalar<C>(GaussianRational(1)));
        return v;
    }

    friend KVector operator+(const KVector& a, const KVector& b) {
        KVector r = a;
        for (const auto& [idx, c] : b.coords) r.add_term(idx, c);
        return r;
    }
    friend KVector operator*(const C& s, const KVector& a) {
        KVector r(a.grade_, a.ambient_n);
        for (const auto& [idx, c] : a.coords) r.add_term(idx, s * c);
        return r;
    }
    friend bool operator==(const KVector& a, const KVector& b) {
        return a.grade_ == b.grade_ && a.ambient_n == b.ambient_n && a.coords == b.coords;
    }
};

/// Graded-anticommutative wedge product in Pluecker coordinates.
template <class C>
KVector<C> wedge(const KVector<C>& u, const KVector<C>& v) {
    if (u.ambient_n != v.ambient_n) throw std::invalid_argument("wedge: ambient mismatch");
    if (u.grade() + v.grade() > u.ambient_n + 1)
        throw std::invalid_argument("wedge: grade overflow");
    KVector<C> r(u.grade() + v.grade(), u.ambient_n);
    for (const auto& [iu, cu] : u.coords) {
        for (const auto& [iv, cv] : v.coords) {
            // Merge the two index sets; a repeated index kills the term.
            std::vector<int> merged;
            merged.reserve(iu.entries.size() + iv.entries.size());
            bool dup = false;
            int inversions = 0;
            for (int b : iv.entries) {
                for (int a : iu.entries) {
                    if (a == b) dup = true;
                    if (a > b) ++inversions;
                }
            }
            if (dup) continue;
            merged = iu.entries;
            merged.insert(merged.end(), iv.entries.begin(), iv.entries.end());
            std::sort(merged.begin(), merged.end());
            C term = (inversions % 2 == 0) ? cu * cv : C{} - cu * cv;
            r.add_term(MultiIndex(merged, u.ambient_n), std::move(term));
        }
    }
    return r;
}

/// Pluecker coordinates of v_0 ^ ... ^ v_k: the coordinate at I is the
/// (k+1)x(k+1) minor on columns I.
template <class C>
KVector<C> plucker_of_vectors(const std::vector<std::vector<C>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("plucker_of_vectors: empty input");
    int grade = static_cast<int>(vectors.size());
    int n = static_cast<int>(vectors[0].size()) - 1;
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n + 1)
            throw std::invalid_argument("plucker_of_vectors: ragged input");
    KVector<C> r(grade, n);
    for (const auto& idx : all_multi_indices(n, grade)) {
        std::vector<std::vector<C>> minor(grade, std::vector<C>(grade));
        for (int a = 0; a < grade; ++a)
            for (int b = 0; b < grade; ++b) minor[a][b] = vectors[a][idx.entries[b]];
        r.add_term(idx, determinant(std::move(minor)));
    }
    return r;
}

/// Decomposable covector A* = a_0 ^ ... ^ a_k, stored by its defining
/// linear forms. Dependent forms would make the covector zero and are
/// rejected at construction.
struct DecomposableCovector {
    std::vector<std::vector<GaussianRational>> forms;

    explicit DecomposableCovector(std::vector<std::vector<GaussianRational>> f)
        : forms(std::move(f)) {
        if (forms.empty()) throw std::invalid_argument("DecomposableCovector: no forms");
        size_t len = forms[0].size();
        for (const auto& row : forms)
            if (row.size() != len) throw std::invalid_argument("DecomposableCovector: ragged forms");
        if (rank_scalar(forms) != static_cast<int>(forms.size()))
            throw std::invalid_argument("DecomposableCovector: forms linearly dependent");
    }

    int grade() const { return static_cast<int>(forms.size()); }
    int ambient_n() const { return static_cast<int>(forms[0].size()) - 1; }

    /// Minor of the form matrix on columns I.
    GaussianRational minor_at(const MultiIndex& idx) const {
        int g = grade();
        std::vector<std::vector<GaussianRational>> m(g, std::vector<GaussianRational>(g));
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b) m[a][b] = forms[a][idx.entries[b]];
        return det_scalar(std::move(m));
    }

    /// Pluecker coordinates of the covector itself.
    KVector<GaussianRational> plucker() const { return plucker_of_vectors(forms); }
};

/// Pairing A*(Z) = sum_I det(L_I) Z_I (Cauchy-Binet contraction).
template <class C>
C pair(const DecomposableCovector& a, const KVector<C>& z) {
    if (a.grade() != z.grade()) throw std::invalid_argument("pair: grade mismatch");
    if (a.ambient_n() != z.ambient_n) throw std::invalid_argument("pair: ambient mismatch");
    C acc{};
    for (const auto& [idx, c] : z.coords) acc = acc + coeff_from_scalar<C>(a.minor_at(idx)) * c;
    return acc;
}

/// The (k+1)-th compound matrix: entry (||I||, ||J||) is the minor
/// det(M[I rows, J cols]). Satisfies det(compound) = det(M)^C(n,k).
template <class C>
std::vector<std::vector<C>> compound_matrix(const std::vector<std::vector<C>>& m, int k) {
    int n = static_cast<int>(m.size()) - 1;
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("compound_matrix: bad arguments");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n + 1)
            throw std::invalid_argument("compound_matrix: matrix not square");
    auto indices = all_multi_indices(n, k + 1);
    size_t dim = indices.size();
    std::vector<std::vector<C>> out(dim, std::vector<C>(dim));
    for (size_t r = 0; r < dim; ++r) {
        for (size_t s = 0; s < dim; ++s) {
            int g = k + 1;
            std::vector<std::vector<C>> minor(g, std::vector<C>(g));
            for (int a = 0; a < g; ++a)
                for (int b = 0; b < g; ++b)
                    minor[a][b] = m[indices[r].entries[a]][indices[s].entries[b]];
            out[r][s] = determinant(std::move(minor));
        }
    }
    return out;
}

}  // namespace vdt
