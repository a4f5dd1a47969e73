#include "vdt/simplex.hpp"

#include <stdexcept>

namespace vdt {

namespace {

struct Tableau {
    // rows x cols matrix; last column is the right-hand side.
    std::vector<std::vector<BigRat>> t;
    std::vector<int> basis;  // basic variable per row
    size_t rows, cols;       // cols excludes the rhs column

    void pivot(size_t pr, size_t pc) {
        BigRat piv = t[pr][pc];
        for (size_t j = 0; j <= cols; ++j) t[pr][j] /= piv;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            BigRat f = t[i][pc];
            for (size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = static_cast<int>(pc);
    }

    // Runs simplex on the objective stored in the last row (maximization,
    // reduced costs convention: objective row holds z_j - c_j; entering
    // column has negative entry). Bland's rule throughout.
    // Returns false if unbounded.
    bool iterate() {
        size_t zrow = rows;
        while (true) {
            size_t enter = cols;
            for (size_t j = 0; j < cols; ++j) {
                if (t[zrow][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) return true;
            size_t leave = rows;
            BigRat best;
            for (size_t i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0) continue;
                BigRat ratio = t[i][cols] / t[i][enter];
                if (leave == rows || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    size_t nvar = lp.objective.size();
    size_t n_le = lp.a_le.size(), n_eq = lp.a_eq.size();
    size_t rows = n_le + n_eq;
    size_t nslack = n_le;

    // Rows with nonnegative rhs; track which need an artificial variable.
    std::vector<std::vector<BigRat>> a(rows, std::vector<BigRat>(nvar));
    std::vector<BigRat> b(rows);
    std::vector<BigRat> slack_sign(rows, 0);
    for (size_t i = 0; i < n_le; ++i) {
        a[i] = lp.a_le[i];
        b[i] = lp.b_le[i];
        slack_sign[i] = 1;
        if (b[i] < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
            slack_sign[i] = -1;
        }
    }
    for (size_t i = 0; i < n_eq; ++i) {
        a[n_le + i] = lp.a_eq[i];
        b[n_le + i] = lp.b_eq[i];
        if (b[n_le + i] < 0) {
            for (auto& v : a[n_le + i]) v = -v;
            b[n_le + i] = -b[n_le + i];
        }
    }

    std::vector<bool> needs_art(rows, true);
    for (size_t i = 0; i < n_le; ++i)
        if (slack_sign[i] == 1) needs_art[i] = false;
    size_t nart = 0;
    std::vector<int> art_col(rows, -1);
    for (size_t i = 0; i < rows; ++i)
        if (needs_art[i]) art_col[i] = static_cast<int>(nvar + nslack + nart++);

    size_t cols = nvar + nslack + nart;
    Tableau tab;
    tab.rows = rows;
    tab.cols = cols;
    tab.t.assign(rows + 1, std::vector<BigRat>(cols + 1, 0));
    tab.basis.assign(rows, -1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < nvar; ++j) tab.t[i][j] = a[i][j];
        if (i < n_le) tab.t[i][nvar + i] = slack_sign[i];
        if (art_col[i] >= 0) tab.t[i][art_col[i]] = 1;
        tab.t[i][cols] = b[i];
        tab.basis[i] = (art_col[i] >= 0) ? art_col[i] : static_cast<int>(nvar + i);
    }

    LpResult res;
    if (nart > 0) {
        // Phase 1: minimize the sum of artificials.
        for (size_t i = 0; i < rows; ++i) {
            if (art_col[i] < 0) continue;
            for (size_t j = 0; j <= cols; ++j) tab.t[rows][j] -= tab.t[i][j];
        }
        for (size_t i = 0; i < rows; ++i)
            if (art_col[i] >= 0) tab.t[rows][art_col[i]] = 0;
        if (!tab.iterate()) throw std::logic_error("solve_lp: phase 1 unbounded");
        if (tab.t[rows][cols] != 0) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // Drive remaining artificials out of the basis.
        for (size_t i = 0; i < rows; ++i) {
            if (tab.basis[i] < static_cast<int>(nvar + nslack)) continue;
            size_t enter = cols;
            for (size_t j = 0; j < nvar + nslack; ++j) {
                if (tab.t[i][j] != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) continue;  // redundant row
            tab.pivot(i, enter);
        }
    }

    // Phase 2 objective row: z_j - c_j over the current basis.
    for (size_t j = 0; j <= cols; ++j) tab.t[rows][j] = 0;
    for (size_t j = 0; j < nvar; ++j) tab.t[rows][j] = -lp.objective[j];
    for (size_t i = 0; i < rows; ++i) {
        int bv = tab.basis[i];
        if (bv < static_cast<int>(nvar) && lp.objective[bv] != 0) {
            BigRat f = lp.objective[bv];
            for (size_t j = 0; j <= cols; ++j) tab.t[rows][j] += f * tab.t[i][j];
        }
    }
    // Artificial columns are dead after phase 1.
    for (size_t i = 0; i < rows; ++i)
        if (art_col[i] >= 0)
            for (size_t r = 0; r <= rows; ++r) tab.t[r][art_col[i]] = 0;

    if (!tab.iterate()) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.x.assign(nvar, 0);
    for (size_t i = 0; i < rows; ++i)
        if (tab.basis[i] >= 0 && tab.basis[i] < static_cast<int>(nvar))
            res.x[tab.basis[i]] = tab.t[i][cols];
    res.value = tab.t[rows][cols];
    return res;
}

}  // namespace vdt
