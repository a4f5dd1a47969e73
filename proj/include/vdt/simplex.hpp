#pragma once

#include "vdt/rational.hpp"

#include <vector>

namespace vdt {

/// Exact-rational linear program in the variables x >= 0:
///   maximize c.x  subject to  A_le x <= b_le,  A_eq x = b_eq.
struct LinearProgram {
    std::vector<std::vector<BigRat>> a_le;
    std::vector<BigRat> b_le;
    std::vector<std::vector<BigRat>> a_eq;
    std::vector<BigRat> b_eq;
    std::vector<BigRat> objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    BigRat value;
    std::vector<BigRat> x;
};

/// Dense two-phase simplex with Bland's rule; all arithmetic exact.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace vdt
