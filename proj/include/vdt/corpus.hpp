#pragma once

#include "vdt/json_io.hpp"

#include <random>

namespace vdt {

/// Deterministic pseudo-random generation of desk-scale problems.
/// All sampling is rejection-based against the exact invariants
/// (nondegeneracy, subgeneral position); a fixed seed gives identical
/// output on every run.
struct CorpusParams {
    int n = 2;
    int k = 1;
    int q = 5;
    int max_deg = 4;
    int subgeneral_N = 0;  // 0: use the Pluecker dimension (general position)
    int coeff_range = 3;   // entries in [-range, range]
};

using Rng = std::mt19937_64;

GaussianRational random_scalar(Rng& rng, int range);

/// Nondegenerate reduced polynomial curve with integer coefficients.
PolyCurve random_curve(Rng& rng, int n, int max_deg, int range);

/// Family of q decomposable covectors, pairwise non-proportional,
/// certified (N_frak - 1)-subgeneral by exact rank computation.
/// Throws when the rejection budget is exhausted.
HyperplaneFamily random_family(Rng& rng, int n, int k, int q, int subgeneral_N, int range);

ProblemFile random_problem(Rng& rng, const CorpusParams& params);

std::vector<double> default_grid();

}  // namespace vdt
