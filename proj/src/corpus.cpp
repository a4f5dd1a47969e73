#include "vdt/corpus.hpp"

#include <stdexcept>

namespace vdt {

std::vector<double> default_grid() { return {2, 10, 100, 1e3, 1e4, 1e5, 1e6}; }

GaussianRational random_scalar(Rng& rng, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    return GaussianRational(dist(rng));
}

PolyCurve random_curve(Rng& rng, int n, int max_deg, int range) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<RatPoly> comps;
        for (int i = 0; i <= n; ++i) {
            int d = deg_dist(rng);
            std::vector<GaussianRational> c(d + 1);
            for (auto& x : c) x = random_scalar(rng, range);
            comps.emplace_back(std::move(c));
        }
        bool any = false;
        for (const auto& p : comps) any = any || !p.is_zero();
        if (!any) continue;
        PolyCurve f = reduce_representation(comps);
        if (is_nondegenerate(f)) return f;
    }
    throw std::runtime_error("random_curve: rejection budget exhausted (nondegeneracy)");
}

HyperplaneFamily random_family(Rng& rng, int n, int k, int q, int subgeneral_N, int range) {
    long long nn = binomial(n + 1, k + 1);
    if (subgeneral_N == 0) subgeneral_N = static_cast<int>(nn);
    if (q < subgeneral_N)
        throw std::invalid_argument("random_family: q < N_frak (subgeneral demand unreachable)");
    for (int attempt = 0; attempt < 500; ++attempt) {
        HyperplaneFamily fam;
        fam.subgeneral_N = subgeneral_N;
        bool ok = true;
        for (int i = 0; i < q && ok; ++i) {
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                std::vector<std::vector<GaussianRational>> forms(
                    k + 1, std::vector<GaussianRational>(n + 1));
                for (auto& row : forms)
                    for (auto& x : row) x = random_scalar(rng, range);
                if (rank_scalar(forms) != k + 1) continue;
                fam.covectors.emplace_back(std::move(forms));
                placed = true;
            }
            ok = placed;
        }
        if (!ok) continue;
        try {
            fam.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (is_subgeneral(fam, subgeneral_N - 1)) return fam;
    }
    throw std::runtime_error("random_family: rejection budget exhausted (subgeneral position)");
}

ProblemFile random_problem(Rng& rng, const CorpusParams& params) {
    ProblemFile p;
    p.curve = random_curve(rng, params.n, params.max_deg, params.coeff_range);
    p.k = params.k;
    p.family = random_family(rng, params.n, params.k, params.q, params.subgeneral_N,
                             params.coeff_range);
    p.radii = default_grid();
    return p;
}

}  // namespace vdt
