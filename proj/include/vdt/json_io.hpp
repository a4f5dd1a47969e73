#pragma once

#include "vdt/nevanlinna.hpp"
#include "vdt/nochka.hpp"
#include "vdt/smtlab.hpp"

#include <json.hpp>

#include <string>

namespace vdt {

using Json = nlohmann::json;

// Rationals travel as [numerator, denominator] integer strings to preserve
// arbitrary precision across tools.
Json to_json(const BigRat& r);
BigRat bigrat_from_json(const Json& j);

Json to_json(const GaussianRational& z);           // {"re":[n,d],"im":[n,d]}
GaussianRational gaussian_from_json(const Json& j);

Json to_json(const RatPoly& p);                    // coefficient array, lowest first
RatPoly ratpoly_from_json(const Json& j);

Json to_json(const DecomposableCovector& cv);      // {"forms":[[...],...]}
DecomposableCovector covector_from_json(const Json& j);

Json to_json(const PolyCurve& f);                  // {"n":int,"components":[...]}
PolyCurve curve_from_json(const Json& j);

Json family_to_json(const HyperplaneFamily& fam, int k, int n);
HyperplaneFamily family_from_json(const Json& j);

/// Whole problem file: {"curve":..., "k":..., "family":..., "radii":[...]}.
struct ProblemFile {
    PolyCurve curve;
    int k = 0;
    HyperplaneFamily family;
    std::vector<double> radii;
};

Json problem_to_json(const ProblemFile& p);
ProblemFile problem_from_json(const Json& j);

std::string report_to_csv(const RadialReport& rep);

}  // namespace vdt
