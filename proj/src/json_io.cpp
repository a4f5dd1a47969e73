#include "vdt/json_io.hpp"

#include <sstream>

namespace vdt {

Json to_json(const BigRat& r) {
    return Json::array({numerator(r).str(), denominator(r).str()});
}

BigRat bigrat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational: expected [num, den]");
    BigInt num(j[0].get<std::string>());
    BigInt den(j[1].get<std::string>());
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return BigRat(num, den);
}

Json to_json(const GaussianRational& z) {
    return Json{{"re", to_json(z.re)}, {"im", to_json(z.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
    return {bigrat_from_json(j.at("re")), bigrat_from_json(j.at("im"))};
}

Json to_json(const RatPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

RatPoly ratpoly_from_json(const Json& j) {
    std::vector<GaussianRational> coeffs;
    for (const auto& c : j) coeffs.push_back(gaussian_from_json(c));
    return RatPoly(std::move(coeffs));
}

Json to_json(const DecomposableCovector& cv) {
    Json forms = Json::array();
    for (const auto& row : cv.forms) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(to_json(c));
        forms.push_back(std::move(r));
    }
    return Json{{"forms", std::move(forms)}};
}

DecomposableCovector covector_from_json(const Json& j) {
    std::vector<std::vector<GaussianRational>> forms;
    for (const auto& row : j.at("forms")) {
        std::vector<GaussianRational> r;
        for (const auto& c : row) r.push_back(gaussian_from_json(c));
        forms.push_back(std::move(r));
    }
    return DecomposableCovector(std::move(forms));
}

Json to_json(const PolyCurve& f) {
    Json comps = Json::array();
    for (const auto& p : f.components) comps.push_back(to_json(p));
    return Json{{"n", f.n}, {"components", std::move(comps)}};
}

PolyCurve curve_from_json(const Json& j) {
    std::vector<RatPoly> comps;
    for (const auto& p : j.at("components")) comps.push_back(ratpoly_from_json(p));
    int n = j.at("n").get<int>();
    if (static_cast<int>(comps.size()) != n + 1)
        throw std::invalid_argument("curve: component count != n+1");
    PolyCurve f = reduce_representation(comps);
    return f;
}

Json family_to_json(const HyperplaneFamily& fam, int k, int n) {
    Json cvs = Json::array();
    for (const auto& cv : fam.covectors) cvs.push_back(to_json(cv));
    return Json{{"k", k}, {"n", n}, {"N", fam.subgeneral_N}, {"covectors", std::move(cvs)}};
}

HyperplaneFamily family_from_json(const Json& j) {
    HyperplaneFamily fam;
    for (const auto& cv : j.at("covectors")) fam.covectors.push_back(covector_from_json(cv));
    fam.subgeneral_N = j.at("N").get<int>();
    if (fam.covectors.empty()) throw std::invalid_argument("family: no covectors");
    int k = j.at("k").get<int>(), n = j.at("n").get<int>();
    if (fam.grade() != k + 1 || fam.curve_n() != n)
        throw std::invalid_argument("family: covector shape inconsistent with (n, k)");
    return fam;
}

Json problem_to_json(const ProblemFile& p) {
    return Json{{"curve", to_json(p.curve)},
                {"k", p.k},
                {"family", family_to_json(p.family, p.k, p.curve.n)},
                {"radii", p.radii}};
}

ProblemFile problem_from_json(const Json& j) {
    ProblemFile p;
    p.curve = curve_from_json(j.at("curve"));
    p.k = j.at("k").get<int>();
    p.family = family_from_json(j.at("family"));
    p.radii = j.at("radii").get<std::vector<double>>();
    return p;
}

std::string report_to_csv(const RadialReport& rep) {
    std::ostringstream os;
    os.precision(15);
    for (size_t i = 0; i < rep.columns.size(); ++i)
        os << rep.columns[i] << (i + 1 == rep.columns.size() ? "\n" : ",");
    for (const auto& row : rep.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 == row.size() ? "\n" : ",");
    }
    return os.str();
}

}  // namespace vdt
