#include "vdt/corpus.hpp"
#include "vdt/nevanlinna.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace vdt;
using namespace vdt::testutil;

TEST_CASE("RadialGrid validation") {
    CHECK_THROWS(RadialGrid({0.5, 2.0}));
    CHECK_THROWS(RadialGrid({2.0, 2.0}));
    RadialGrid g({2.0, 10.0, 100.0});
    CHECK(g.radii.size() == 3);
}

TEST_CASE("pullback_divisor") {
    DivisorOnC d = pullback_divisor(ipoly({0, 2}));
    REQUIRE(d.points.size() == 1);
    CHECK(d.points[0].exact_location == GaussianRational(0));
    CHECK(d.points[0].multiplicity == 1);

    d = pullback_divisor(ipoly({-1, 0, 1}).pow(2));  // (z^2-1)^2
    REQUIRE(d.points.size() == 2);
    for (const auto& p : d.points) CHECK(p.multiplicity == 2);

    CHECK(pullback_divisor(ipoly({1})).empty());
    CHECK_THROWS_WITH_AS(pullback_divisor(RatPoly()),
                         doctest::Contains("curve lies inside the hyperplane"),
                         std::invalid_argument);
}

TEST_CASE("counting_N closed forms") {
    DivisorOnC e;
    e.points.push_back({{0.0, 0.0}, 3, true, GaussianRational(0)});
    CHECK(counting_N(e, kUntruncated, std::exp(1.0)) == doctest::Approx(3.0).epsilon(1e-12));

    e.points.push_back({{2.0, 0.0}, 1, true, GaussianRational(2)});
    double expected = 2.0 * std::log(4.0) + std::log(2.0);
    CHECK(counting_N(e, 2, 4.0) == doctest::Approx(expected).epsilon(1e-12));

    CHECK(counting_N(DivisorOnC{}, 1, 10.0) == 0.0);
    CHECK_THROWS(counting_N(e, 1, 0.5));
}

TEST_CASE("counting_N monotonicity and truncation ordering") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 10; ++t) {
        RatPoly p = random_poly(rng, 3) * random_poly(rng, 3);
        if (p.is_zero() || p.degree() == 0) continue;
        DivisorOnC e = pullback_divisor(p);
        double prev = 0.0;
        for (double r : {2.0, 5.0, 50.0, 1e4}) {
            double n1 = counting_N(e, 1, r);
            double n2 = counting_N(e, 2, r);
            double nf = counting_N(e, kUntruncated, r);
            CHECK(n1 <= n2 + 1e-12);
            CHECK(n2 <= nf + 1e-12);
            CHECK(n2 <= 2 * n1 + 1e-12);  // N^[m] <= m * N^[1]
            CHECK(nf >= prev - 1e-12);
            prev = nf;
        }
    }
}

TEST_CASE("order_T on monomial curves") {
    double r = std::exp(1.0);
    CHECK(order_T({ipoly({1}), ipoly({0, 1})}, r) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(order_T({ipoly({1})}, 100.0) == doctest::Approx(0.0).epsilon(1e-12));
    // Max component z^2: T = 2 log r.
    CHECK(order_T({ipoly({1}), ipoly({0, 1}), z_pow(2)}, 1000.0) ==
          doctest::Approx(2.0 * std::log(1000.0)).epsilon(1e-7));
}

TEST_CASE("order_T growth matches the max degree") {
    // T(r) = d log r + log|leading data| + o(1), so the raw ratio T/log r
    // carries a C/log r bias; the log-log slope converges fast instead.
    std::mt19937_64 rng(127);
    for (int t = 0; t < 5; ++t) {
        PolyCurve f = random_curve(rng, 2, 4, 3);
        double slope = (order_T(f.components, 1e6) - order_T(f.components, 1e5)) /
                       (std::log(1e6) - std::log(1e5));
        CHECK(slope == doctest::Approx(static_cast<double>(f.max_degree())).epsilon(1e-6));
    }
}

TEST_CASE("proximity_m closed forms for [1, z]") {
    std::vector<RatPoly> f{ipoly({1}), ipoly({0, 1})};
    // Q = z_1: log(max(1,r) * 1 / r) = 0 at r = 2.
    CHECK(proximity_m(f, {GaussianRational(0), GaussianRational(1)}, 2.0) ==
          doctest::Approx(0.0).epsilon(1e-8));
    // Q = z_0: log(r) at r = 2.
    CHECK(proximity_m(f, {GaussianRational(1), GaussianRational(0)}, 2.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("exact_defect") {
    // Empty divisor: omitted target, defect 1.
    CHECK(exact_defect(DivisorOnC{}, 2, 3) == BigRat(1));

    // Coordinate 2z of F_1 = [1, 2z, z^2]: one simple zero, dk = 2.
    DivisorOnC e;
    e.points.push_back({{0.0, 0.0}, 1, true, GaussianRational(0)});
    CHECK(exact_defect(e, 2, 2) == BigRat(1, 2));

    // Full intersection: sum of multiplicities equals dk, untruncated.
    DivisorOnC full;
    full.points.push_back({{1.0, 0.0}, 2, true, GaussianRational(1)});
    CHECK(exact_defect(full, kUntruncated, 2) == BigRat(0));

    CHECK_THROWS(exact_defect(e, 1, 0));
}

TEST_CASE("exact_defect lies in [0,1] for pullbacks") {
    std::mt19937_64 rng(131);
    for (int t = 0; t < 15; ++t) {
        RatPoly p = random_poly(rng, 4);
        if (p.is_zero()) continue;
        int dk = p.degree() + static_cast<int>(rng() % 3);  // dk >= deg p
        if (dk == 0) continue;
        DivisorOnC e = pullback_divisor(p);
        for (int m : {1, 2, kUntruncated}) {
            BigRat d = exact_defect(e, m, dk);
            CHECK(d >= 0);
            CHECK(d <= 1);
        }
    }
}

TEST_CASE("fmt_report coordinate hyperplane cases have zero deviation") {
    PolyCurve f{1, {ipoly({1}), ipoly({0, 1})}};
    RadialGrid grid({2, 10, 100});
    // D = {z_1 = 0}: m = 0, N = log r, dT = log r.
    RadialReport rep = fmt_report(f, {GaussianRational(0), GaussianRational(1)}, grid);
    CHECK(rep.passed);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) CHECK(std::abs(row.back()) < 1e-6);

    // D = {z_0 = 0}: m = log r, N = 0.
    rep = fmt_report(f, {GaussianRational(1), GaussianRational(0)}, grid);
    CHECK(rep.passed);
    for (const auto& row : rep.rows) CHECK(std::abs(row.back()) < 1e-6);
}

TEST_CASE("fmt_report deviation is scale invariant") {
    PolyCurve f{2, {ipoly({1}), ipoly({2, 1}), ipoly({-1, 0, 1})}};
    RadialGrid grid({2, 10, 100});
    RadialReport a = fmt_report(f, {GaussianRational(1), GaussianRational(1), GaussianRational(1)}, grid);
    RadialReport b = fmt_report(f, {GaussianRational(5), GaussianRational(5), GaussianRational(5)}, grid);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i)
        CHECK(a.rows[i].back() == doctest::Approx(b.rows[i].back()).epsilon(1e-8));
}

TEST_CASE("fmt_report bounded deviation on random curves") {
    std::mt19937_64 rng(137);
    RadialGrid grid({2, 10, 100, 1e3, 1e4, 1e5, 1e6});
    for (int t = 0; t < 4; ++t) {
        PolyCurve f = random_curve(rng, 2, 3, 2);
        std::vector<GaussianRational> form(3);
        RatPoly comp;
        do {
            for (auto& x : form) x = random_gr(rng, 2);
            comp = RatPoly();
            for (int j = 0; j <= 2; ++j) comp += form[j] * f.components[j];
        } while (comp.is_zero());
        RadialReport rep = fmt_report(f, form, grid);
        CHECK(rep.passed);
    }
}
