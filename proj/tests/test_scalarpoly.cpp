#include "vdt/divisor.hpp"
#include "vdt/ratpoly.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace vdt;
using namespace vdt::testutil;

namespace {
const GaussianRational I = GaussianRational::i();
}

TEST_CASE("GaussianRational arithmetic is exact") {
    GaussianRational a(BigRat(1, 3), BigRat(1, 2));
    GaussianRational b(BigRat(2, 3), BigRat(-1, 2));
    CHECK(a + b == GaussianRational(1));
    CHECK((a * b).re == BigRat(2, 9) + BigRat(1, 4));
    CHECK(a / a == GaussianRational(1));
    CHECK(I * I == GaussianRational(-1));
}

TEST_CASE("poly_gcd basics") {
    // gcd(z^2-1, z-1) = z-1
    CHECK(poly_gcd(ipoly({-1, 0, 1}), ipoly({-1, 1})) == ipoly({-1, 1}));
    // gcd(2z, 3) = 1
    CHECK(poly_gcd(ipoly({0, 2}), ipoly({3})) == ipoly({1}));
    // gcd of (p, 0) is normalized p
    CHECK(poly_gcd(ipoly({0, 2}), RatPoly()) == ipoly({0, 1}));
}

TEST_CASE("poly_gcd with Gaussian roots") {
    // gcd((z-i)^2 (z+1), (z-i)(z+2)) = z-i
    RatPoly zmi({-I, GaussianRational(1)});
    RatPoly a = zmi * zmi * ipoly({1, 1});
    RatPoly b = zmi * ipoly({2, 1});
    CHECK(poly_gcd(a, b) == zmi);
}

TEST_CASE("poly_gcd divides both inputs exactly on random pairs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        RatPoly p = random_poly(rng, 8), q = random_poly(rng, 8);
        if (p.is_zero() && q.is_zero()) continue;
        RatPoly g = poly_gcd(p, q);
        if (!p.is_zero()) CHECK(divmod(p, g).second.is_zero());
        if (!q.is_zero()) CHECK(divmod(q, g).second.is_zero());
        // Common-factor sanity: gcd(p*m, q*m) is divisible by m.
        RatPoly m = ipoly({1, 2, 1});
        if (!p.is_zero() && !q.is_zero())
            CHECK(divmod(poly_gcd(p * m, q * m), m.monic()).second.is_zero());
    }
}

TEST_CASE("squarefree_decompose") {
    auto d = squarefree_decompose(z_pow(3));
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == ipoly({0, 1}));
    CHECK(d[0].second == 3);

    // (z-1)^2 (z+1) -> [(z+1,1),(z-1,2)]
    RatPoly p = ipoly({-1, 1}) * ipoly({-1, 1}) * ipoly({1, 1});
    d = squarefree_decompose(p);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::pair{ipoly({1, 1}), 1});
    CHECK(d[1] == std::pair{ipoly({-1, 1}), 2});

    CHECK(squarefree_decompose(ipoly({5})).empty());
    CHECK_THROWS_AS(squarefree_decompose(RatPoly()), std::domain_error);
}

TEST_CASE("squarefree_decompose reassembles the input up to a constant") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        RatPoly p = random_poly(rng, 4);
        if (p.is_zero()) continue;
        p *= random_poly(rng, 2) * random_poly(rng, 2);  // encourage repeats
        if (p.is_zero()) continue;
        RatPoly prod = ipoly({1});
        int last_mult = 0;
        for (const auto& [f, m] : squarefree_decompose(p)) {
            CHECK(m > last_mult);
            last_mult = m;
            prod *= f.pow(m);
        }
        CHECK(prod == p.monic());
    }
}

TEST_CASE("ord_at") {
    CHECK(ord_at(z_pow(2) * ipoly({1, 1}), GaussianRational(0)) == 2);
    CHECK(ord_at(ipoly({1, 0, 1}), GaussianRational(1)) == 0);
    RatPoly zmi({-I, GaussianRational(1)});
    RatPoly zpi({I, GaussianRational(1)});
    CHECK(ord_at(zmi.pow(3) * zpi, I) == 3);
    CHECK_THROWS_AS(ord_at(RatPoly(), GaussianRational(0)), std::domain_error);
}

TEST_CASE("ord_at is additive over products") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        RatPoly p = random_poly(rng, 5), q = random_poly(rng, 5);
        if (p.is_zero() || q.is_zero()) continue;
        GaussianRational a = random_gr(rng, 2);
        CHECK(ord_at(p * q, a) == ord_at(p, a) + ord_at(q, a));
    }
}

TEST_CASE("wronskian") {
    CHECK(wronskian({ipoly({1}), ipoly({0, 1}), z_pow(2)}) == ipoly({2}));
    RatPoly p = ipoly({3, 1, 2});
    CHECK(wronskian({p, p}).is_zero());
    CHECK(wronskian({ipoly({1}), z_pow(2)}) == ipoly({0, 2}));
}

TEST_CASE("wronskian is alternating and detects linear dependence") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        RatPoly p = random_poly(rng, 5), q = random_poly(rng, 5), r = random_poly(rng, 5);
        RatPoly w1 = wronskian({p, q, r});
        RatPoly w2 = wronskian({q, p, r});
        CHECK(w1 == -w2);
        // Multilinearity over constants in the first slot.
        GaussianRational c = random_gr(rng);
        CHECK(wronskian({c * p, q, r}) == c * w1);
        // Dependent triple.
        GaussianRational a = random_gr(rng), b = random_gr(rng);
        CHECK(wronskian({p, q, a * p + b * q}).is_zero());
    }
    // Independent monomials have a nonvanishing Wronskian.
    CHECK_FALSE(wronskian({ipoly({1}), z_pow(3), z_pow(5)}).is_zero());
}

TEST_CASE("roots_with_multiplicity on rational and Gaussian roots") {
    // z^2 (z-2)
    DivisorOnC d = roots_with_multiplicity(z_pow(2) * ipoly({-2, 1}));
    REQUIRE(d.points.size() == 2);
    CHECK(d.total_degree() == 3);
    CHECK(d.points[0].exact);
    CHECK(d.points[0].exact_location == GaussianRational(0));
    CHECK(d.points[0].multiplicity == 2);
    CHECK(d.points[1].exact_location == GaussianRational(2));

    // z^2+1 -> i, -i recognized exactly
    d = roots_with_multiplicity(ipoly({1, 0, 1}));
    REQUIRE(d.points.size() == 2);
    for (const auto& pt : d.points) {
        CHECK(pt.exact);
        CHECK(pt.exact_location->norm2() == BigRat(1));
    }
}

TEST_CASE("roots_with_multiplicity isolates irrational roots") {
    // (z^2-2)^3 -> sqrt2 and -sqrt2, multiplicity 3
    RatPoly p = ipoly({-2, 0, 1}).pow(3);
    DivisorOnC d = roots_with_multiplicity(p);
    REQUIRE(d.points.size() == 2);
    for (const auto& pt : d.points) {
        CHECK(pt.multiplicity == 3);
        double err = std::abs(pt.location * pt.location - std::complex<double>(2.0, 0.0));
        CHECK(err < 1e-10);
    }
}

TEST_CASE("roots_with_multiplicity residual bound on random products") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 15; ++t) {
        RatPoly p = random_poly(rng, 4) * random_poly(rng, 4);
        if (p.is_zero() || p.degree() == 0) continue;
        DivisorOnC d = roots_with_multiplicity(p);
        CHECK(d.total_degree() == p.degree());
        double maxc = 0;
        for (const auto& c : p.coeffs()) maxc = std::max(maxc, std::abs(c.to_complex()));
        for (const auto& pt : d.points)
            CHECK(std::abs(p.eval(pt.location)) < 1e-8 * maxc);
    }
}

TEST_CASE("coprime_basis refines orders uniformly") {
    RatPoly a = ipoly({-1, 1}) * ipoly({1, 1});             // (z-1)(z+1)
    RatPoly b = ipoly({-1, 1}).pow(2) * ipoly({-2, 1});     // (z-1)^2 (z-2)
    auto basis = coprime_basis({a, b});
    // {z-1}, {z+1}, {z-2} in some order; pairwise coprime.
    REQUIRE(basis.size() == 3);
    int total = 0;
    for (const auto& c : basis) {
        total += c.degree();
        for (const auto& d : basis)
            if (&c != &d) CHECK(poly_gcd(c, d).degree() == 0);
    }
    CHECK(total == 3);
    for (const auto& c : basis) {
        int ma = multiplicity_of_factor(a, c);
        int mb = multiplicity_of_factor(b, c);
        CHECK(ma + mb >= 1);
    }
}
