#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotconc/int_poly.hpp"
#include "knotconc/resultant.hpp"
#include "knotconc/snf.hpp"
#include "oracles.hpp"

using namespace knotconc;

namespace {

RatPoly rp(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

IntPoly ip(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("poly_gcd on frozen cases") {
    // gcd(t - 1, t + 1) is trivial
    CHECK(poly_gcd(rp({-1, 1}), rp({1, 1})) == rp({1}));
    // gcd with itself is the monic normalization: t^2 - 5/2 t + 1
    RatPoly self = poly_gcd(rp({-2, 5, -2}), rp({-2, 5, -2}));
    CHECK(self == RatPoly({Rat(1), Rat(-5, 2), Rat(1)}));
    // Euclid by hand: first remainder is t/3, so the gcd is 1
    CHECK(poly_gcd(rp({-2, 5, -2}), rp({-3, 7, -3})) == rp({1}));
}

TEST_CASE("poly_gcd degenerate inputs") {
    CHECK(poly_gcd(RatPoly(), RatPoly()).is_zero());
    CHECK(poly_gcd(rp({-2, 5, -2}), RatPoly()) == RatPoly({Rat(1), Rat(-5, 2), Rat(1)}));
    CHECK(poly_gcd(RatPoly(), rp({0, 7})) == rp({0, 1}));
}

TEST_CASE("poly_gcd divides both inputs") {
    oracles::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly common = oracles::random_poly(rng, 2, 4);
        IntPoly a = oracles::random_poly(rng, 3, 4) * common;
        IntPoly b = oracles::random_poly(rng, 3, 4) * common;
        RatPoly g = poly_gcd(RatPoly(a), RatPoly(b));
        if (g.is_zero()) continue;
        // remainder of each input by the gcd must vanish
        CHECK(RatPoly(a).rem(g).is_zero());
        CHECK(RatPoly(b).rem(g).is_zero());
        if (common.degree() >= 1) CHECK(g.degree() >= common.degree());
    }
}

TEST_CASE("resultant frozen examples") {
    CHECK(resultant(ip({-1, 1}), ip({1, 1})) == 2);
    CHECK(resultant(ip({-1, 1}), ip({-1, 0, 1})) == 0); // shared root t = 1
    CHECK(resultant(ip({1, 1}), ip({1, 1, 1})) == 1);   // evaluate at t = -1
    CHECK_THROWS_AS((void)resultant(IntPoly(), ip({1, 1})), Error);
}

TEST_CASE("resultant of constants") {
    CHECK(resultant(ip({3}), ip({5, 1})) == 3);
    CHECK(resultant(ip({5, 1}), ip({3})) == 3);
    CHECK(resultant(ip({7}), ip({4})) == 1);
}

TEST_CASE("resultant routes agree and swap antisymmetry holds") {
    oracles::Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        IntPoly f = oracles::random_poly(rng, 6, 8);
        IntPoly g = oracles::random_poly(rng, 6, 8);
        Int sylv = resultant_sylvester(f, g);
        Int prs = resultant_subresultant(f, g);
        CHECK(sylv == prs);
        Int swapped = resultant_sylvester(g, f);
        Int sign = ((f.degree() * g.degree()) % 2 == 0) ? Int(1) : Int(-1);
        CHECK(sylv == sign * swapped);
        // cofactor-determinant oracle at small degree
        if (f.degree() >= 1 && g.degree() >= 1 && f.degree() + g.degree() <= 7)
            CHECK(sylv == oracles::naive_det(sylvester_matrix(f, g)));
    }
}

TEST_CASE("resultant vanishes exactly on common factors") {
    oracles::Rng rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        IntPoly f = oracles::random_poly(rng, 4, 6);
        IntPoly g = oracles::random_poly(rng, 4, 6);
        if (f.degree() < 1 || g.degree() < 1) continue;
        bool coprime = poly_gcd(RatPoly(f), RatPoly(g)).is_constant();
        CHECK((resultant(f, g) != 0) == coprime);
        // plant a common factor and watch the resultant die
        IntPoly common = oracles::random_poly(rng, 2, 4);
        if (common.degree() < 1) continue;
        CHECK(resultant(f * common, g * common) == 0);
    }
}

TEST_CASE("det frozen examples") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{1, 4}, {2, -1}}) == -9);
    CHECK(det(IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}) == 1);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS((void)det(IntMatrix(2, 3)), Error);
}

TEST_CASE("det matches cofactor oracle on random matrices") {
    oracles::Rng rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        IntMatrix m = oracles::random_matrix(rng, n, n, 9);
        CHECK(det(m) == oracles::naive_det(m));
    }
}

TEST_CASE("snf frozen examples") {
    CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).diag == std::vector<Int>{1, 6});
    CHECK(snf(IntMatrix::identity(2)).diag == std::vector<Int>{1, 1});
    CHECK(snf(IntMatrix{{1, 4}, {2, -1}}).diag == std::vector<Int>{1, 9});
    CHECK(snf(IntMatrix(0, 0)).diag.empty());
}

TEST_CASE("snf reconstruction, unimodularity, divisibility") {
    oracles::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.uniform(1, 5));
        IntMatrix m = oracles::random_matrix(rng, r, c, 12);
        SnfResult s = snf(m);
        CHECK(abs(det(s.U)) == 1);
        CHECK(abs(det(s.V)) == 1);
        CHECK(s.U * m * s.V == s.diag_matrix(r, c));
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
            CHECK(s.diag[i] >= 0);
            if (sgn(s.diag[i]) != 0) CHECK(sgn(s.diag[i + 1] % s.diag[i]) == 0);
            if (sgn(s.diag[i]) == 0) CHECK(sgn(s.diag[i + 1]) == 0);
        }
        if (r == c) CHECK(s.nonzero_product() * (s.has_zero() ? 0 : 1) == (s.has_zero() ? 0 : abs(det(m))));
        // determinantal-divisor oracle on the small cases
        if (r <= 4 && c <= 4) CHECK(s.diag == oracles::determinantal_divisor_diag(m));
    }
}

TEST_CASE("snf invariant-factor product equals |det| for square nonsingular") {
    oracles::Rng rng(13);
    int done = 0;
    while (done < 80) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 8));
        IntMatrix m = oracles::random_matrix(rng, n, n, 100);
        Int d = det(m);
        if (sgn(d) == 0) continue;
        SnfResult s = snf(m);
        CHECK_FALSE(s.has_zero());
        CHECK(s.nonzero_product() == abs(d));
        ++done;
    }
}

TEST_CASE("snf is deterministic") {
    IntMatrix m{{6, 4, 2}, {4, 8, 6}, {2, 6, 10}};
    SnfResult a = snf(m);
    SnfResult b = snf(m);
    CHECK(a.diag == b.diag);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
}

TEST_CASE("hermite form canonicalizes row spans") {
    oracles::Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = oracles::random_matrix(rng, 2, 4, 6);
        if (snf(m).diag.back() == 0) continue; // want full row rank
        IntMatrix u = oracles::random_unimodular(rng, 2);
        CHECK(row_hnf(m) == row_hnf(u * m));
    }
}

TEST_CASE("polynomial determinant agrees with integer determinant at sample points") {
    oracles::Rng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        PolyMatrix pm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pm.at(i, j) = oracles::random_poly(rng, 1, 5, false);
        IntPoly dp = det(pm);
        for (long x : {-2L, 0L, 1L, 3L}) {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = pm.at(i, j).eval(Int(x));
            CHECK(dp.eval(Int(x)) == det(m));
        }
    }
}

TEST_CASE("resultant dispatch above degree 64 stays consistent") {
    // coprime all-ones polynomials of high degree: the dispatcher takes the
    // subresultant route, the Sylvester route must agree
    IntPoly f = IntPoly::ones(70);
    IntPoly g = IntPoly::ones(69);
    Int via_dispatch = resultant(f, g);
    CHECK(abs(via_dispatch) == 1);
    CHECK(via_dispatch == resultant_sylvester(f, g));
    // and a non-coprime pair vanishes
    CHECK(resultant(IntPoly::ones(66), IntPoly::ones(68)) == 0);
}

TEST_CASE("snf handles degenerate shapes") {
    CHECK(snf(IntMatrix(3, 2)).diag == std::vector<Int>{0, 0});
    CHECK(snf(IntMatrix(0, 4)).diag.empty());
    SnfResult s = snf(IntMatrix{{0, 0, 0}, {0, 5, 0}});
    CHECK(s.diag == std::vector<Int>{5, 0});
    CHECK(s.U * IntMatrix{{0, 0, 0}, {0, 5, 0}} * s.V == s.diag_matrix(2, 3));
}

TEST_CASE("resultant is multiplicative in the first argument") {
    oracles::Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly f = oracles::random_poly(rng, 3, 5);
        IntPoly g = oracles::random_poly(rng, 3, 5);
        IntPoly h = oracles::random_poly(rng, 3, 5);
        if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}
