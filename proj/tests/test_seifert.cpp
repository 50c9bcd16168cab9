#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotconc/catalog.hpp"
#include "knotconc/seifert.hpp"
#include "oracles.hpp"

using namespace knotconc;

namespace {

IntPoly ip(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

SeifertMatrix twist(long k) { return twist_entry(Int(k)).matrix; }

} // namespace

TEST_CASE("validate accepts and rejects the right matrices") {
    SeifertMatrix s = SeifertMatrix::validate(IntMatrix{{-1, 1}, {0, 2}});
    CHECK(s.genus() == 1);
    SeifertMatrix unknot = SeifertMatrix::validate(IntMatrix(0, 0));
    CHECK(unknot.genus() == 0);
    try {
        (void)SeifertMatrix::validate(IntMatrix::identity(2));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotUnimodularIntersection);
    }
    try {
        (void)SeifertMatrix::validate(IntMatrix::identity(3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OddDimension);
    }
    try {
        (void)SeifertMatrix::validate(IntMatrix(2, 3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OddDimension);
    }
}

TEST_CASE("alexander frozen values") {
    CHECK(alexander(twist(2)).poly == ip({-2, 5, -2}));
    CHECK(alexander(SeifertMatrix::validate(IntMatrix(0, 0))).poly == ip({1}));
    // trefoil
    CHECK(alexander(SeifertMatrix::validate(IntMatrix{{-1, 1}, {0, -1}})).poly == ip({1, -1, 1}));
}

TEST_CASE("twist family matches the closed form for all k in [-50, 50]") {
    for (long k = -50; k <= 50; ++k) {
        IntPoly expect({Int(-k), Int(2 * k + 1), Int(-k)});
        CHECK(alexander(twist(k)).poly == expect);
    }
}

TEST_CASE("alexander evaluates to a unit at t = 1 and is symmetric") {
    oracles::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        SeifertMatrix s = oracles::random_seifert(rng);
        IntPoly d = alexander(s).poly;
        CHECK(abs(d.eval(Int(1))) == 1);
        CHECK(d.degree() <= 2 * static_cast<long>(s.genus()));
        // t^{2g} d(1/t) = +- d(t): reversal within the degree-2g window
        IntPoly rev = d.reversed().mul_tpow(2 * s.genus() - static_cast<std::size_t>(d.degree()));
        CHECK((rev == d || rev == -d));
    }
}

TEST_CASE("monodromy closed form and defining identity") {
    for (long k : {-3L, -1L, 1L, 2L, 5L}) {
        IntMatrix g = monodromy(twist(k));
        IntMatrix expect{{1, 0}, {1, 0}};
        expect.at(0, 1) = k;
        CHECK(g == expect);
    }
    oracles::Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        SeifertMatrix s = oracles::random_seifert(rng);
        IntMatrix a = s.matrix();
        IntMatrix at = a.transpose();
        CHECK((at - a) * monodromy(s) == at);
    }
    CHECK_THROWS_AS((void)monodromy(SeifertMatrix::validate(IntMatrix(0, 0))), Error);
}

TEST_CASE("block_sum multiplies Alexander polynomials") {
    SeifertMatrix s = block_sum({{twist(2), 1}, {twist(6), 1}});
    CHECK(s.dim() == 4);
    IntPoly product = ip({-2, 5, -2}) * ip({-6, 13, -6});
    IntPoly got = alexander(s).poly;
    CHECK((got == product || got == -product));

    SeifertMatrix sq = block_sum({{twist(1), 2}});
    CHECK(sq.dim() == 4);
    IntPoly sq_expect = ip({-1, 3, -1}) * ip({-1, 3, -1});
    IntPoly sq_got = alexander(sq).poly;
    CHECK((sq_got == sq_expect || sq_got == -sq_expect));

    CHECK(block_sum({{SeifertMatrix::validate(IntMatrix(0, 0)), 1}}).dim() == 0);
    CHECK_THROWS_AS((void)block_sum({{twist(2), 0}}), Error);

    oracles::Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        SeifertMatrix a = oracles::random_seifert(rng, 2);
        SeifertMatrix b = oracles::random_seifert(rng, 2);
        IntPoly prod = alexander(a).poly * alexander(b).poly;
        IntPoly whole = alexander(block_sum({{a, 1}, {b, 1}})).poly;
        CHECK((whole == prod || whole == -prod));
    }
}

TEST_CASE("alexander_coprime") {
    CHECK(alexander_coprime(twist(1), twist(2)));
    CHECK_FALSE(alexander_coprime(twist(2), twist(2)));
    CHECK(alexander_coprime(twist(3), twist(5)));
    // twist:0 has Alexander t, a unit in the Laurent ring
    CHECK(alexander_coprime(twist(0), twist(0)));
    CHECK(alexander_coprime(twist(0), twist(2)));
}

TEST_CASE("is_nonsingular") {
    CHECK(is_nonsingular(twist(2)));
    CHECK(is_nonsingular(twist(1)));
    CHECK(is_nonsingular(SeifertMatrix::validate(IntMatrix(0, 0))));
    // det = 0 but valid: a singular Seifert form
    SeifertMatrix sing = SeifertMatrix::validate(IntMatrix{{0, 1}, {0, 1}});
    CHECK_FALSE(is_nonsingular(sing));
}

TEST_CASE("seifert text format round trip") {
    for (const auto& entry : catalog_entries()) {
        std::string text = emit_seifert(entry.matrix, entry.name);
        CHECK(parse_seifert(text) == entry.matrix);
    }
    for (long k : {-7L, 0L, 13L}) {
        CHECK(parse_seifert(emit_seifert(twist(k))) == twist(k));
    }
}

TEST_CASE("seifert parser diagnostics") {
    CHECK(parse_seifert("-1 1\n0 2\n") == twist(2));
    CHECK(parse_seifert("# trefoil\n-1 1\n0 -1\n").matrix() == IntMatrix{{-1, 1}, {0, -1}});
    try {
        (void)parse_seifert("1 2 3\n4 5 6\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OddDimension); // 2x3 is not square
    }
    try {
        (void)parse_seifert("-1 1\n0 x\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    try {
        (void)parse_seifert("1 2\n3\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("catalog entries validate and carry the advertised polynomials") {
    for (const auto& entry : catalog_entries()) {
        CHECK(abs(alexander(entry.matrix).poly.eval(Int(1))) == 1);
    }
    CHECK(catalog_lookup("stevedore").matrix == twist(2));
    CHECK(catalog_lookup("twist:-4").matrix == twist(-4));
    CHECK_THROWS_AS((void)catalog_lookup("granny"), Error);
}
