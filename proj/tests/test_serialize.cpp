#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g1fib/serialize.hpp"

using namespace g1fib;

TEST_CASE("splitting type round trip") {
    SplittingType s({-3, 0, 2});
    json j = to_json(s);
    CHECK(j.dump() == "[-3,0,2]");
    CHECK(splitting_from_json(j) == s);
    CHECK(splitting_from_json(json::parse("[2,0,-3]")) == s);  // re-sorted
}

TEST_CASE("atiyah blocks round trip") {
    AtiyahType t(-3, 2, {{2, 1}, {1}});
    json j = blocks_to_json(t);
    auto back = atiyah_from_json(t.n0, t.r0, j);
    CHECK(back.blocks == t.blocks);
    CHECK(back.e() == t.e());
}

TEST_CASE("fibration invariants json") {
    FibrationInvariants f(3, 2, 0, -4);
    json j = to_json(f);
    CHECK(j["n"] == 3);
    CHECK(j["d2"] == f.d_squared);
    auto back = FibrationInvariants::from_d_squared(j["n"], j["d"], j["g"], j["d2"]);
    CHECK(back.delta == f.delta);
}

TEST_CASE("discriminant data json") {
    auto dd = universal_extension(3, 1, -1, -5, 2);
    json j = to_json(dd);
    CHECK(j["Delta"] == discriminant(dd));
    CHECK(j["r"] == dd.r);
}

TEST_CASE("gram matrix round trip") {
    EvenLattice uu = direct_sum(hyperbolic_u(), minus_e8());
    json j = gram_to_json(uu);
    EvenLattice back = lattice_from_json(j);
    CHECK(back.gram() == uu.gram());
    CHECK(back.is_unimodular());
}

TEST_CASE("space and cover json") {
    ProjBundleSpace s({1, 2});
    CHECK(space_from_json(to_json(s)).drops() == s.drops());

    auto c3 = triple_cover(1, 2, 7);
    json j = to_json(c3);
    CHECK(j["d"] == 4);
    CHECK(j["b"] == 2);
    auto c2 = double_cover(1, 4);
    CHECK_FALSE(to_json(c2).contains("b"));
}

TEST_CASE("rational surface divisor json") {
    json j = to_json(rational_surface_divisor(7));
    CHECK(j["hirzebruch_index"] == 1);
    CHECK(j["d_squared"] == 5);
    CHECK(j["pushforward"].size() == 7);
}
