#pragma once

#include <json.hpp>

#include "g1fib/atiyah.hpp"
#include "g1fib/chern.hpp"
#include "g1fib/lattice.hpp"
#include "g1fib/splitting.hpp"
#include "g1fib/surfaces.hpp"

namespace g1fib {

using json = nlohmann::json;

inline json to_json(const SplittingType& s) { return json(s.twists()); }
inline SplittingType splitting_from_json(const json& j) {
    return SplittingType(j.get<std::vector<long long>>());
}

// One integer list per block.
inline json blocks_to_json(const AtiyahType& t) { return json(t.blocks); }
inline AtiyahType atiyah_from_json(long long n0, long long r0, const json& j) {
    return AtiyahType(n0, r0, j.get<std::vector<std::vector<long long>>>());
}

inline json to_json(const FibrationInvariants& f) {
    return json{{"n", f.n}, {"d", f.d}, {"g", f.g}, {"delta", f.delta}, {"d2", f.d_squared}};
}

inline json to_json(const DiscriminantData& dd) {
    return json{{"r", dd.r},
                {"c1_sq", dd.c1_sq},
                {"c2", dd.c2},
                {"fiber_degree", dd.fiber_degree},
                {"Delta", discriminant(dd)}};
}

inline json gram_to_json(const EvenLattice& lat) { return json(lat.gram()); }
inline EvenLattice lattice_from_json(const json& j) {
    return EvenLattice(j.get<GramMatrix>());
}

inline json to_json(const ProjBundleSpace& space) { return json{{"drops", space.drops()}}; }
inline ProjBundleSpace space_from_json(const json& j) {
    return ProjBundleSpace(j.at("drops").get<std::vector<long long>>());
}

inline json to_json(const CoverNumerology& c) {
    json j{{"n", c.n},        {"a", c.a},
           {"N", c.N},        {"d", c.d},
           {"canonical_coeff", c.canonical_coeff},
           {"h1_threshold", c.h1_threshold},
           {"basepoint_threshold", c.basepoint_threshold},
           {"d0_squared", c.d_t_squared(0)}};
    if (c.n == 3) j["b"] = c.b;
    return j;
}

inline json to_json(const RationalSurfaceDivisor& r) {
    return json{{"n", r.n},
                {"hirzebruch_index", r.hirzebruch_index},
                {"class", {{"sigma", r.divisor_class.x}, {"F", r.divisor_class.y}}},
                {"d_squared", r.d_squared},
                {"fiber_degree", r.fiber_degree},
                {"chi", r.chi},
                {"pushforward", r.pushforward.twists()}};
}

}  // namespace g1fib
