#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g1fib/chern.hpp"

using namespace g1fib;

TEST_CASE("FibrationInvariants dictionary") {
    FibrationInvariants f(3, 2, 0, -4);
    CHECK(f.d_squared == -2 * -4 - 5 * 2);  // -2*delta - (n+2)d

    for (long long n = 1; n <= 5; ++n)
        for (long long d = 1; d <= 5; ++d)
            for (long long delta = -8; delta <= 8; ++delta) {
                FibrationInvariants a(n, d, 0, delta);
                auto b = FibrationInvariants::from_d_squared(n, d, 0, a.d_squared);
                CHECK(b.delta == delta);
                CHECK((a.d_squared - n * d) % 2 == 0);
            }

    // D^2 with the wrong parity is rejected
    CHECK_THROWS(FibrationInvariants::from_d_squared(2, 1, 0, 1));
}

TEST_CASE("discriminant") {
    CHECK(discriminant({2, 0, 1, 0}) == 4);
    CHECK(discriminant({1, 7, 0, 0}) == 0);
    CHECK(discriminant({3, -6, 5, 0}) == 42);
}

TEST_CASE("cthm1_bound") {
    for (long long d = 1; d <= 6; ++d) {
        CHECK(cthm1_bound(2, 1, d, false) == 3 * d);   // e = 1
        CHECK(cthm1_bound(2, 3, d, false) == 3 * d);
        CHECK(cthm1_bound(2, 4, d, true) == 2 * d + 2);  // e = 2
        CHECK(cthm1_bound(1, 5, d, false) == 0);
    }
}

TEST_CASE("gamma_bound") {
    CHECK(gamma_bound(3, 0, true) == -2);
    CHECK(gamma_bound(1, 0, true) == 0);
    CHECK(gamma_bound(1, 3, false) == 0);
    CHECK(gamma_bound(5, 2, false) == 0);
    CHECK_THROWS(gamma_bound(2, 1, true));
}

TEST_CASE("universal_extension") {
    // Delta = -2n*dw + 2r*delta + r(n+2)d collapses to r(n+2)d here.
    auto dd = universal_extension(2, 1, 0, 0, 1);
    CHECK(discriminant(dd) == 4);
    CHECK(dd.r == 2);
    CHECK(dd.fiber_degree == -2);

    // n=3, r=1: Delta = -6 dw + 2 delta + 5d; with dw = b-d, delta = a+b-3d
    // this is 2a - 4b + 5d.
    for (long long a = 0; a <= 4; ++a)
        for (long long b = a; b <= 4; ++b)
            for (long long d = 1; d <= 4; ++d) {
                auto u = universal_extension(3, 1, b - d, a + b - 3 * d, d);
                CHECK(discriminant(u) == 2 * a - 4 * b + 5 * d);
            }
    CHECK_THROWS(universal_extension(3, 3, 0, 0, 1));
}

TEST_CASE("slope gap bound from the discriminant inequality") {
    CHECK(slope_gap_from_cthm1(2, 1, 3, true) == Rational(1));
    CHECK(slope_gap_from_cthm1(3, 2, 4, true) == Rational(1));
    CHECK(slope_gap_from_cthm1(5, 2, 2, false) == Rational(3, 5));

    for (long long n = 2; n <= 6; ++n)
        for (long long r = 1; r < n; ++r)
            for (long long d = 1; d <= 6; ++d)
                for (bool p1 : {false, true})
                    CHECK(slope_gap_from_cthm1(n, r, d, p1) ==
                          admissibility_bound(n, r, d, Side::Sub, p1));
}

TEST_CASE("d2_thresholds") {
    for (long long d = 1; d <= 10; ++d) {
        auto t2 = d2_thresholds(2, d, 0);
        CHECK(t2.h1_bound == 2 * d - 10);
        CHECK(t2.basepoint_bound == 2 * d - 6);
        auto t3 = d2_thresholds(3, d, 0);
        CHECK(t3.h1_bound == 3 * d - 12);
        CHECK(t3.basepoint_bound == 3 * d - 8);
    }
    auto t = d2_thresholds(3, 2, 1);
    CHECK(t.h1_bound == 6);
    CHECK(t.basepoint_bound == 10);
    // n even, g > 0 uses the general even form
    auto t4 = d2_thresholds(4, 3, 1);
    CHECK(t4.h1_bound == (2 * 4 - 2) * 3);
    CHECK(t4.basepoint_bound == (2 * 4 - 2) * 3 + 4);
}
