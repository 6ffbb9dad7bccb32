#include "g1fib/chern.hpp"

#include <stdexcept>

#include "g1fib/atiyah.hpp"

namespace g1fib {

namespace {

long long mod2(long long x) { return ((x % 2) + 2) % 2; }

}  // namespace

FibrationInvariants::FibrationInvariants(long long n_, long long d_, long long g_, long long delta_)
    : n(n_), d(d_), g(g_), delta(delta_) {
    if (n < 1) throw std::invalid_argument("FibrationInvariants: n must be positive");
    if (d < 1) throw std::invalid_argument("FibrationInvariants: d must be positive");
    if (g < 0) throw std::invalid_argument("FibrationInvariants: g must be nonnegative");
    d_squared = -2 * delta - (n + 2) * d;
}

FibrationInvariants FibrationInvariants::from_d_squared(long long n, long long d, long long g,
                                                        long long d_squared) {
    if (mod2(d_squared) != mod2(n * d))
        throw std::invalid_argument("FibrationInvariants: D^2 must equal n*d mod 2");
    long long delta = -(d_squared + (n + 2) * d) / 2;
    return FibrationInvariants(n, d, g, delta);
}

long long discriminant(const DiscriminantData& dd) {
    if (dd.r < 1) throw std::invalid_argument("discriminant: rank must be positive");
    return 2 * dd.r * dd.c2 - (dd.r - 1) * dd.c1_sq;
}

long long cthm1_bound(long long r, long long n_deg, long long d, bool over_p1) {
    if (r < 1) throw std::invalid_argument("cthm1_bound: r must be positive");
    if (d < 1) throw std::invalid_argument("cthm1_bound: d must be positive");
    long long e = e_invariant(n_deg, r);
    long long bound = (r * r - e) * d;
    if (over_p1) bound += 2 * (e - 1);
    return bound;
}

long long gamma_bound(long long e, long long g, bool over_p1) {
    if (e < 1) throw std::invalid_argument("gamma_bound: e must be positive");
    if (over_p1) {
        if (g != 0) throw std::invalid_argument("gamma_bound: over_p1 requires g = 0");
        return -(e - 1);
    }
    return 0;
}

DiscriminantData universal_extension(long long n, long long r, long long delta_w,
                                     long long delta, long long d) {
    if (r < 1 || r >= n) throw std::invalid_argument("universal_extension: need 1 <= r < n");
    FibrationInvariants fib(n, d, 0, delta);
    DiscriminantData dd;
    dd.r = r + 1;
    dd.fiber_degree = -n;
    dd.c1_sq = fib.d_squared - 2 * n * delta_w;  // c1 = -D + delta_w * F
    dd.c2 = -n * delta_w;
    long long expected = -2 * n * delta_w + 2 * r * delta + r * (n + 2) * d;
    if (discriminant(dd) != expected)
        throw std::logic_error("universal_extension: discriminant identity failed");
    return dd;
}

Rational slope_gap_from_cthm1(long long n, long long r, long long d, bool over_p1) {
    if (r < 1 || r >= n) throw std::invalid_argument("slope_gap_from_cthm1: need 1 <= r < n");
    if (d < 1) throw std::invalid_argument("slope_gap_from_cthm1: d must be positive");
    // Delta(V) = -2n*delta_w + 2r*delta + r(n+2)d >= cthm1_bound for the
    // rank r+1 extension of fiber degree -n; solve for n*delta_w - r*delta.
    long long c = cthm1_bound(r + 1, -n, d, over_p1);
    return Rational(r * (n + 2) * d - c, 2 * n * r);
}

D2Thresholds d2_thresholds(long long n, long long d, long long g) {
    if (n < 2) throw std::invalid_argument("d2_thresholds: need n >= 2");
    if (d < 1) throw std::invalid_argument("d2_thresholds: need d >= 1");
    if (g < 0) throw std::invalid_argument("d2_thresholds: need g >= 0");
    D2Thresholds t;
    if (n % 2 == 1) {
        t.h1_bound = (2 * n - 3) * d + 4 * n * (g - 1);
        t.basepoint_bound = t.h1_bound + 4;
    } else if (g == 0) {
        t.h1_bound = (2 * n - 2) * d - 4 * n - 2;
        t.basepoint_bound = (2 * n - 2) * d - 4 * n + 2;
    } else {
        t.h1_bound = (2 * n - 2) * d + 4 * n * (g - 1);
        t.basepoint_bound = t.h1_bound + 4;
    }
    return t;
}

}  // namespace g1fib
