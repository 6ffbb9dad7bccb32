#pragma once

#include "g1fib/rational.hpp"
#include "g1fib/splitting.hpp"

namespace g1fib {

// Numerical invariants of a genus one fibration f: Y -> B with an n-section
// D, linked by D^2 = -2*delta - (n+2)*d where delta = deg R^1f_*O_Y(-D) and
// d = chi(O_Y).
struct FibrationInvariants {
    long long n = 1;        // fiber degree of D
    long long d = 1;        // chi(O_Y)
    long long g = 0;        // genus of the base
    long long delta = 0;    // deg R^1f_*O_Y(-D)
    long long d_squared = 0;

    FibrationInvariants(long long n, long long d, long long g, long long delta);

    // Recovers delta from D^2; throws if D^2 != n*d mod 2.
    static FibrationInvariants from_d_squared(long long n, long long d, long long g,
                                              long long d_squared);

    Rational slope() const { return Rational(delta, n); }
};

struct DiscriminantData {
    long long r = 1;
    long long c1_sq = 0;
    long long c2 = 0;
    long long fiber_degree = 0;
};

// Delta(V) = 2r*c2 - (r-1)*c1^2.
long long discriminant(const DiscriminantData& dd);

// Lower bound on Delta(V) for a rank-r bundle with stable generic-fiber
// restriction of degree n_deg: (r^2 - e)d, plus 2(e-1) over P^1.
long long cthm1_bound(long long r, long long n_deg, long long d, bool over_p1);

// Degree bound for the structure sheaf pushforward of the degree-e spectral
// cover: 0 in general, -(e-1) over P^1.
long long gamma_bound(long long e, long long g, bool over_p1);

// Chern data of the universal extension 0 -> O(-D) -> V -> f^*W -> 0 built
// from a rank-r subbundle W of degree delta_w. The discriminant is checked
// at construction against -2n*delta_w + 2r*delta + r(n+2)d.
DiscriminantData universal_extension(long long n, long long r, long long delta_w,
                                     long long delta, long long d);

// The subbundle slope-gap bound obtained by rearranging the discriminant
// inequality for the universal extension; agrees with
// admissibility_bound(n, r, d, Side::Sub, over_p1) identically.
Rational slope_gap_from_cthm1(long long n, long long r, long long d, bool over_p1);

struct D2Thresholds {
    long long h1_bound = 0;        // D^2 above this forces h^1(D) = 0
    long long basepoint_bound = 0; // D^2 above this forces |D| base point free
};

// Thresholds by parity of n, with the sharper g = 0 forms when n is even.
D2Thresholds d2_thresholds(long long n, long long d, long long g);

}  // namespace g1fib
