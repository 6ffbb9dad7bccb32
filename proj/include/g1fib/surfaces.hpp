#pragma once

#include <vector>

#include "g1fib/splitting.hpp"

namespace g1fib {

// The projective bundle P(O + O(-a_2) + ... + O(-a_n)) over P^1, with
// 0 <= a_2 <= ... <= a_n. Classes are written x*xi + y*P where xi is the
// tautological divisor and P a fiber; the intersection ring is generated by
// xi^n = -sum(drops), xi^(n-1).P = 1, P^2 = 0. The rank-2 case is the
// Hirzebruch surface F_a with xi the negative section.
class ProjBundleSpace {
public:
    explicit ProjBundleSpace(std::vector<long long> drops);

    long long rank() const { return static_cast<long long>(drops_.size()) + 1; }
    const std::vector<long long>& drops() const { return drops_; }
    long long drop_sum() const;
    long long max_drop() const { return drops_.empty() ? 0 : drops_.back(); }

    // Splitting type (0, -a_2, ..., -a_n) of the pushforward of O_P(1).
    SplittingType pushforward_type() const;

private:
    std::vector<long long> drops_;  // sorted ascending
};

struct SurfaceClass {
    long long x = 0;  // xi coefficient
    long long y = 0;  // P coefficient
};

// Top intersection number of rank() classes, expanded multilinearly.
long long intersect(const ProjBundleSpace& space, const std::vector<SurfaceClass>& classes);

// Y.sigma_0 = N - 3b for Y in |3 Sigma_1 + N P| on the n = 3 model; positive
// values force a base locus for small twists.
long long sigma0_incidence(long long a, long long b, long long N);

// H^0/H^1 of O_P(k Sigma_1 + t P) via the pushforward Sym^k(drops) (+) O(t).
// Only k >= 0 is supported.
Cohomology leray_cohomology(const ProjBundleSpace& space, long long k, long long t);

// Base locus of |Sigma_1 + t P| is empty iff t >= max drop.
bool base_locus_empty(const ProjBundleSpace& space, long long t);

struct CoverNumerology {
    long long n = 2;
    long long a = 0;
    long long b = 0;  // unused for n = 2
    long long N = 0;
    long long d = 0;
    long long canonical_coeff = 0;  // K_Y = (coeff) F
    long long h1_threshold = 0;     // h^1(D + tF) != 0 iff t <= this
    long long basepoint_threshold = 0;
    bool basepoint_threshold_valid = true;

    long long d_t_squared(long long t) const;
};

// Double cover of F_a branched in |4 sigma_0 + 2NP|; requires N >= 2a+1 and
// N >= 2 when a = 0.
CoverNumerology double_cover(long long a, long long N);

// Cubic surface in |3 Sigma_1 + NP| on P(O + O(-a) + O(-b)); requires
// 0 <= a <= b, N >= 3b (N >= 3b+1 if a = b > 0, N >= 2 if a = b = 0).
CoverNumerology triple_cover(long long a, long long b, long long N);

struct RationalSurfaceDivisor {
    long long n = 1;
    long long hirzebruch_index = 0;
    SurfaceClass divisor_class;  // x*sigma + y*F on F_(index)
    long long d_squared = 0;     // = n - 2
    long long fiber_degree = 0;  // = n, via adjunction with K = -F
    long long chi = 0;           // = n
    SplittingType pushforward;   // O^n
};

// The divisor class on a rational elliptic surface (computed on its
// Hirzebruch model) realizing D^2 = n-2 and trivial pushforward.
RationalSurfaceDivisor rational_surface_divisor(long long n);

}  // namespace g1fib
