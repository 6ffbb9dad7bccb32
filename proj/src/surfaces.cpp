#include "g1fib/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace g1fib {

ProjBundleSpace::ProjBundleSpace(std::vector<long long> drops) : drops_(std::move(drops)) {
    if (drops_.empty()) throw std::invalid_argument("ProjBundleSpace: need rank >= 2");
    std::sort(drops_.begin(), drops_.end());
    if (drops_.front() < 0)
        throw std::invalid_argument("ProjBundleSpace: drops must be nonnegative");
}

long long ProjBundleSpace::drop_sum() const {
    return std::accumulate(drops_.begin(), drops_.end(), 0LL);
}

SplittingType ProjBundleSpace::pushforward_type() const {
    std::vector<long long> twists{0};
    for (long long a : drops_) twists.push_back(-a);
    return SplittingType(std::move(twists));
}

long long intersect(const ProjBundleSpace& space, const std::vector<SurfaceClass>& classes) {
    if (static_cast<long long>(classes.size()) != space.rank())
        throw std::invalid_argument("intersect: need one class per dimension");
    // Product of (x_i xi + y_i P): only xi^n and xi^(n-1) P survive.
    long long xi_term = 1;
    for (const auto& c : classes) xi_term *= c.x;
    long long mixed = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        long long prod = classes[j].y;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (i != j) prod *= classes[i].x;
        mixed += prod;
    }
    return xi_term * (-space.drop_sum()) + mixed;
}

long long sigma0_incidence(long long a, long long b, long long N) {
    if (a < 0 || a > b) throw std::invalid_argument("sigma0_incidence: need 0 <= a <= b");
    return N - 3 * b;
}

Cohomology leray_cohomology(const ProjBundleSpace& space, long long k, long long t) {
    if (k < 0)
        throw std::invalid_argument("leray_cohomology: k < 0 (relative duality) not supported");
    return space.pushforward_type().sym_power(k).cohomology(t);
}

bool base_locus_empty(const ProjBundleSpace& space, long long t) {
    return t >= space.max_drop();
}

long long CoverNumerology::d_t_squared(long long t) const {
    if (n == 2) return -2 * a + 4 * t;
    return -2 * a - 2 * b + d + 6 * t;
}

CoverNumerology double_cover(long long a, long long N) {
    if (a < 0) throw std::invalid_argument("double_cover: need a >= 0");
    if (N < 2 * a + 1) throw std::invalid_argument("double_cover: need N >= 2a+1");
    if (a == 0 && N < 2) throw std::invalid_argument("double_cover: need N >= 2 when a = 0");
    CoverNumerology c;
    c.n = 2;
    c.a = a;
    c.N = N;
    c.d = N - a;
    c.canonical_coeff = N - a - 2;
    c.h1_threshold = a - 2;
    c.basepoint_threshold = a - 1;
    return c;
}

CoverNumerology triple_cover(long long a, long long b, long long N) {
    if (a < 0 || a > b) throw std::invalid_argument("triple_cover: need 0 <= a <= b");
    if (N < 3 * b) throw std::invalid_argument("triple_cover: need N >= 3b");
    if (a == b && b > 0 && N < 3 * b + 1)
        throw std::invalid_argument("triple_cover: need N >= 3b+1 when a = b");
    if (a == 0 && b == 0 && N < 2) throw std::invalid_argument("triple_cover: need N >= 2 when a = b = 0");
    CoverNumerology c;
    c.n = 3;
    c.a = a;
    c.b = b;
    c.N = N;
    c.d = N - a - b;
    c.canonical_coeff = N - a - b - 2;
    c.h1_threshold = b - 2;
    c.basepoint_threshold = b - 1;
    // The base-locus argument needs Y to meet the negative section of Sigma_1.
    c.basepoint_threshold_valid = (N >= 3 * b + 1 && a < b);
    return c;
}

RationalSurfaceDivisor rational_surface_divisor(long long n) {
    if (n < 1) throw std::invalid_argument("rational_surface_divisor: need n >= 1");
    long long index;
    SurfaceClass cls;
    if (n == 1) {
        index = 1;
        cls = {1, 0};  // a section (exceptional curve), sigma^2 = -1
    } else if (n == 2) {
        index = 0;
        cls = {0, 1};  // a general fiber of the ruling
    } else if (n % 2 == 0) {
        index = 2;
        cls = {1, n / 2};  // |sigma + (n/2) F| on F_2
    } else {
        index = 1;
        cls = {1, (n - 1) / 2};  // |sigma + ((n-1)/2) F| on F_1
    }
    ProjBundleSpace model({index});
    long long d2 = intersect(model, {cls, cls});
    if (d2 != n - 2) throw std::logic_error("rational_surface_divisor: D^2 != n-2");
    RationalSurfaceDivisor out{n,
                               index,
                               cls,
                               d2,
                               d2 + 2,  // adjunction -2 = D^2 + D.K, K = -F
                               (d2 + (d2 + 2)) / 2 + 1,  // chi = (D^2 - D.K)/2 + 1
                               SplittingType(std::vector<long long>(static_cast<std::size_t>(n), 0))};
    return out;
}

}  // namespace g1fib
