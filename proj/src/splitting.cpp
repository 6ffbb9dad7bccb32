#include "g1fib/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace g1fib {

SplittingType::SplittingType(std::vector<long long> twists) : twists_(std::move(twists)) {
    if (twists_.empty()) throw std::invalid_argument("splitting type must be nonempty");
    std::sort(twists_.begin(), twists_.end());
}

long long SplittingType::degree() const {
    return std::accumulate(twists_.begin(), twists_.end(), 0LL);
}

SplittingType SplittingType::dual() const {
    std::vector<long long> t;
    t.reserve(twists_.size());
    for (long long a : twists_) t.push_back(-a);
    return SplittingType(std::move(t));
}

SplittingType SplittingType::twisted(long long t) const {
    std::vector<long long> out;
    out.reserve(twists_.size());
    for (long long a : twists_) out.push_back(a + t);
    return SplittingType(std::move(out));
}

SplittingType SplittingType::tensor(const SplittingType& other) const {
    std::vector<long long> out;
    out.reserve(twists_.size() * other.twists_.size());
    for (long long a : twists_)
        for (long long b : other.twists_) out.push_back(a + b);
    return SplittingType(std::move(out));
}

SplittingType SplittingType::sym_power(long long k) const {
    if (k < 0) throw std::invalid_argument("sym_power: k must be >= 0");
    // Degree-k monomials in the summands: all m_1 + ... + m_n = k, m_i >= 0.
    std::vector<long long> out;
    std::function<void(std::size_t, long long, long long)> rec =
        [&](std::size_t i, long long remaining, long long acc) {
            if (i + 1 == twists_.size()) {
                out.push_back(acc + remaining * twists_[i]);
                return;
            }
            for (long long m = 0; m <= remaining; ++m)
                rec(i + 1, remaining - m, acc + m * twists_[i]);
        };
    rec(0, k, 0);
    return SplittingType(std::move(out));
}

Cohomology SplittingType::cohomology(long long t) const {
    Cohomology c;
    for (long long a : twists_) {
        c.h0 += std::max(a + t + 1, 0LL);
        c.h1 += std::max(-a - t - 1, 0LL);
        c.chi += a + t + 1;
    }
    return c;
}

bool SplittingType::is_rigid() const {
    return max_twist() - min_twist() <= 1;
}

Rational SplittingType::subbundle_slope_gap(long long r) const {
    long long n = rank();
    if (r < 1 || r >= n) throw std::invalid_argument("subbundle_slope_gap: need 1 <= r < n");
    long long top = 0;
    for (long long i = n - r; i < n; ++i) top += twists_[static_cast<std::size_t>(i)];
    return Rational(top, r) - slope();
}

Rational SplittingType::quotient_slope_gap(long long r) const {
    long long n = rank();
    if (r < 1 || r >= n) throw std::invalid_argument("quotient_slope_gap: need 1 <= r < n");
    long long bottom = 0;
    for (long long i = 0; i < r; ++i) bottom += twists_[static_cast<std::size_t>(i)];
    return slope() - Rational(bottom, r);
}

Rational admissibility_bound(long long n, long long r, long long d, Side side, bool over_p1) {
    if (r < 1 || r >= n) throw std::invalid_argument("admissibility_bound: need 1 <= r < n");
    if (d < 1) throw std::invalid_argument("admissibility_bound: need d >= 1");
    long long e = (side == Side::Sub) ? std::gcd(r + 1, n) : std::gcd(n - r + 1, n);
    Rational bound = Rational(r * (n - r) + (e - 1), 2 * n * r) * d;
    if (over_p1) bound -= Rational(e - 1, n * r);
    return bound;
}

RemarkBounds remark_bounds(const SplittingType& s, long long d) {
    if (d < 1) throw std::invalid_argument("remark_bounds: need d >= 1");
    long long n = s.rank();
    long long sum = s.degree();
    Rational top_rhs = (n % 2 == 1) ? Rational((n - 1) * d, 2) : Rational(n * d, 2) - 1;
    Rational bottom_rhs((n - 1) * (d - 1));
    RemarkBounds rb;
    rb.top_gap_ok = Rational(n * s.max_twist() - sum) <= top_rhs;
    rb.bottom_gap_ok = Rational(sum - n * s.min_twist()) <= bottom_rhs;
    rb.total_gap_bound = (top_rhs + bottom_rhs) / n;
    return rb;
}

bool is_admissible(const SplittingType& s, long long d) {
    long long n = s.rank();
    if (n < 2) return true;
    for (long long r = 1; r < n; ++r) {
        if (s.subbundle_slope_gap(r) > admissibility_bound(n, r, d, Side::Sub, true)) return false;
        if (s.quotient_slope_gap(r) > admissibility_bound(n, r, d, Side::Quot, true)) return false;
    }
    RemarkBounds rb = remark_bounds(s, d);
    return rb.top_gap_ok && rb.bottom_gap_ok;
}

std::vector<SplittingType> enumerate_admissible(long long n, long long d, long long delta) {
    if (n < 2) throw std::invalid_argument("enumerate_admissible: need n >= 2");
    if (d < 1) throw std::invalid_argument("enumerate_admissible: need d >= 1");
    // Any admissible type has its slope between a_1 and a_n and total gap at
    // most the remark bound, so every twist lies within B of delta/n.
    Rational top_rhs = (n % 2 == 1) ? Rational((n - 1) * d, 2) : Rational(n * d, 2) - 1;
    long long window = ceil_rat((top_rhs + Rational((n - 1) * (d - 1))) / n) + 1;
    long long lo = floor_rat(Rational(delta, n)) - window;
    long long hi = ceil_rat(Rational(delta, n)) + window;

    std::vector<SplittingType> result;
    std::vector<long long> current;
    std::function<void(long long, long long, long long)> rec =
        [&](long long idx, long long minval, long long remaining) {
            if (idx == n) {
                if (remaining == 0) {
                    SplittingType s(current);
                    if (is_admissible(s, d)) result.push_back(std::move(s));
                }
                return;
            }
            long long slots = n - idx;
            for (long long a = minval; a <= hi; ++a) {
                // remaining twists are all >= a and <= hi
                if (a * slots > remaining) break;
                if (remaining - a > hi * (slots - 1)) continue;
                current.push_back(a);
                rec(idx + 1, a, remaining - a);
                current.pop_back();
            }
        };
    rec(0, lo, delta);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace g1fib
