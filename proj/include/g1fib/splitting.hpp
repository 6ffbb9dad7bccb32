#pragma once

#include <vector>

#include "g1fib/rational.hpp"

namespace g1fib {

struct Cohomology {
    long long h0 = 0;
    long long h1 = 0;
    long long chi = 0;
};

// A direct sum of line bundles O(a_1) + ... + O(a_n) on P^1, with the twists
// kept sorted ascending. Immutable after construction.
class SplittingType {
public:
    // Sorts the input; throws std::invalid_argument on an empty list.
    explicit SplittingType(std::vector<long long> twists);

    long long rank() const { return static_cast<long long>(twists_.size()); }
    long long degree() const;
    Rational slope() const { return Rational(degree(), rank()); }
    long long min_twist() const { return twists_.front(); }
    long long max_twist() const { return twists_.back(); }
    const std::vector<long long>& twists() const { return twists_; }

    SplittingType dual() const;
    SplittingType twisted(long long t) const;
    SplittingType tensor(const SplittingType& other) const;
    SplittingType sym_power(long long k) const;

    // Summand-wise cohomology of S(t): h0 = sum max(a_i+t+1, 0),
    // h1 = sum max(-a_i-t-1, 0).
    Cohomology cohomology(long long t) const;

    // max twist - min twist <= 1, i.e. of the form O(a)^k + O(a-1)^(n-k).
    bool is_rigid() const;

    // Slope of the top-r summands minus the slope of the whole bundle.
    // Requires 1 <= r < rank. Always >= 0.
    Rational subbundle_slope_gap(long long r) const;

    // Slope of the whole bundle minus the slope of the bottom-r summands.
    // Requires 1 <= r < rank. Always >= 0.
    Rational quotient_slope_gap(long long r) const;

    bool operator==(const SplittingType& other) const { return twists_ == other.twists_; }
    bool operator<(const SplittingType& other) const { return twists_ < other.twists_; }

private:
    std::vector<long long> twists_;
};

enum class Side { Sub, Quot };

// Upper bound on the slope gap of a rank-r subbundle (side = Sub, measured as
// slope(W) - slope(V)) or on slope(V) - slope(Q) for a rank-r quotient
// (side = Quot), for a rank-n bundle R^1f_*O(-D) of a genus one fibration
// with chi(O_Y) = d. The over_p1 form is sharper by (e-1)/(nr).
Rational admissibility_bound(long long n, long long r, long long d, Side side, bool over_p1);

struct RemarkBounds {
    bool top_gap_ok = false;     // n*a_n - sum a_i within its bound
    bool bottom_gap_ok = false;  // sum a_i - n*a_1 within its bound
    Rational total_gap_bound;    // implied bound on a_n - a_1
};

// The two rank-one displayed inequalities over P^1 and the implied bound on
// the total twist gap.
RemarkBounds remark_bounds(const SplittingType& s, long long d);

// True iff s passes admissibility_bound for every r on both sides (over P^1)
// together with both remark_bounds displays.
bool is_admissible(const SplittingType& s, long long d);

// All sorted splitting types of rank n with total degree delta passing
// is_admissible. The rank-one bounds confine every twist to a finite window
// around delta/n, so the search is exhaustive.
std::vector<SplittingType> enumerate_admissible(long long n, long long d, long long delta);

}  // namespace g1fib
