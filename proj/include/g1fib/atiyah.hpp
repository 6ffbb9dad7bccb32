#pragma once

#include <vector>

namespace g1fib {

// Decomposition data of a semistable bundle on an elliptic curve: a stable
// building block of degree n0 and rank r0 with gcd(|n0|, r0) = 1, and one
// multiplicity partition per distinct determinant line bundle. The
// determinants themselves are opaque; only which block a summand belongs to
// matters for Hom counts.
struct AtiyahType {
    long long n0 = 0;
    long long r0 = 1;
    std::vector<std::vector<long long>> blocks;

    // Throws std::invalid_argument if gcd(|n0|, r0) != 1 or a partition is
    // empty or has a nonpositive part.
    AtiyahType(long long n0, long long r0, std::vector<std::vector<long long>> blocks);

    long long e() const;  // total Jordan-Holder multiplicity
    long long rank() const { return e() * r0; }
    long long degree() const { return e() * n0; }
};

// gcd(|n|, r), with e(0, r) = r.
long long e_invariant(long long n, long long r);

// dim End = sum over blocks of sum_{i,j} min(d_i, d_j) over ordered pairs.
long long end_dimension(const AtiyahType& t);

// End is commutative iff every block is indecomposable (single part).
bool is_commutative(const AtiyahType& t);

struct RegLemmaReport {
    long long e = 0;
    long long types_checked = 0;
    long long equality_cases = 0;  // types with dim End == e
    bool all_pass = true;          // dim End >= e with equality iff commutative
    std::vector<AtiyahType> counterexamples;
};

// Enumerates every AtiyahType with total multiplicity e (all multisets of
// partitions summing to e) and checks dim End >= e with equality exactly on
// the all-indecomposable configurations.
RegLemmaReport verify_reg_lemma(long long e, long long cap = 12);

}  // namespace g1fib
