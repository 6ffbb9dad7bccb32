#pragma once

#include <cstdint>
#include <vector>

#include "g1fib/chern.hpp"

namespace g1fib {

using LatticeVector = std::vector<long long>;
using GramMatrix = std::vector<std::vector<long long>>;

// An even integral lattice given by its Gram matrix (symmetric, even
// diagonal). Immutable after construction.
class EvenLattice {
public:
    explicit EvenLattice(GramMatrix gram);

    long long rank() const { return static_cast<long long>(gram_.size()); }
    const GramMatrix& gram() const { return gram_; }

    long long inner(const LatticeVector& v, const LatticeVector& w) const;
    long long square(const LatticeVector& v) const { return inner(v, v); }

    // Exact determinant (Bareiss over big integers), as a decimal string.
    std::string determinant_string() const;
    bool is_unimodular() const;

    // True when the first two basis vectors span a standard hyperbolic
    // summand orthogonal to the rest.
    bool has_designated_u_summand() const;

private:
    GramMatrix gram_;
};

// A class in L/nL, coordinates reduced to [0, n).
struct ModClass {
    long long n = 1;
    std::vector<long long> coords;

    ModClass(long long n, std::vector<long long> coords);
};

// The rank-2 hyperbolic lattice U.
EvenLattice hyperbolic_u();
// Direct sum of Gram matrices.
EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b);
// The negated E8 root lattice (negated Cartan matrix of E8).
EvenLattice minus_e8();

// Lambda(d) = (2d-2) U + d (-E8), rank 12d-4, even unimodular.
EvenLattice lambda_d(long long d);

// Pontrjagin square: square of any integral lift of a, reduced to [0, 2n).
// Well defined because the lattice is even.
long long pontrjagin(const EvenLattice& lat, const ModClass& a);

long long divisibility(const ModClass& a);
bool is_primitive(const ModClass& a);

// eps + (j/2) delta in the designated hyperbolic summand; j must be even.
LatticeVector wall_representative(const EvenLattice& lat, long long j);

// Root reflection x -> x - (2(x.v)/(v.v)) v for v.v in {2, -2}.
LatticeVector reflect(const EvenLattice& lat, const LatticeVector& v, const LatticeVector& x);

struct Orbit {
    long long pontrjagin = 0;    // constant on the orbit
    long long divisibility = 1;  // constant on the orbit
    std::vector<ModClass> members;
};

struct OrbitPartition {
    std::vector<Orbit> orbits;   // primitive classes only
    long long roots_used = 0;
};

// BFS over the primitive classes of L/nL under reflections in all roots with
// square +-2 and coordinates bounded by root_bound. n^rank must stay within
// budget (default 2^20).
OrbitPartition orbit_partition(const EvenLattice& lat, long long n, long long root_bound,
                               std::uint64_t budget = (1ULL << 20));

// Number of irreducible moduli components for primitive classes: one per
// even residue mod 2n. Requires d >= 2.
long long component_count(long long d, long long n);

// (D^2 + n^2 d) mod 2n, always even; throws on inconsistent invariants.
long long asd_congruence(const FibrationInvariants& f);

}  // namespace g1fib
