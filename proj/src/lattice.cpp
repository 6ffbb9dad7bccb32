#include "g1fib/lattice.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace g1fib {

namespace {

using BigInt = boost::multiprecision::cpp_int;

long long mod_nonneg(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

EvenLattice::EvenLattice(GramMatrix gram) : gram_(std::move(gram)) {
    std::size_t r = gram_.size();
    if (r == 0) throw std::invalid_argument("EvenLattice: empty Gram matrix");
    for (std::size_t i = 0; i < r; ++i) {
        if (gram_[i].size() != r) throw std::invalid_argument("EvenLattice: Gram matrix not square");
        if (gram_[i][i] % 2 != 0)
            throw std::invalid_argument("EvenLattice: diagonal entries must be even");
        for (std::size_t j = 0; j < r; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("EvenLattice: Gram matrix not symmetric");
    }
}

long long EvenLattice::inner(const LatticeVector& v, const LatticeVector& w) const {
    if (v.size() != gram_.size() || w.size() != gram_.size())
        throw std::invalid_argument("inner: dimension mismatch");
    long long acc = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < gram_.size(); ++j) acc += v[i] * gram_[i][j] * w[j];
    }
    return acc;
}

std::string EvenLattice::determinant_string() const {
    // Bareiss fraction-free elimination; all divisions are exact.
    std::size_t r = gram_.size();
    std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m[i][j] = gram_[i][j];
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < r; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < r && m[p][k] == 0) ++p;
            if (p == r) return "0";
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i)
            for (std::size_t j = k + 1; j < r; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    BigInt det = sign * m[r - 1][r - 1];
    return det.str();
}

bool EvenLattice::is_unimodular() const {
    std::string det = determinant_string();
    return det == "1" || det == "-1";
}

bool EvenLattice::has_designated_u_summand() const {
    if (rank() < 2) return false;
    if (gram_[0][0] != 0 || gram_[1][1] != 0 || gram_[0][1] != 1) return false;
    for (long long j = 2; j < rank(); ++j) {
        auto ju = static_cast<std::size_t>(j);
        if (gram_[0][ju] != 0 || gram_[1][ju] != 0) return false;
    }
    return true;
}

ModClass::ModClass(long long n_, std::vector<long long> coords_) : n(n_), coords(std::move(coords_)) {
    if (n < 1) throw std::invalid_argument("ModClass: n must be positive");
    for (auto& c : coords) c = mod_nonneg(c, n);
}

EvenLattice hyperbolic_u() {
    return EvenLattice({{0, 1}, {1, 0}});
}

EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b) {
    long long ra = a.rank(), rb = b.rank();
    GramMatrix g(static_cast<std::size_t>(ra + rb),
                 std::vector<long long>(static_cast<std::size_t>(ra + rb), 0));
    for (long long i = 0; i < ra; ++i)
        for (long long j = 0; j < ra; ++j) g[i][j] = a.gram()[i][j];
    for (long long i = 0; i < rb; ++i)
        for (long long j = 0; j < rb; ++j) g[ra + i][ra + j] = b.gram()[i][j];
    return EvenLattice(std::move(g));
}

EvenLattice minus_e8() {
    // Negated Cartan matrix of E8: chain 1-2-3-4-5-6-7 with node 8 attached
    // to node 5 (arm lengths 4, 2, 1 from the branch node).
    GramMatrix g(8, std::vector<long long>(8, 0));
    for (std::size_t i = 0; i < 8; ++i) g[i][i] = -2;
    auto link = [&](std::size_t i, std::size_t j) { g[i][j] = g[j][i] = 1; };
    link(0, 1);
    link(1, 2);
    link(2, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(4, 7);
    return EvenLattice(std::move(g));
}

EvenLattice lambda_d(long long d) {
    if (d < 1) throw std::invalid_argument("lambda_d: d must be positive");
    EvenLattice u = hyperbolic_u();
    EvenLattice e8 = minus_e8();
    EvenLattice result = (d >= 2) ? u : e8;
    long long u_blocks = 2 * d - 2;
    for (long long i = (d >= 2) ? 1 : 0; i < u_blocks; ++i) result = direct_sum(result, u);
    for (long long i = (d >= 2) ? 0 : 1; i < d; ++i) result = direct_sum(result, e8);
    if (result.rank() != 12 * d - 4) throw std::logic_error("lambda_d: rank mismatch");
    if (!result.is_unimodular()) throw std::logic_error("lambda_d: not unimodular");
    return result;
}

long long pontrjagin(const EvenLattice& lat, const ModClass& a) {
    if (static_cast<long long>(a.coords.size()) != lat.rank())
        throw std::invalid_argument("pontrjagin: dimension mismatch");
    return mod_nonneg(lat.square(a.coords), 2 * a.n);
}

long long divisibility(const ModClass& a) {
    long long g = a.n;
    for (long long c : a.coords) g = std::gcd(g, c);
    return g;
}

bool is_primitive(const ModClass& a) {
    return divisibility(a) == 1;
}

LatticeVector wall_representative(const EvenLattice& lat, long long j) {
    if (j % 2 != 0) throw std::invalid_argument("wall_representative: j must be even");
    if (!lat.has_designated_u_summand())
        throw std::invalid_argument("wall_representative: lattice has no designated U summand");
    LatticeVector v(static_cast<std::size_t>(lat.rank()), 0);
    v[0] = 1;
    v[1] = j / 2;
    return v;
}

LatticeVector reflect(const EvenLattice& lat, const LatticeVector& v, const LatticeVector& x) {
    long long vv = lat.square(v);
    if (vv != 2 && vv != -2) throw std::invalid_argument("reflect: v.v must be +-2");
    long long xv = lat.inner(x, v);
    long long coef = 2 * xv / vv;  // exact since vv = +-2
    LatticeVector out(x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= coef * v[i];
    return out;
}

namespace {

// All vectors with coordinates in [-bound, bound] and square +-2.
std::vector<LatticeVector> bounded_roots(const EvenLattice& lat, long long bound,
                                         std::uint64_t candidate_cap = 100000000ULL) {
    std::uint64_t candidates = 1;
    for (long long i = 0; i < lat.rank(); ++i) {
        candidates *= static_cast<std::uint64_t>(2 * bound + 1);
        if (candidates > candidate_cap)
            throw std::invalid_argument("bounded_roots: search space exceeds budget");
    }
    std::vector<LatticeVector> roots;
    LatticeVector v(static_cast<std::size_t>(lat.rank()), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == v.size()) {
            long long s = lat.square(v);
            if (s == 2 || s == -2) roots.push_back(v);
            return;
        }
        for (long long c = -bound; c <= bound; ++c) {
            v[i] = c;
            rec(i + 1);
        }
        v[i] = 0;
    };
    rec(0);
    return roots;
}

}  // namespace

OrbitPartition orbit_partition(const EvenLattice& lat, long long n, long long root_bound,
                               std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("orbit_partition: n must be positive");
    OrbitPartition result;
    if (n == 1) return result;  // trivial quotient, no primitive classes

    std::uint64_t states = 1;
    for (long long i = 0; i < lat.rank(); ++i) {
        states *= static_cast<std::uint64_t>(n);
        if (states > budget) throw std::invalid_argument("orbit_partition: n^rank exceeds budget");
    }

    auto roots = bounded_roots(lat, root_bound);
    if (roots.empty()) throw std::invalid_argument("orbit_partition: no roots within bound");
    result.roots_used = static_cast<long long>(roots.size());

    auto rank = static_cast<std::size_t>(lat.rank());
    auto encode = [&](const std::vector<long long>& c) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < rank; ++i)
            code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c[i]);
        return code;
    };
    auto decode = [&](std::uint64_t code) {
        std::vector<long long> c(rank);
        for (std::size_t i = rank; i-- > 0;) {
            c[i] = static_cast<long long>(code % static_cast<std::uint64_t>(n));
            code /= static_cast<std::uint64_t>(n);
        }
        return c;
    };

    std::set<std::uint64_t> visited;
    for (std::uint64_t start = 0; start < states; ++start) {
        if (visited.count(start)) continue;
        ModClass seed(n, decode(start));
        if (!is_primitive(seed)) continue;

        Orbit orbit;
        orbit.pontrjagin = pontrjagin(lat, seed);
        orbit.divisibility = divisibility(seed);
        std::queue<std::uint64_t> frontier;
        frontier.push(start);
        visited.insert(start);
        while (!frontier.empty()) {
            std::uint64_t code = frontier.front();
            frontier.pop();
            ModClass cls(n, decode(code));
            orbit.members.push_back(cls);
            for (const auto& root : roots) {
                LatticeVector image = reflect(lat, root, cls.coords);
                ModClass next(n, std::move(image));
                std::uint64_t next_code = encode(next.coords);
                if (visited.insert(next_code).second) frontier.push(next_code);
            }
        }
        result.orbits.push_back(std::move(orbit));
    }
    return result;
}

long long component_count(long long d, long long n) {
    if (d < 2) throw std::invalid_argument("component_count: need d >= 2");
    if (n < 1) throw std::invalid_argument("component_count: need n >= 1");
    return n;  // one component per even residue mod 2n
}

long long asd_congruence(const FibrationInvariants& f) {
    long long p = mod_nonneg(f.d_squared + f.n * f.n * f.d, 2 * f.n);
    if (p % 2 != 0) throw std::invalid_argument("asd_congruence: inconsistent invariants, odd square");
    return p;
}

}  // namespace g1fib
