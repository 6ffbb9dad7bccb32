#include "g1fib/atiyah.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace g1fib {

AtiyahType::AtiyahType(long long n0_, long long r0_, std::vector<std::vector<long long>> blocks_)
    : n0(n0_), r0(r0_), blocks(std::move(blocks_)) {
    if (r0 < 1) throw std::invalid_argument("AtiyahType: r0 must be positive");
    if (e_invariant(n0, r0) != 1) throw std::invalid_argument("AtiyahType: gcd(|n0|, r0) must be 1");
    if (blocks.empty()) throw std::invalid_argument("AtiyahType: need at least one block");
    for (auto& part : blocks) {
        if (part.empty()) throw std::invalid_argument("AtiyahType: empty partition");
        for (long long d : part)
            if (d < 1) throw std::invalid_argument("AtiyahType: partition parts must be positive");
    }
}

long long AtiyahType::e() const {
    long long total = 0;
    for (const auto& part : blocks) total += std::accumulate(part.begin(), part.end(), 0LL);
    return total;
}

long long e_invariant(long long n, long long r) {
    if (r < 1) throw std::invalid_argument("e_invariant: r must be positive");
    return std::gcd(n < 0 ? -n : n, r);
}

long long end_dimension(const AtiyahType& t) {
    // Hom(V_{d1;l1}, V_{d2;l2}) vanishes across blocks and has dimension
    // min(d1, d2) within a block.
    long long dim = 0;
    for (const auto& part : t.blocks)
        for (long long di : part)
            for (long long dj : part) dim += std::min(di, dj);
    return dim;
}

bool is_commutative(const AtiyahType& t) {
    for (const auto& part : t.blocks)
        if (part.size() != 1) return false;
    return true;
}

namespace {

// All partitions of m with parts <= maxpart, parts nonincreasing.
void partitions_of(long long m, long long maxpart, std::vector<long long>& cur,
                   std::vector<std::vector<long long>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = std::min(m, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(m - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

RegLemmaReport verify_reg_lemma(long long e, long long cap) {
    if (e < 1) throw std::invalid_argument("verify_reg_lemma: e must be positive");
    if (e > cap) throw std::invalid_argument("verify_reg_lemma: e exceeds the exhaustion cap");

    // Catalogue of all nonempty partitions of 1..e, used as the block alphabet.
    std::vector<std::vector<long long>> alphabet;
    for (long long m = 1; m <= e; ++m) {
        std::vector<long long> cur;
        partitions_of(m, m, cur, alphabet);
    }

    RegLemmaReport report;
    report.e = e;

    // Multisets of blocks: choose alphabet entries with nonincreasing index.
    std::vector<std::vector<long long>> chosen;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t maxidx, long long remaining) {
        if (remaining == 0) {
            AtiyahType t(1, 1, chosen);
            ++report.types_checked;
            long long dim = end_dimension(t);
            bool comm = is_commutative(t);
            if (dim == e) ++report.equality_cases;
            bool ok = dim >= e && ((dim == e) == comm);
            if (!ok) {
                report.all_pass = false;
                report.counterexamples.push_back(t);
            }
            return;
        }
        for (std::size_t i = 0; i < std::min(maxidx, alphabet.size()); ++i) {
            long long sum = std::accumulate(alphabet[i].begin(), alphabet[i].end(), 0LL);
            if (sum > remaining) continue;
            chosen.push_back(alphabet[i]);
            rec(i + 1, remaining - sum);
            chosen.pop_back();
        }
    };
    rec(alphabet.size(), e);
    return report;
}

}  // namespace g1fib
