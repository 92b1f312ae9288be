#pragma once

// Brute-force reference computations, written straight from the definitions
// and independent of the library's algorithms. Small universes only.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "nests/finite_core.hpp"
#include "nests/relation.hpp"

namespace oracle {

using nests::SetFamily;
using nests::Subset;

inline bool in(std::uint64_t set, int x) { return (set >> x) & 1U; }

/// x < y iff some member holds x and misses y, as a boolean matrix.
inline std::vector<std::vector<bool>> generated(const SetFamily& f) {
    const int n = f.universe().size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (Subset s : f) r[x][y] = r[x][y] || (in(s.bits, x) && !in(s.bits, y));
    return r;
}

inline std::vector<std::vector<bool>> reflexive(std::vector<std::vector<bool>> r) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i][i] = true;
    return r;
}

inline bool matches(const nests::Relation& rel, const std::vector<std::vector<bool>>& m) {
    for (int x = 0; x < rel.size(); ++x)
        for (int y = 0; y < rel.size(); ++y)
            if (rel.holds(x, y) != m[x][y]) return false;
    return true;
}

inline bool chain(const std::vector<std::uint64_t>& sets) {
    for (std::uint64_t a : sets)
        for (std::uint64_t b : sets)
            if ((a & ~b) && (b & ~a)) return false;
    return true;
}

/// Opens generated by a subbase: close under pairwise intersection (with X),
/// then take every union of basic sets (with the empty set).
inline std::set<std::uint64_t> opens_from_subbase(int n, const std::vector<std::uint64_t>& subbase) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::set<std::uint64_t> base(subbase.begin(), subbase.end());
    base.insert(full);
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<std::uint64_t> cur(base.begin(), base.end());
        for (std::uint64_t a : cur)
            for (std::uint64_t b : cur) grew |= base.insert(a & b).second;
    }
    std::set<std::uint64_t> opens = {0};
    for (std::uint64_t b : base) {
        const std::vector<std::uint64_t> cur(opens.begin(), opens.end());
        for (std::uint64_t o : cur) opens.insert(o | b);
    }
    return opens;
}

inline std::set<std::uint64_t> opens_of(const nests::SetFamily& fam) {
    std::set<std::uint64_t> out;
    for (Subset s : fam) out.insert(s.bits);
    return out;
}

/// Least upper bound of s under a reflexive matrix; -1 when it does not exist.
inline int sup(std::uint64_t s, const std::vector<std::vector<bool>>& le) {
    const int n = static_cast<int>(le.size());
    std::vector<int> ub;
    for (int x = 0; x < n; ++x) {
        bool bound = true;
        for (int y = 0; y < n; ++y)
            if (in(s, y)) bound = bound && le[y][x];
        if (bound) ub.push_back(x);
    }
    int found = -1;
    int count = 0;
    for (int u : ub) {
        bool least = true;
        for (int v : ub) least = least && le[u][v];
        if (least) {
            found = u;
            ++count;
        }
    }
    return count == 1 ? found : -1;
}

struct Conditions {
    bool c1, c2, c3;
};

inline Conditions conditions(const SetFamily& f) {
    const auto le = reflexive(generated(f));
    const int n = f.universe().size();
    bool c1 = true;
    bool c2 = true;
    std::uint64_t sups = 0;
    for (Subset s : f) {
        const int m = sup(s.bits, le);
        c1 = c1 && m >= 0;
        c2 = c2 && m >= 0 && !in(s.bits, m);
        if (m >= 0 && !in(s.bits, m)) sups |= std::uint64_t{1} << m;
    }
    const bool covers = sups == (std::uint64_t{1} << n) - 1;
    return {c1, c2, c2 && covers};
}

/// Members equal to the meet of their strict supersets are the join of their strict subsets.
inline bool interlocking(const SetFamily& f) {
    const std::uint64_t full = f.universe().full_mask();
    for (Subset m : f) {
        std::uint64_t meet = full;
        std::uint64_t join = 0;
        for (Subset o : f) {
            if (o.bits != m.bits && (m.bits & ~o.bits) == 0) meet &= o.bits;
            if (o.bits != m.bits && (o.bits & ~m.bits) == 0) join |= o.bits;
        }
        if (meet == m.bits && join != m.bits) return false;
    }
    return true;
}

/// Every inclusion chain on n points, found by filtering all families.
inline std::vector<std::vector<std::uint64_t>> all_chains(int n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
        std::vector<std::uint64_t> sets;
        for (std::uint64_t s = 0; s < subsets; ++s)
            if ((pick >> s) & 1U) sets.push_back(s);
        if (chain(sets)) out.push_back(sets);
    }
    return out;
}

/// Hand-rolled seeded generator for property tests.
struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    std::mt19937_64 rng;

    int below(int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

    SetFamily family(int n, int max_members) {
        std::vector<Subset> sets;
        const int k = below(max_members + 1);
        for (int i = 0; i < k; ++i) sets.emplace_back(rng() & ((std::uint64_t{1} << n) - 1));
        return SetFamily::deduplicated(nests::Universe(n), sets);
    }

    /// Random chain: nested prefixes of a shuffled point list.
    nests::Nest nest(int n) {
        std::vector<int> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = i;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<Subset> sets;
        std::uint64_t acc = 0;
        if (below(2)) sets.emplace_back(0);
        for (int p : pts) {
            acc |= std::uint64_t{1} << p;
            if (below(2)) sets.emplace_back(acc);
        }
        return nests::Nest(SetFamily::deduplicated(nests::Universe(n), sets));
    }
};

}  // namespace oracle
