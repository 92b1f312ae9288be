#include "nests/finite_core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nests/errors.hpp"

namespace nests {

Universe::Universe(int size) : size_(size) {
    if (size < 1 || size > kMaxUniverse) {
        std::ostringstream msg;
        msg << "universe size " << size << " outside [1, " << kMaxUniverse << "]";
        throw InvalidInstance(msg.str());
    }
}

Universe::Universe(int size, std::vector<std::string> labels) : Universe(size) {
    if (labels.empty()) return;
    if (static_cast<int>(labels.size()) != size)
        throw InvalidInstance("label count does not match universe size");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw InvalidInstance("universe labels must be distinct");
    labels_ = std::move(labels);
}

std::string Universe::label(int i) const {
    if (!labels_.empty()) return labels_.at(static_cast<std::size_t>(i));
    return "x" + std::to_string(i + 1);
}

void require_same_universe(const Universe& a, const Universe& b, const char* op) {
    if (!a.compatible(b)) {
        std::ostringstream msg;
        msg << op << ": universe mismatch (" << a.size() << " vs " << b.size() << " elements)";
        throw UniverseMismatch(msg.str());
    }
}

Subset Subset::of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) {
        if (e < 0 || e >= kMaxUniverse) throw InvalidInstance("element index out of range");
        s.bits |= std::uint64_t{1} << e;
    }
    return s;
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<Subset> all_subsets(const Universe& u) {
    if (u.size() > 20) throw BoundExceeded("all_subsets: universe larger than 20 elements");
    const std::uint64_t total = std::uint64_t{1} << u.size();
    std::vector<Subset> out;
    out.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) out.emplace_back(m);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

SetFamily::SetFamily(Universe u) : universe_(std::move(u)) {}

SetFamily::SetFamily(Universe u, std::vector<Subset> sets)
    : universe_(std::move(u)), sets_(std::move(sets)) {
    const std::uint64_t full = universe_.full_mask();
    for (Subset s : sets_) {
        if ((s.bits & ~full) != 0) throw InvalidInstance("family member has element outside the universe");
    }
    std::sort(sets_.begin(), sets_.end(), canonical_less);
    if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
        throw InvalidInstance("family contains a duplicate member");
}

SetFamily SetFamily::deduplicated(Universe u, std::vector<Subset> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return SetFamily(std::move(u), std::move(sets));
}

bool SetFamily::contains(Subset s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
}

Subset SetFamily::union_all() const {
    Subset acc;
    for (Subset s : sets_) acc = acc | s;
    return acc;
}

Subset SetFamily::intersection_all() const {
    Subset acc = Subset::full(universe_);
    for (Subset s : sets_) acc = acc & s;
    return acc;
}

SetFamily SetFamily::with(std::initializer_list<Subset> extra) const {
    std::vector<Subset> sets = sets_;
    sets.insert(sets.end(), extra.begin(), extra.end());
    return deduplicated(universe_, std::move(sets));
}

bool is_nest(const SetFamily& f) {
    // Canonical order sorts by cardinality, so a chain must be increasing.
    const auto& s = f.sets();
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!s[i - 1].subset_of(s[i])) return false;
    }
    return true;
}

Nest::Nest(SetFamily f) : family_(std::move(f)) {
    if (!is_nest(family_)) throw InvalidInstance("family is not a nest: two members are inclusion-incomparable");
}

SetFamily family_complement(const SetFamily& f) {
    std::vector<Subset> out;
    out.reserve(f.size());
    for (Subset s : f) out.push_back(s.complement(f.universe()));
    return SetFamily(f.universe(), std::move(out));
}

Nest family_complement(const Nest& n) { return Nest(family_complement(n.family())); }

namespace {

void check_bound(const Universe& u, int bound) {
    const int limit = std::min(bound, kMaxEnumerationBound);
    if (u.size() > limit) {
        std::ostringstream msg;
        msg << "enumerate_nests: universe size " << u.size() << " exceeds the enumeration limit of " << limit;
        throw BoundExceeded(msg.str());
    }
}

}  // namespace

void for_each_nest(const Universe& u, const NestEnumeration& opts,
                   const std::function<bool(const Nest&)>& visit) {
    check_bound(u, opts.bound);
    std::vector<Subset> candidates = all_subsets(u);
    if (!opts.include_trivial) {
        const Subset full = Subset::full(u);
        std::erase_if(candidates, [&](Subset s) { return s.empty() || s == full; });
    }
    const std::size_t cap = opts.max_members.value_or(candidates.size());

    std::vector<Subset> chain;
    bool stop = false;
    // Members are appended in strictly increasing inclusion order, so each
    // chain is produced exactly once.
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (stop) return;
        if (!visit(Nest(SetFamily(u, chain)))) {
            stop = true;
            return;
        }
        if (chain.size() >= cap) return;
        for (std::size_t i = from; i < candidates.size() && !stop; ++i) {
            if (!chain.empty() && !chain.back().proper_subset_of(candidates[i])) continue;
            chain.push_back(candidates[i]);
            extend(i + 1);
            chain.pop_back();
        }
    };
    extend(0);
}

std::vector<Nest> enumerate_nests(const Universe& u, const NestEnumeration& opts) {
    std::vector<Nest> out;
    for_each_nest(u, opts, [&](const Nest& n) {
        out.push_back(n);
        return true;
    });
    return out;
}

std::uint64_t family_count(const Universe& u) {
    if (u.size() > 4) throw BoundExceeded("family enumeration is limited to universes of at most 4 elements");
    return std::uint64_t{1} << (std::uint64_t{1} << u.size());
}

SetFamily family_at(const Universe& u, std::uint64_t index) {
    if (index >= family_count(u)) throw BoundExceeded("family index out of range");
    static thread_local std::vector<std::vector<Subset>> cache(5);
    auto& subsets = cache[static_cast<std::size_t>(u.size())];
    if (subsets.empty()) subsets = all_subsets(u);
    std::vector<Subset> members;
    for (std::uint64_t m = index; m != 0; m &= m - 1) members.push_back(subsets[std::countr_zero(m)]);
    return SetFamily(u, std::move(members));
}

}  // namespace nests
