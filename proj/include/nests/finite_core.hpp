#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nests {

/// Largest ground set representable by a membership mask.
inline constexpr int kMaxUniverse = 64;

/// A finite ground set {0, ..., size-1} with optional display labels.
class Universe {
public:
    explicit Universe(int size);
    Universe(int size, std::vector<std::string> labels);

    int size() const { return size_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Display name of element `i`: its label, or "x<i+1>" when unlabeled.
    std::string label(int i) const;

    /// Mask with every element of the universe set.
    std::uint64_t full_mask() const {
        return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
    }

    /// Universes are compatible when they have the same number of elements.
    bool compatible(const Universe& other) const { return size_ == other.size_; }

    bool operator==(const Universe&) const = default;

private:
    int size_;
    std::vector<std::string> labels_;
};

/// Throws UniverseMismatch unless the two universes are compatible.
void require_same_universe(const Universe& a, const Universe& b, const char* op);

/// Value-semantic subset of a universe, stored as a membership mask.
struct Subset {
    std::uint64_t bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t mask) : bits(mask) {}

    static Subset of(std::initializer_list<int> elements);
    static Subset full(const Universe& u) { return Subset(u.full_mask()); }

    constexpr bool contains(int i) const { return (bits >> i) & 1U; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
    constexpr bool proper_subset_of(Subset other) const {
        return subset_of(other) && bits != other.bits;
    }
    constexpr bool intersects(Subset other) const { return (bits & other.bits) != 0; }

    Subset complement(const Universe& u) const { return Subset(u.full_mask() & ~bits); }

    /// Element indices in increasing order.
    std::vector<int> elements() const;

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }
    friend constexpr bool operator==(Subset a, Subset b) = default;
};

/// Canonical order: by cardinality, then by mask.
constexpr bool canonical_less(Subset a, Subset b) {
    const int ca = a.count();
    const int cb = b.count();
    return ca != cb ? ca < cb : a.bits < b.bits;
}

/// Every subset of `u` in canonical order. Requires u.size() <= 20.
std::vector<Subset> all_subsets(const Universe& u);

/// A duplicate-free, canonically sorted family of subsets of one universe.
class SetFamily {
public:
    explicit SetFamily(Universe u);

    /// Validates member range and rejects duplicates (InvalidInstance).
    SetFamily(Universe u, std::vector<Subset> sets);

    /// Builds a family, silently merging duplicate members.
    static SetFamily deduplicated(Universe u, std::vector<Subset> sets);

    const Universe& universe() const { return universe_; }
    const std::vector<Subset>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    bool contains(Subset s) const;

    /// Union of members (empty union is the empty set).
    Subset union_all() const;
    /// Intersection of members (empty intersection is the whole universe).
    Subset intersection_all() const;

    /// Family obtained by adding (or merging) the given members.
    SetFamily with(std::initializer_list<Subset> extra) const;

    bool operator==(const SetFamily& other) const {
        return universe_.compatible(other.universe_) && sets_ == other.sets_;
    }

private:
    Universe universe_;
    std::vector<Subset> sets_;
};

/// True iff every pair of members is comparable under inclusion.
bool is_nest(const SetFamily& f);

/// A SetFamily that is totally ordered by inclusion.
class Nest {
public:
    /// Throws InvalidInstance when `f` is not a nest.
    explicit Nest(SetFamily f);
    Nest(Universe u, std::vector<Subset> sets) : Nest(SetFamily(std::move(u), std::move(sets))) {}

    const SetFamily& family() const { return family_; }
    const Universe& universe() const { return family_.universe(); }
    const std::vector<Subset>& sets() const { return family_.sets(); }
    std::size_t size() const { return family_.size(); }
    auto begin() const { return family_.begin(); }
    auto end() const { return family_.end(); }

    operator const SetFamily&() const { return family_; }  // NOLINT(google-explicit-constructor)

    bool operator==(const Nest& other) const { return family_ == other.family_; }

private:
    SetFamily family_;
};

/// {X - L : L in f}.
SetFamily family_complement(const SetFamily& f);
Nest family_complement(const Nest& n);

inline constexpr int kDefaultEnumerationBound = 4;
inline constexpr int kMaxEnumerationBound = 6;

struct NestEnumeration {
    bool include_trivial = true;          ///< allow the empty set and X as members
    int bound = kDefaultEnumerationBound;  ///< refuse universes larger than this
    std::optional<std::size_t> max_members;
};

/// Every inclusion chain of distinct subsets of `u`, each exactly once, in a
/// deterministic depth-first order (the empty chain first).
std::vector<Nest> enumerate_nests(const Universe& u, const NestEnumeration& opts = {});

/// Streaming form of enumerate_nests; stops early when `visit` returns false.
void for_each_nest(const Universe& u, const NestEnumeration& opts,
                   const std::function<bool(const Nest&)>& visit);

/// Number of arbitrary families on `u` (2^(2^n)); requires u.size() <= 4.
std::uint64_t family_count(const Universe& u);

/// The family whose members are selected by the bits of `index` over all_subsets(u).
SetFamily family_at(const Universe& u, std::uint64_t index);

}  // namespace nests

template <>
struct std::hash<nests::Subset> {
    std::size_t operator()(nests::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits); }
};
