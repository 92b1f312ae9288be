#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nests/finite_core.hpp"

namespace nests {

/// Binary relation on a universe, stored as one successor mask per element:
/// (x, y) is in the relation iff bit y of row x is set.
class Relation {
public:
    explicit Relation(Universe u);

    static Relation identity(const Universe& u);
    static Relation from_pairs(const Universe& u, const std::vector<std::pair<int, int>>& pairs);

    const Universe& universe() const { return universe_; }
    int size() const { return universe_.size(); }

    bool holds(int x, int y) const { return (rows_[static_cast<std::size_t>(x)] >> y) & 1U; }
    void set(int x, int y) { rows_[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y; }

    /// {y : x R y}.
    Subset successors(int x) const { return Subset(rows_[static_cast<std::size_t>(x)]); }
    /// {y : y R x}.
    Subset predecessors(int x) const;

    /// Pairs in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;
    std::size_t pair_count() const;

    bool subset_of(const Relation& other) const;

    Relation operator|(const Relation& other) const;

    bool operator==(const Relation& other) const {
        return universe_.compatible(other.universe_) && rows_ == other.rows_;
    }

private:
    Universe universe_;
    std::vector<std::uint64_t> rows_;
};

/// x < y iff some member contains x but not y (definition form).
Relation generated_order(const SetFamily& f);

/// Union of the rectangles L x (X - L) over members L.
Relation generated_order_product_form(const SetFamily& f);

/// A o B = {(x, y) : exists z with (x, z) in B and (z, y) in A}.
Relation compose(const Relation& a, const Relation& b);

/// The rectangle S x (X - S) as a relation.
Relation rectangle(const Universe& u, Subset s);

/// For every ordered pair S, T of members some member R has
/// [S x (X-S)] o [T x (X-T)] contained in R x (X-R).
bool composition_condition(const SetFamily& f);

enum class Transitivity {
    standard,          ///< all triples x, y, z
    distinct_triples,  ///< only pairwise-distinct x, y, z
};

bool is_transitive(const Relation& r, Transitivity mode = Transitivity::standard);

/// Every pair of distinct points is split by some member one way.
bool t0_separates(const SetFamily& f);
/// Every pair of distinct points is split by members both ways.
bool t1_separates(const SetFamily& f);

/// X x X - diagonal is covered by the symmetric rectangles of the members.
bool t0_product_characterization(const SetFamily& f);

struct StarUnion {
    SetFamily family;
    /// Both inputs contain the empty set, which the order-union identity needs.
    bool precondition_met;
};

/// {S1 u S2 : S1 in f1, S2 in f2}, duplicates merged.
StarUnion star_union(const SetFamily& f1, const SetFamily& f2);

/// The families generate the same order.
bool orders_equivalent(const SetFamily& f1, const SetFamily& f2);

Relation reflexive_closure(const Relation& r);
Relation transpose(const Relation& r);

bool is_reflexive(const Relation& r);
bool is_irreflexive(const Relation& r);
bool is_antisymmetric(const Relation& r);
bool is_asymmetric(const Relation& r);
bool is_total(const Relation& r);

/// The reflexive closure of `r` is a total order.
bool is_linear_order(const Relation& r);

/// Nest of strict lower rays {{x : x < a} : a in X} of a linear order given
/// by a ranking (rank[x] = position of x).
Nest lower_ray_nest(const Universe& u, const std::vector<int>& rank);

}  // namespace nests
