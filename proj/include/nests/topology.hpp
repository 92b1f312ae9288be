#pragma once

#include <vector>

#include "nests/finite_core.hpp"
#include "nests/relation.hpp"

namespace nests {

/// Largest universe whose open family is materialized by Topology::opens().
inline constexpr int kMaxExplicitOpens = 20;

/// A topology on a finite universe.
///
/// A finite topology is determined by the minimal open neighbourhood N(x) of
/// each point: U is open iff N(x) is contained in U for every x in U. That is
/// the stored form; opens() lists the open family explicitly when the universe
/// is small enough.
class Topology {
public:
    /// Smallest topology containing every member of `subbase`.
    static Topology from_subbase(const SetFamily& subbase);

    /// Validates that `opens` contains the empty set and X and is closed
    /// under pairwise union and intersection (InvalidInstance otherwise).
    static Topology from_opens(const SetFamily& opens);

    static Topology discrete(const Universe& u);
    static Topology indiscrete(const Universe& u);

    const Universe& universe() const { return universe_; }
    const std::vector<Subset>& neighborhoods() const { return neighborhoods_; }

    bool is_open(Subset s) const;

    /// Canonically ordered open family. Throws BoundExceeded above kMaxExplicitOpens points.
    SetFamily opens() const;
    std::size_t open_count() const;

    /// Every open set of *this is open in `finer`.
    bool coarser_than(const Topology& finer) const;

    bool operator==(const Topology& other) const {
        return universe_.compatible(other.universe_) && neighborhoods_ == other.neighborhoods_;
    }

private:
    Topology(Universe u, std::vector<Subset> neighborhoods)
        : universe_(std::move(u)), neighborhoods_(std::move(neighborhoods)) {}

    Universe universe_;
    std::vector<Subset> neighborhoods_;

    friend Topology join(const Topology&, const Topology&);
    friend Topology product_topology(const Topology&, const Topology&);
};

inline Topology topology_from_subbase(const SetFamily& f) { return Topology::from_subbase(f); }

// Point-level cones use the reflexive relation handed in by the caller.

/// {y : x r y}.
Subset up_point(int x, const Relation& reflexive);
/// {y : y r x}.
Subset down_point(int x, const Relation& reflexive);

// Set-level cones use the strict relation.

/// {x : exists y in a with y < x}.
Subset up_set_strict(Subset a, const Relation& strict);
/// {x : exists y in a with x < y}.
Subset down_set_strict(Subset a, const Relation& strict);

/// Generated by {X - up(x) : x in X}.
Topology lower_topology(const Relation& reflexive);
/// Generated by {X - down(x) : x in X}.
Topology upper_topology(const Relation& reflexive);

/// Coarsest topology finer than both.
Topology join(const Topology& a, const Topology& b);

/// join(upper_topology, lower_topology).
Topology interval_topology(const Relation& reflexive);

/// Generated by the strict open rays {x : x < a} and {x : a < x}.
Topology open_ray_topology(const Relation& reflexive);

/// All Y with Y = up_set_strict(Y).
SetFamily alexandroff_family(const Relation& strict);

/// X - a is open in t.
bool is_closed(const Topology& t, Subset a);

/// X - a belongs to alexandroff_family(strict).
bool is_alexandroff_closed(const Relation& strict, Subset a);

/// Universe of ordered pairs (a, b), indexed a * |B| + b.
Universe product_universe(const Universe& a, const Universe& b);

/// Product topology with subbase {pi1^-1(U) n pi2^-1(V)}. Needs |A|*|B| <= 64.
Topology product_topology(const Topology& a, const Topology& b);

/// The preimage of every open set of `codomain` is open in `domain`.
/// `map[x]` is the image of domain point x; throws NonTotalMap when the
/// map does not cover the domain or leaves the codomain.
bool is_continuous(const std::vector<int>& map, const Topology& domain, const Topology& codomain);

}  // namespace nests
