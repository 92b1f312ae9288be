#pragma once

#include <optional>

#include "nests/finite_core.hpp"

namespace nests {

/// Largest nest whose subfamilies are enumerated by the cover searches.
inline constexpr std::size_t kMaxCoverSearchMembers = 20;

struct CoverWitness {
    bool holds = false;
    /// The certifying cover (or subnest); present only when holds and a witness was requested.
    std::optional<SetFamily> witness_family;
    /// Points left unreached when the characterization fails.
    std::optional<Subset> violating_member;
};

/// X = strict down-set of y. The witness is {L : y not inside L}, a cover of X
/// with no single member containing y. The cover form is cross-checked
/// against the direct down-set.
CoverWitness down_covers_X(const Nest& n, Subset y, bool constructive = true);

/// X = strict up-set of y. The witness is the subnest {L : L meets y}, whose
/// intersection is empty exactly when the characterization holds.
CoverWitness up_covers_X(const Nest& n, Subset y, bool constructive = true);

/// Some x has y < x for every y in `y` (strict nest order).
bool has_upper_bound_outside(const Nest& n, Subset y);
/// Some x has x < y for every y in `y` (strict nest order).
bool has_lower_bound_outside(const Nest& n, Subset y);

/// Some x has y <= x for every y in `y` (reflexive nest order).
bool has_upper_bound(const Nest& n, Subset y);
/// Some x has x <= y for every y in `y` (reflexive nest order).
bool has_lower_bound(const Nest& n, Subset y);

/// Some subfamily of n covers X and no single member of it contains y.
/// Enumerates every subfamily; throws BoundExceeded above kMaxCoverSearchMembers members.
bool exists_cover_without_single_subcover(const Nest& n, Subset y);

/// Some subnest of n has empty intersection and no member disjoint from y.
bool exists_null_subnest_meeting(const Nest& n, Subset y);

/// Every cover of X by members of n has a finite subfamily covering y.
/// Always true on a finite universe; evaluated literally.
bool finite_subcover_clause(const Nest& n, Subset y);

/// Every cover of X by members of n has a single member containing y.
bool single_subcover_clause(const Nest& n, Subset y);

}  // namespace nests
