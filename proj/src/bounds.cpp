#include "nests/bounds.hpp"

#include <stdexcept>

#include "nests/errors.hpp"
#include "nests/relation.hpp"
#include "nests/topology.hpp"

namespace nests {

CoverWitness down_covers_X(const Nest& n, Subset y, bool constructive) {
    const Subset full = Subset::full(n.universe());
    std::vector<Subset> cover;
    for (Subset l : n) {
        if (!y.subset_of(l)) cover.push_back(l);
    }
    Subset reached;
    for (Subset l : cover) reached = reached | l;

    const Subset direct = down_set_strict(y, generated_order(n));
    if (direct != reached) throw std::logic_error("down_covers_X: cover form disagrees with the direct down-set");

    CoverWitness w;
    w.holds = reached == full;
    if (w.holds && constructive) w.witness_family = SetFamily(n.universe(), std::move(cover));
    if (!w.holds) w.violating_member = full - reached;
    return w;
}

CoverWitness up_covers_X(const Nest& n, Subset y, bool constructive) {
    const Subset full = Subset::full(n.universe());
    std::vector<Subset> meeting;
    Subset common = full;
    for (Subset l : n) {
        if (l.intersects(y)) {
            meeting.push_back(l);
            common = common & l;
        }
    }
    const Subset reached = full - common;

    const Subset direct = up_set_strict(y, generated_order(n));
    if (direct != reached) throw std::logic_error("up_covers_X: intersection form disagrees with the direct up-set");

    CoverWitness w;
    w.holds = common.empty();
    if (w.holds && constructive) w.witness_family = SetFamily(n.universe(), std::move(meeting));
    if (!w.holds) w.violating_member = common;
    return w;
}

namespace {

bool bound_exists(const Relation& r, Subset y, bool above) {
    for (int x = 0; x < r.size(); ++x) {
        const Subset related = above ? r.predecessors(x) : r.successors(x);
        if (y.subset_of(related)) return true;
    }
    return false;
}

void require_searchable(const Nest& n) {
    if (n.size() > kMaxCoverSearchMembers)
        throw BoundExceeded("cover search: nest has more than " + std::to_string(kMaxCoverSearchMembers) +
                            " members");
}

// Calls visit(members) for every subfamily of n, given as a member mask.
template <class Visit>
bool any_subfamily(const Nest& n, Visit visit) {
    require_searchable(n);
    const std::uint64_t total = std::uint64_t{1} << n.size();
    for (std::uint64_t pick = 0; pick < total; ++pick) {
        std::vector<Subset> members;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if ((pick >> i) & 1U) members.push_back(n.sets()[i]);
        }
        if (visit(members)) return true;
    }
    return false;
}

}  // namespace

bool has_upper_bound_outside(const Nest& n, Subset y) { return bound_exists(generated_order(n), y, true); }

bool has_lower_bound_outside(const Nest& n, Subset y) { return bound_exists(generated_order(n), y, false); }

bool has_upper_bound(const Nest& n, Subset y) { return bound_exists(reflexive_closure(generated_order(n)), y, true); }

bool has_lower_bound(const Nest& n, Subset y) { return bound_exists(reflexive_closure(generated_order(n)), y, false); }

bool exists_cover_without_single_subcover(const Nest& n, Subset y) {
    const Subset full = Subset::full(n.universe());
    return any_subfamily(n, [&](const std::vector<Subset>& members) {
        Subset reached;
        for (Subset l : members) {
            if (y.subset_of(l)) return false;
            reached = reached | l;
        }
        return reached == full;
    });
}

bool exists_null_subnest_meeting(const Nest& n, Subset y) {
    const Subset full = Subset::full(n.universe());
    return any_subfamily(n, [&](const std::vector<Subset>& members) {
        Subset common = full;
        for (Subset l : members) {
            if (!l.intersects(y)) return false;
            common = common & l;
        }
        return common.empty();
    });
}

bool finite_subcover_clause(const Nest& n, Subset y) {
    const Subset full = Subset::full(n.universe());
    // A counterexample is a cover of X none of whose finite subfamilies covers y.
    // Every cover of a finite universe is itself finite, so the cover is its own subfamily.
    return !any_subfamily(n, [&](const std::vector<Subset>& members) {
        Subset reached;
        for (Subset l : members) reached = reached | l;
        if (reached != full) return false;
        Subset inside_y;
        for (Subset l : members) inside_y = inside_y | (l & y);
        return inside_y != y;
    });
}

bool single_subcover_clause(const Nest& n, Subset y) { return !exists_cover_without_single_subcover(n, y); }

}  // namespace nests
