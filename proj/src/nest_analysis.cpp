#include "nests/nest_analysis.hpp"

#include <stdexcept>

namespace nests {

std::string_view to_string(SupReason r) {
    switch (r) {
        case SupReason::ok: return "ok";
        case SupReason::no_upper_bound: return "no_upper_bound";
        case SupReason::no_least_upper_bound: return "no_least_upper_bound";
    }
    return "unknown";
}

SupResult sup_wrt(Subset s, const Relation& reflexive) {
    const int n = reflexive.size();
    Subset upper;
    for (int x = 0; x < n; ++x) {
        bool bound = true;
        for (int y : s.elements()) {
            if (!reflexive.holds(y, x)) {
                bound = false;
                break;
            }
        }
        if (bound) upper.bits |= std::uint64_t{1} << x;
    }
    if (upper.empty()) return {false, std::nullopt, SupReason::no_upper_bound};

    // Without antisymmetry several bounds can sit below all the others; then
    // no single least one exists.
    std::optional<int> least;
    int least_count = 0;
    for (int m : upper.elements()) {
        if (upper.subset_of(reflexive.successors(m))) {
            least = m;
            ++least_count;
        }
    }
    if (least_count != 1) return {false, std::nullopt, SupReason::no_least_upper_bound};
    return {true, least, SupReason::ok};
}

SupResult inf_wrt(Subset s, const Relation& reflexive) { return sup_wrt(s, transpose(reflexive)); }

Relation nest_order(const SetFamily& n) { return reflexive_closure(generated_order(n)); }

namespace {

Conditions conditions_from(const Nest& n, const std::vector<SupResult>& sups) {
    Conditions c;
    c.c1 = true;
    c.c2 = true;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const SupResult& s = sups[i];
        if (!s.exists) {
            c.c1 = false;
            c.c2 = false;
        } else if (n.sets()[i].contains(*s.element)) {
            c.c2 = false;
        }
    }
    if (!c.c2) return c;
    Subset reached;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (sups[i].exists && !n.sets()[i].contains(*sups[i].element))
            reached.bits |= std::uint64_t{1} << *sups[i].element;
    }
    c.c3 = reached == Subset::full(n.universe());
    return c;
}

}  // namespace

Conditions check_conditions(const Nest& n) {
    const Relation le = nest_order(n);
    std::vector<SupResult> sups;
    sups.reserve(n.size());
    for (Subset l : n) sups.push_back(sup_wrt(l, le));
    return conditions_from(n, sups);
}

DualNestPair make_dual_pair(const Nest& l, const Nest& r) {
    require_same_universe(l.universe(), r.universe(), "make_dual_pair");
    const Relation lo = generated_order(l);
    const Relation ro = generated_order(r);
    for (int x = 0; x < l.universe().size(); ++x) {
        for (int y = 0; y < l.universe().size(); ++y) {
            if (lo.holds(x, y) != ro.holds(y, x)) {
                throw DualityViolation("nests are not dual: x " + std::string(lo.holds(x, y) ? "<" : "not <") +
                                           " y on the left but the right order disagrees",
                                       x, y);
            }
        }
    }
    return DualNestPair(l, r);
}

Conditions check_conditions_star(const DualNestPair& pair) {
    const Nest& right = pair.right();
    const Relation right_le = nest_order(right);
    const Relation left_le = nest_order(pair.left());
    std::vector<SupResult> sups;
    sups.reserve(right.size());
    for (Subset r : right) {
        SupResult own = sup_wrt(r, right_le);
        const SupResult via_left = inf_wrt(r, left_le);
        if (own.exists != via_left.exists || own.element != via_left.element)
            throw std::logic_error("starred condition: supremum under the right order disagrees with the left infimum");
        sups.push_back(own);
    }
    return conditions_from(right, sups);
}

bool check_C_star(const Nest& right, const Nest& partner, int which) {
    const Conditions c = check_conditions_star(make_dual_pair(partner, right));
    switch (which) {
        case 1: return c.c1;
        case 2: return c.c2;
        case 3: return c.c3;
        default: throw Unsupported("check_C_star: condition index must be 1, 2 or 3");
    }
}

bool is_interlocking_def(const SetFamily& f) {
    const Subset full = Subset::full(f.universe());
    for (Subset t : f) {
        Subset above = full;
        Subset below;
        for (Subset s : f) {
            if (s == t) continue;
            if (t.subset_of(s)) above = above & s;
            if (s.subset_of(t)) below = below | s;
        }
        if (above == t && below != t) return false;
    }
    return true;
}

bool is_interlocking_alexandroff(const Nest& n) {
    const Relation order = generated_order(n);
    const Relation co_order = generated_order(family_complement(n.family()));
    for (Subset l : n) {
        if (is_alexandroff_closed(order, l) && !is_alexandroff_closed(co_order, l.complement(n.universe())))
            return false;
    }
    return true;
}

bool is_interlocking_lowersets(const Nest& n) {
    const Relation order = generated_order(n);
    const Relation co_order = generated_order(family_complement(n.family()));
    for (Subset l : n) {
        const Subset rest = l.complement(n.universe());
        const bool rest_lower = down_set_strict(rest, co_order) == rest;
        const bool l_lower = down_set_strict(l, order) == l;
        if (rest_lower && !l_lower) return false;
    }
    return true;
}

bool equals_intersection_of_larger(const Nest& n, Subset m) {
    Subset acc = Subset::full(n.universe());
    for (Subset l : n) {
        if (m.proper_subset_of(l)) acc = acc & l;
    }
    return acc == m;
}

bool equals_union_of_smaller(const Nest& n, Subset m) {
    Subset acc;
    for (Subset l : n) {
        if (l.proper_subset_of(m)) acc = acc | l;
    }
    return acc == m;
}

Subset down_set_formula(Subset y, const Nest& n) {
    Subset acc;
    for (Subset l : n) {
        if (!y.subset_of(l)) acc = acc | l;
    }
    return acc;
}

Subset up_set_formula(Subset y, const Nest& n) {
    Subset acc;
    for (Subset l : n) {
        if (y.intersects(l)) acc = acc | l.complement(n.universe());
    }
    return acc;
}

SetFamily alexandroff_family_formula(const Nest& n) {
    std::vector<Subset> out;
    for (Subset y : all_subsets(n.universe())) {
        if (up_set_formula(y, n) == y) out.push_back(y);
    }
    return SetFamily(n.universe(), std::move(out));
}

MemberLowerSetTests member_lower_set_tests(const Nest& n, Subset m) {
    if (!n.family().contains(m)) throw InvalidInstance("member_lower_set_tests: subset is not a member of the nest");
    const Relation order = generated_order(n);
    const Relation le = reflexive_closure(order);
    MemberLowerSetTests t;
    t.union_of_smaller = equals_union_of_smaller(n, m);
    t.direct_lower = down_set_strict(m, order) == m;
    t.no_greatest_element = true;
    for (int k : m.elements()) {
        if (m.subset_of(le.predecessors(k))) {
            t.no_greatest_element = false;
            break;
        }
    }
    return t;
}

LotsReport lots_check(const DualNestPair& pair) {
    const Conditions left = check_conditions(pair.left());
    const Conditions right = check_conditions_star(pair);
    LotsReport r;
    r.c3_pair = left.c3 && right.c3;
    r.t0_c2_pair = t0_separates(pair.left()) && t0_separates(pair.right()) && left.c2 && right.c2;
    r.hypotheses = r.c3_pair || r.t0_c2_pair;
    const Relation le = nest_order(pair.left());
    r.linear = is_linear_order(le);
    std::vector<Subset> both(pair.left().begin(), pair.left().end());
    both.insert(both.end(), pair.right().begin(), pair.right().end());
    const Topology generated = Topology::from_subbase(SetFamily::deduplicated(pair.left().universe(), std::move(both)));
    r.subbase_matches_rays = generated == open_ray_topology(le);
    r.conclusion = r.linear && r.subbase_matches_rays;
    return r;
}

}  // namespace nests
