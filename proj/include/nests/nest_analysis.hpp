#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "nests/errors.hpp"
#include "nests/finite_core.hpp"
#include "nests/relation.hpp"
#include "nests/topology.hpp"

namespace nests {

enum class SupReason { ok, no_upper_bound, no_least_upper_bound };

std::string_view to_string(SupReason r);

struct SupResult {
    bool exists = false;
    std::optional<int> element;  ///< present iff exists
    SupReason reason = SupReason::no_upper_bound;
};

/// Least upper bound of `s` under a reflexive relation. The supremum exists
/// iff the upper bounds {x : y <= x for all y in s} contain exactly one
/// element below all the others. sup of the empty set is the least element.
SupResult sup_wrt(Subset s, const Relation& reflexive);
SupResult inf_wrt(Subset s, const Relation& reflexive);

/// The reflexive nest order: reflexive_closure(generated_order(n)).
Relation nest_order(const SetFamily& n);

struct Conditions {
    bool c1 = false;  ///< every member has a supremum
    bool c2 = false;  ///< every member's supremum exists and lies outside it
    bool c3 = false;  ///< c2, and every point is the supremum of a member not containing it
};

Conditions check_conditions(const Nest& n);
inline bool check_C1(const Nest& n) { return check_conditions(n).c1; }
inline bool check_C2(const Nest& n) { return check_conditions(n).c2; }
inline bool check_C3(const Nest& n) { return check_conditions(n).c3; }

/// Raised when two nests do not generate mutually transposed orders.
class DualityViolation : public Error {
public:
    DualityViolation(const std::string& what, int x, int y) : Error(what), witness{x, y} {}
    /// x < y under the left nest but not y < x under the right one, or vice versa.
    std::pair<int, int> witness;
};

/// Two nests whose generated orders are mutual transposes.
class DualNestPair {
public:
    const Nest& left() const { return left_; }
    const Nest& right() const { return right_; }

private:
    DualNestPair(Nest l, Nest r) : left_(std::move(l)), right_(std::move(r)) {}
    Nest left_;
    Nest right_;
    friend DualNestPair make_dual_pair(const Nest& l, const Nest& r);
};

/// Throws DualityViolation (with a witness pair) unless order(l) = transpose(order(r)).
DualNestPair make_dual_pair(const Nest& l, const Nest& r);

/// The starred conditions of the right nest: suprema under the right nest's
/// own reflexive order, cross-checked against infima under the left order.
Conditions check_conditions_star(const DualNestPair& pair);

/// Starred condition `which` (1, 2 or 3) of `right`, whose dual partner is `partner`.
bool check_C_star(const Nest& right, const Nest& partner, int which);

/// For every member T equal to the intersection of the other members
/// containing it (empty intersection = X), T is also the union of the other
/// members it contains (empty union = empty set).
bool is_interlocking_def(const SetFamily& f);

/// Every member closed in the Alexandroff family of the nest order has its
/// complement closed in the Alexandroff family of the complement nest order.
bool is_interlocking_alexandroff(const Nest& n);

/// For every member L, if X - L is a lower set of the complement nest order
/// then L is a lower set of the nest order.
bool is_interlocking_lowersets(const Nest& n);

/// m = intersection of the members strictly containing it.
bool equals_intersection_of_larger(const Nest& n, Subset m);
/// m = union of the members strictly inside it.
bool equals_union_of_smaller(const Nest& n, Subset m);

/// union{L in n : y not inside L}; equals the strict down-set of y.
Subset down_set_formula(Subset y, const Nest& n);
/// union{X - L : y meets L}; equals the strict up-set of y.
Subset up_set_formula(Subset y, const Nest& n);

/// {Y : Y = up_set_formula(Y, n)}.
SetFamily alexandroff_family_formula(const Nest& n);

struct MemberLowerSetTests {
    bool union_of_smaller = false;  ///< m = union of members strictly inside m
    bool direct_lower = false;      ///< m = strict down-set of m
    /// No element of m lies above every other element of m (reflexive order).
    bool no_greatest_element = false;
};

/// Throws InvalidInstance when m is not a member of n.
MemberLowerSetTests member_lower_set_tests(const Nest& n, Subset m);

struct LotsReport {
    bool c3_pair = false;     ///< (C3) on the left and (C3)* on the right
    bool t0_c2_pair = false;  ///< both nests T0-separate and (C2), (C2)* hold
    bool hypotheses = false;  ///< c3_pair || t0_c2_pair
    bool linear = false;      ///< the left reflexive order is linear
    bool subbase_matches_rays = false;
    bool conclusion = false;  ///< linear && subbase_matches_rays
};

/// Evaluates the orderability hypotheses and the conclusion that the
/// topology generated by left u right is the open-ray topology of a linear order.
LotsReport lots_check(const DualNestPair& pair);

}  // namespace nests
