#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nests/exact.hpp"

namespace nests {

/// Symbolic nests of rays over an exact dense ordered carrier.
///
/// A ray nest is {(-inf, e) : e in E} or {(-inf, e] : e in E} intersected
/// with an open window of the carrier (or the mirrored upper rays (e, inf),
/// [e, inf) for a dual nest). Nothing is enumerated: every property is
/// decided from the endpoint set E by the rules below, with the carrier
/// order as the order in which suprema are taken.
///
///   C1  every endpoint lies in carrier n window; the supremum of (-inf, e)
///       and of (-inf, e] is e, and it must be a point of X.
///   C2  C1 and open rays; e lies outside (-inf, e) but inside (-inf, e].
///   C3  C2 and E covers carrier n window; every point must be some e.
///   T0  E is dense in the window; a gap (p, q) free of endpoints leaves two
///       points inside it that no ray splits.
///
/// Upper rays follow the same rules with infima in place of suprema.

enum class CarrierKind { Q, Qsqrt2 };

/// Open interval (lo, hi); a missing bound is infinite.
struct Window {
    std::optional<FieldElement> lo;
    std::optional<FieldElement> hi;

    bool contains(const FieldElement& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
    bool full_line() const { return !lo && !hi; }
};

struct Carrier {
    CarrierKind kind = CarrierKind::Qsqrt2;
    Window window;

    /// x is a carrier point inside the window.
    bool contains(const FieldElement& x) const {
        return (kind == CarrierKind::Qsqrt2 || x.is_rational()) && window.contains(x);
    }
};

enum class RayShape { open, closed };
enum class Orientation { lower, upper };

struct EndpointSet {
    enum class Kind { all_carrier, dense_interval, arithmetic_progression, finite_list };
    Kind kind = Kind::all_carrier;

    // dense_interval: every point of the field between lo and hi
    std::optional<FieldElement> lo;
    std::optional<FieldElement> hi;
    bool lo_closed = true;
    bool hi_closed = true;
    /// Take the interval in Q[sqrt 2] even over a rational carrier (real endpoints over Q).
    bool over_qsqrt2 = false;

    // arithmetic_progression: start + k * step, k = 0, 1, 2, ...
    FieldElement start;
    FieldElement step = 1;

    // finite_list
    std::vector<FieldElement> values;

    static EndpointSet all_carrier() { return {}; }
    static EndpointSet dense_interval(std::optional<FieldElement> lo, bool lo_closed, std::optional<FieldElement> hi,
                                      bool hi_closed, bool over_qsqrt2 = false);
    static EndpointSet arithmetic_progression(FieldElement start, FieldElement step);
    static EndpointSet finite_list(std::vector<FieldElement> values);
};

struct RayNest {
    Carrier carrier;
    RayShape shape = RayShape::open;
    EndpointSet endpoints;
    Orientation orientation = Orientation::lower;

    /// Throws InvalidInstance on an empty window, a reversed endpoint
    /// interval or a non-positive progression step. Sorts finite lists.
    void validate();
};

/// x < e, x <= e, x > e or x >= e by shape and orientation.
bool ray_contains(const FieldElement& x, const FieldElement& e, RayShape shape,
                  Orientation orientation = Orientation::lower);

/// Membership of carrier point x in the ray with endpoint e; throws
/// InvalidInstance when x is not a carrier point of the window.
bool ray_member(const RayNest& n, const FieldElement& x, const FieldElement& e);

/// e belongs to the endpoint set (as a parameter; need not lie in the carrier).
bool is_endpoint(const RayNest& n, const FieldElement& e);

/// The generated order x < y: some ray contains x but not y.
bool ray_related(const RayNest& n, const FieldElement& x, const FieldElement& y);

struct RayConditions {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
};

RayConditions ray_check_conditions(const RayNest& n);

struct RayT0 {
    bool separating = false;
    /// Two carrier points x < y that no ray splits.
    std::optional<std::pair<FieldElement, FieldElement>> witness;
};

RayT0 ray_t0(const RayNest& n);
inline bool ray_t0_separating(const RayNest& n) { return ray_t0(n).separating; }

/// The generated order equals the carrier order. Rays give x < y only when
/// an endpoint separates them, so equality holds exactly when E is dense.
RayT0 ray_generated_order_is_carrier_order(const RayNest& n);

struct RayDualPair {
    RayNest left;
    RayNest right;
    RayConditions left_conditions;
    RayConditions right_conditions;  ///< the starred conditions
};

/// The mirrored upper-ray nest with the same shape and endpoints.
RayNest ray_dual(const RayNest& n);
RayDualPair ray_dual_pair(const RayNest& n);

enum class GroupOp { add, multiply };

struct RayGroupCompat {
    bool compatible = false;
    /// Every translate (or dilate) of a member is a member.
    bool premise = false;
    /// (a, b, g) with a < b but not a*g < b*g.
    std::optional<std::array<FieldElement, 3>> witness;
    /// Addition only: compatibility restricted to integer shifts.
    std::optional<bool> integer_shift_compatible;
    std::optional<std::array<FieldElement, 3>> integer_shift_witness;
};

/// Compatibility of the generated order with + on the full line or with x on
/// the punctured line. Throws Unsupported for a bounded window.
RayGroupCompat ray_group_compat(GroupOp op, const RayNest& n);

std::string to_string(CarrierKind k);
std::string to_string(RayShape s);
std::string to_string(Orientation o);
std::string to_string(EndpointSet::Kind k);

}  // namespace nests
