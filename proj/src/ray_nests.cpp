#include "nests/ray_nests.hpp"

#include <algorithm>
#include <stdexcept>

#include "nests/errors.hpp"

namespace nests {

namespace {

// Interval with optional (infinite) bounds and per-bound closedness.
struct Interval {
    std::optional<FieldElement> lo;
    bool lo_closed = false;
    std::optional<FieldElement> hi;
    bool hi_closed = false;

    bool above_lo(const FieldElement& x) const { return !lo || (lo_closed ? *lo <= x : *lo < x); }
    bool below_hi(const FieldElement& x) const { return !hi || (hi_closed ? x <= *hi : x < *hi); }
    bool contains(const FieldElement& x) const { return above_lo(x) && below_hi(x); }
    bool open_part_nonempty() const { return !lo || !hi || *lo < *hi; }
};

Interval intersect(const Interval& a, const Interval& b) {
    Interval out;
    if (!a.lo) {
        out.lo = b.lo;
        out.lo_closed = b.lo_closed;
    } else if (!b.lo || *b.lo < *a.lo) {
        out.lo = a.lo;
        out.lo_closed = a.lo_closed;
    } else if (*a.lo < *b.lo) {
        out.lo = b.lo;
        out.lo_closed = b.lo_closed;
    } else {
        out.lo = a.lo;
        out.lo_closed = a.lo_closed && b.lo_closed;
    }
    if (!a.hi) {
        out.hi = b.hi;
        out.hi_closed = b.hi_closed;
    } else if (!b.hi || *a.hi < *b.hi) {
        out.hi = a.hi;
        out.hi_closed = a.hi_closed;
    } else if (*b.hi < *a.hi) {
        out.hi = b.hi;
        out.hi_closed = b.hi_closed;
    } else {
        out.hi = a.hi;
        out.hi_closed = a.hi_closed && b.hi_closed;
    }
    return out;
}

Interval window_interval(const Window& w) { return {w.lo, false, w.hi, false}; }

bool in_field(const FieldElement& x, CarrierKind k) { return k == CarrierKind::Qsqrt2 || x.is_rational(); }

// Some point of the field lies in the interval.
bool has_point(const Interval& i, CarrierKind field) {
    if (!i.lo || !i.hi) return true;
    if (*i.lo < *i.hi) return true;
    return *i.lo == *i.hi && i.lo_closed && i.hi_closed && in_field(*i.lo, field);
}

CarrierKind endpoint_field(const RayNest& n) {
    return n.endpoints.over_qsqrt2 ? CarrierKind::Qsqrt2 : n.carrier.kind;
}

FieldElement progression_at(const EndpointSet& e, std::int64_t k) { return e.start + e.step * FieldElement(k); }

// Smallest k >= 0 whose progression point is not below the interval's lower bound.
std::int64_t first_progression_index(const EndpointSet& e, const Interval& i) {
    std::int64_t k = 0;
    if (i.lo) k = std::max<std::int64_t>(0, ((*i.lo - e.start) / e.step).floor());
    while (!i.above_lo(progression_at(e, k))) ++k;
    return k;
}

bool endpoint_in(const RayNest& n, const Interval& i) {
    const EndpointSet& e = n.endpoints;
    switch (e.kind) {
        case EndpointSet::Kind::all_carrier:
            return has_point(intersect(i, window_interval(n.carrier.window)), n.carrier.kind);
        case EndpointSet::Kind::dense_interval:
            return has_point(intersect(i, Interval{e.lo, e.lo_closed, e.hi, e.hi_closed}), endpoint_field(n));
        case EndpointSet::Kind::arithmetic_progression:
            return i.below_hi(progression_at(e, first_progression_index(e, i)));
        case EndpointSet::Kind::finite_list:
            return std::any_of(e.values.begin(), e.values.end(), [&](const FieldElement& v) { return i.contains(v); });
    }
    return false;
}

// A dyadic rational strictly between a and b (a < b).
FieldElement rational_between(const FieldElement& a, const FieldElement& b) {
    for (int k = 1; k < 62; ++k) {
        const std::int64_t den = std::int64_t{1} << k;
        const FieldElement q(Rational((a * FieldElement(den)).floor() + 1, den));
        if (q < b) return q;
    }
    throw std::logic_error("rational_between: interval too narrow");
}

// A carrier point strictly between a and b, the midpoint when the carrier holds it.
FieldElement carrier_point_in(const Carrier& c, const FieldElement& a, const FieldElement& b) {
    const FieldElement mid = midpoint(a, b);
    if (in_field(mid, c.kind)) return mid;
    return rational_between(a, b);
}

// An open interval inside the window that contains no endpoint.
std::optional<std::pair<std::optional<FieldElement>, std::optional<FieldElement>>> find_gap(const RayNest& n) {
    const Window& w = n.carrier.window;
    const EndpointSet& e = n.endpoints;
    std::vector<Interval> candidates;
    switch (e.kind) {
        case EndpointSet::Kind::all_carrier:
            break;
        case EndpointSet::Kind::dense_interval:
            if (e.lo) candidates.push_back({std::nullopt, false, e.lo, false});
            if (e.hi) candidates.push_back({e.hi, false, std::nullopt, false});
            break;
        case EndpointSet::Kind::arithmetic_progression: {
            candidates.push_back({std::nullopt, false, e.start, false});
            const std::int64_t k0 = first_progression_index(e, window_interval(w));
            for (std::int64_t k = std::max<std::int64_t>(0, k0 - 1); k <= k0 + 1; ++k)
                candidates.push_back({progression_at(e, k), false, progression_at(e, k + 1), false});
            break;
        }
        case EndpointSet::Kind::finite_list:
            if (e.values.empty()) {
                candidates.push_back({});
                break;
            }
            candidates.push_back({std::nullopt, false, e.values.front(), false});
            for (std::size_t i = 0; i + 1 < e.values.size(); ++i)
                candidates.push_back({e.values[i], false, e.values[i + 1], false});
            candidates.push_back({e.values.back(), false, std::nullopt, false});
            break;
    }
    for (const Interval& c : candidates) {
        const Interval g = intersect(c, window_interval(w));
        if (g.open_part_nonempty()) return std::make_pair(g.lo, g.hi);
    }
    return std::nullopt;
}

// A point strictly inside the endpoint set, used to build compatibility witnesses.
FieldElement some_endpoint(const RayNest& n) {
    const EndpointSet& e = n.endpoints;
    switch (e.kind) {
        case EndpointSet::Kind::all_carrier:
            return n.carrier.window.lo ? *n.carrier.window.lo + 1 : FieldElement(0);
        case EndpointSet::Kind::dense_interval:
            if (e.lo && e.hi) return midpoint(*e.lo, *e.hi);
            if (e.lo) return *e.lo + 1;
            if (e.hi) return *e.hi - 1;
            return 0;
        case EndpointSet::Kind::arithmetic_progression:
            return e.start;
        case EndpointSet::Kind::finite_list:
            return e.values.at(0);
    }
    return 0;
}

bool endpoints_empty(const RayNest& n) {
    return n.endpoints.kind == EndpointSet::Kind::finite_list && n.endpoints.values.empty();
}

// (a, b) related with a < e < b in carrier order, oriented so that ray_related(a, b).
std::pair<FieldElement, FieldElement> straddle(const RayNest& n, const FieldElement& p, const FieldElement& q) {
    if (n.orientation == Orientation::lower) return {p, q};
    return {q, p};
}

}  // namespace

EndpointSet EndpointSet::dense_interval(std::optional<FieldElement> lo, bool lo_closed,
                                        std::optional<FieldElement> hi, bool hi_closed, bool over_qsqrt2) {
    EndpointSet e;
    e.kind = Kind::dense_interval;
    e.lo = std::move(lo);
    e.hi = std::move(hi);
    e.lo_closed = lo_closed;
    e.hi_closed = hi_closed;
    e.over_qsqrt2 = over_qsqrt2;
    return e;
}

EndpointSet EndpointSet::arithmetic_progression(FieldElement start, FieldElement step) {
    EndpointSet e;
    e.kind = Kind::arithmetic_progression;
    e.start = std::move(start);
    e.step = std::move(step);
    return e;
}

EndpointSet EndpointSet::finite_list(std::vector<FieldElement> values) {
    EndpointSet e;
    e.kind = Kind::finite_list;
    e.values = std::move(values);
    return e;
}

void RayNest::validate() {
    const Window& w = carrier.window;
    if (w.lo && w.hi && !(*w.lo < *w.hi)) throw InvalidInstance("ray nest window must satisfy lo < hi");
    switch (endpoints.kind) {
        case EndpointSet::Kind::all_carrier:
            break;
        case EndpointSet::Kind::dense_interval:
            if (endpoints.lo && endpoints.hi && !(*endpoints.lo < *endpoints.hi))
                throw InvalidInstance("dense endpoint interval must satisfy lo < hi");
            break;
        case EndpointSet::Kind::arithmetic_progression:
            if (endpoints.step.sign() <= 0) throw InvalidInstance("progression step must be positive");
            break;
        case EndpointSet::Kind::finite_list: {
            auto& v = endpoints.values;
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            break;
        }
    }
}

bool ray_contains(const FieldElement& x, const FieldElement& e, RayShape shape, Orientation orientation) {
    if (orientation == Orientation::lower) return shape == RayShape::open ? x < e : x <= e;
    return shape == RayShape::open ? x > e : x >= e;
}

bool ray_member(const RayNest& n, const FieldElement& x, const FieldElement& e) {
    if (!n.carrier.contains(x)) throw InvalidInstance("point " + to_string(x) + " is not in the carrier window");
    return ray_contains(x, e, n.shape, n.orientation);
}

bool is_endpoint(const RayNest& n, const FieldElement& e) { return endpoint_in(n, Interval{e, true, e, true}); }

bool ray_related(const RayNest& n, const FieldElement& x, const FieldElement& y) {
    // Lower open rays split x from y iff x < e <= y; the other cases mirror this.
    const bool open = n.shape == RayShape::open;
    if (n.orientation == Orientation::lower) {
        if (!(x < y)) return false;
        return endpoint_in(n, open ? Interval{x, false, y, true} : Interval{x, true, y, false});
    }
    if (!(y < x)) return false;
    return endpoint_in(n, open ? Interval{y, true, x, false} : Interval{y, false, x, true});
}

RayConditions ray_check_conditions(const RayNest& n) {
    const EndpointSet& e = n.endpoints;
    const Window& w = n.carrier.window;
    RayConditions c;
    switch (e.kind) {
        case EndpointSet::Kind::all_carrier:
            c.c1 = true;
            break;
        case EndpointSet::Kind::dense_interval: {
            const bool field_ok = !(e.over_qsqrt2 && n.carrier.kind == CarrierKind::Q);
            const bool lo_inside = !w.lo || (e.lo && (*w.lo < *e.lo || (*w.lo == *e.lo && !e.lo_closed)));
            const bool hi_inside = !w.hi || (e.hi && (*e.hi < *w.hi || (*e.hi == *w.hi && !e.hi_closed)));
            c.c1 = field_ok && lo_inside && hi_inside;
            break;
        }
        case EndpointSet::Kind::arithmetic_progression:
            c.c1 = !w.hi && (!w.lo || *w.lo < e.start) &&
                   (n.carrier.kind == CarrierKind::Qsqrt2 || (e.start.is_rational() && e.step.is_rational()));
            break;
        case EndpointSet::Kind::finite_list:
            c.c1 = std::all_of(e.values.begin(), e.values.end(),
                               [&](const FieldElement& v) { return n.carrier.contains(v); });
            break;
    }
    c.c2 = c.c1 && n.shape == RayShape::open;
    bool covers = false;
    if (e.kind == EndpointSet::Kind::all_carrier) {
        covers = true;
    } else if (e.kind == EndpointSet::Kind::dense_interval) {
        covers = (!e.lo || (w.lo && *e.lo <= *w.lo)) && (!e.hi || (w.hi && *w.hi <= *e.hi));
    }
    c.c3 = c.c2 && covers;
    return c;
}

RayT0 ray_t0(const RayNest& n) {
    RayT0 r;
    const auto gap = find_gap(n);
    if (!gap) {
        r.separating = true;
        return r;
    }
    auto [lo, hi] = *gap;
    if (!lo && !hi) {
        lo = FieldElement(0);
        hi = FieldElement(1);
    } else if (!lo) {
        lo = *hi - 1;
    } else if (!hi) {
        hi = *lo + 1;
    }
    const FieldElement y = carrier_point_in(n.carrier, *lo, *hi);
    const FieldElement x = carrier_point_in(n.carrier, *lo, y);
    if (ray_related(n, x, y) || ray_related(n, y, x)) throw std::logic_error("ray_t0: gap witness is separated");
    r.witness = std::make_pair(x, y);
    return r;
}

RayT0 ray_generated_order_is_carrier_order(const RayNest& n) { return ray_t0(n); }

RayNest ray_dual(const RayNest& n) {
    RayNest d = n;
    d.orientation = n.orientation == Orientation::lower ? Orientation::upper : Orientation::lower;
    return d;
}

RayDualPair ray_dual_pair(const RayNest& n) {
    RayDualPair p{n, ray_dual(n), ray_check_conditions(n), {}};
    p.right_conditions = ray_check_conditions(p.right);
    return p;
}

RayGroupCompat ray_group_compat(GroupOp op, const RayNest& n) {
    if (!n.carrier.window.full_line())
        throw Unsupported("ray_group_compat: group operations need the full carrier line as window");
    RayGroupCompat r;
    const bool empty = endpoints_empty(n);

    if (op == GroupOp::multiply) {
        // Dilation by a negative number turns lower rays into upper rays.
        r.premise = empty;
        r.compatible = empty;
        if (empty) return r;
        const FieldElement e = some_endpoint(n);
        FieldElement p = carrier_point_in(n.carrier, e - 1, e);
        while (p.sign() == 0 || p == FieldElement(-1)) p = carrier_point_in(n.carrier, p, e);
        const auto [a, b] = straddle(n, p, p + 1);
        const FieldElement g(-1);
        if (!ray_related(n, a, b) || ray_related(n, a * g, b * g))
            throw std::logic_error("ray_group_compat: multiplication witness failed verification");
        r.witness = std::array<FieldElement, 3>{a, b, g};
        return r;
    }

    const EndpointSet& e = n.endpoints;
    r.premise = empty || e.kind == EndpointSet::Kind::all_carrier ||
                (e.kind == EndpointSet::Kind::dense_interval && !e.lo && !e.hi);
    const RayT0 t0 = ray_t0(n);
    r.compatible = empty || t0.separating;
    r.integer_shift_compatible = r.premise || r.compatible;
    if (r.compatible) return r;

    // Move a straddling pair into an endpoint-free gap.
    const auto& [x, y] = *t0.witness;
    const FieldElement width = y - x;
    const FieldElement anchor = some_endpoint(n);
    const FieldElement p = carrier_point_in(n.carrier, anchor - width, anchor);
    const auto [a, b] = straddle(n, p, p + width);
    const FieldElement g = (n.orientation == Orientation::lower ? x : y) - a;
    if (!ray_related(n, a, b) || ray_related(n, a + g, b + g))
        throw std::logic_error("ray_group_compat: addition witness failed verification");
    r.witness = std::array<FieldElement, 3>{a, b, g};

    // Integer shifts: push a straddling pair past the bounded end of the endpoint set.
    std::optional<FieldElement> below;
    std::optional<FieldElement> above;
    switch (e.kind) {
        case EndpointSet::Kind::dense_interval:
            below = e.lo;
            above = e.hi;
            break;
        case EndpointSet::Kind::arithmetic_progression:
            below = e.start;
            break;
        case EndpointSet::Kind::finite_list:
            below = e.values.front();
            break;
        case EndpointSet::Kind::all_carrier:
            break;
    }
    const FieldElement ip = carrier_point_in(n.carrier, anchor - 1, anchor);
    const auto [ia, ib] = straddle(n, ip, ip + 1);
    const FieldElement lo = std::min(ia, ib);
    const FieldElement hi = std::max(ia, ib);
    FieldElement ig = below ? FieldElement((*below - hi).floor() - 1) : FieldElement((*above - lo).floor() + 2);
    if (!ray_related(n, ia, ib) || ray_related(n, ia + ig, ib + ig))
        throw std::logic_error("ray_group_compat: integer-shift witness failed verification");
    r.integer_shift_compatible = false;
    r.integer_shift_witness = std::array<FieldElement, 3>{ia, ib, ig};
    return r;
}

std::string to_string(CarrierKind k) { return k == CarrierKind::Q ? "Q" : "Qsqrt2"; }

std::string to_string(RayShape s) { return s == RayShape::open ? "open" : "closed"; }

std::string to_string(Orientation o) { return o == Orientation::lower ? "lower" : "upper"; }

std::string to_string(EndpointSet::Kind k) {
    switch (k) {
        case EndpointSet::Kind::all_carrier: return "all_carrier";
        case EndpointSet::Kind::dense_interval: return "dense_interval";
        case EndpointSet::Kind::arithmetic_progression: return "arithmetic_progression";
        case EndpointSet::Kind::finite_list: return "finite_list";
    }
    return "unknown";
}

}  // namespace nests
