#include "nests/harness/examples.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nests/errors.hpp"
#include "nests/nest_analysis.hpp"
#include "nests/roster.hpp"

namespace nests::harness {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Demo {
public:
    Demo(std::string id, std::string title) {
        report_.id = std::move(id);
        report_.title = std::move(title);
    }
    void show(std::string name, std::string value) { report_.objects.emplace_back(std::move(name), std::move(value)); }
    void expect(std::string label, std::string expected, std::string actual) {
        report_.checks.push_back({std::move(label), std::move(expected), std::move(actual)});
    }
    void expect(std::string label, bool expected, bool actual) {
        expect(std::move(label), yes_no(expected), yes_no(actual));
    }
    ExampleReport done() { return std::move(report_); }

private:
    ExampleReport report_;
};

std::string pair_text(const std::pair<FieldElement, FieldElement>& p) {
    return "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
}

std::string witness_text(const std::optional<std::pair<FieldElement, FieldElement>>& w) {
    return w ? pair_text(*w) : "none";
}

void show_ray(Demo& d, const std::string& name, const RayNest& n) { d.show(name, to_json(n).dump()); }

// ---- finite examples ----

ExampleReport example_two_point_t0() {
    Demo d("3.4", "X = {a,b}, L = {{a}}: T0-separating without (C3)");
    const Universe u(2, {"a", "b"});
    const Nest l(u, {Subset::of({0})});
    const Relation strict = generated_order(l);
    const Relation order = nest_order(l);
    const Conditions c = check_conditions(l);
    const SupResult sup = sup_wrt(Subset::of({0}), order);
    d.show("L", roster(l.family()));
    d.show("generated order", roster(strict));
    d.show("T_L", roster(topology_from_subbase(l)));
    d.expect("L T0-separates X", true, t0_separates(l));
    d.expect("sup {a}", "a", sup.exists ? u.label(*sup.element) : "none");
    d.expect("(C1)", true, c.c1);
    d.expect("(C3)", false, c.c3);
    return d.done();
}

ExampleReport example_two_point_pair() {
    Demo d("3.7", "X = {x1,x2}, L = {{x1}}, R = {{x2}}: join is discrete without (C3)");
    const Universe u(2);
    const Nest l(u, {Subset::of({0})});
    const Nest r(u, {Subset::of({1})});
    const Relation order_l = nest_order(l);
    const Topology tl = topology_from_subbase(l);
    const Topology lower = lower_topology(order_l);
    const Topology tr = topology_from_subbase(r);
    const Topology upper = upper_topology(order_l);
    const Topology tin = interval_topology(order_l);
    const Topology tlr = topology_from_subbase(SetFamily::deduplicated(u, {Subset::of({0}), Subset::of({1})}));
    const auto& x = Subset::full(u);

    d.show("L", roster(l.family()));
    d.show("R", roster(r.family()));
    d.show("order of L", roster(generated_order(l)));
    d.show("order of R", roster(generated_order(r)));
    d.expect("T_L", "{∅, {x1}, {x1,x2}}", roster(tl));
    d.expect("x1 < x2 under L", true, generated_order(l).holds(0, 1));
    d.expect("up(x1)", "{x1,x2}", roster(up_point(0, order_l), u));
    d.expect("X - up(x1)", "∅", roster(x - up_point(0, order_l), u));
    d.expect("up(x2)", "{x2}", roster(up_point(1, order_l), u));
    d.expect("X - up(x2)", "{x1}", roster(x - up_point(1, order_l), u));
    d.expect("T_l", "{∅, {x1}, {x1,x2}}", roster(lower));
    d.expect("T_l = T_L", true, lower == tl);
    bool dual = true;
    try {
        make_dual_pair(l, r);
    } catch (const DualityViolation&) {
        dual = false;
    }
    d.expect("L and R are dual", true, dual);
    d.expect("T_R (stated without ∅; a topology contains it)", "{∅, {x2}, {x1,x2}}", roster(tr));
    d.expect("down(x1)", "{x1}", roster(down_point(0, order_l), u));
    d.expect("X - down(x1)", "{x2}", roster(x - down_point(0, order_l), u));
    d.expect("down(x2)", "{x1,x2}", roster(down_point(1, order_l), u));
    d.expect("X - down(x2)", "∅", roster(x - down_point(1, order_l), u));
    d.expect("T_U", "{∅, {x2}, {x1,x2}}", roster(upper));
    d.expect("T_U = T_R", true, upper == tr);
    d.expect("T_in", "{∅, {x1}, {x2}, {x1,x2}}", roster(tin));
    d.expect("T_{L∪R}", "{∅, {x1}, {x2}, {x1,x2}}", roster(tlr));
    d.expect("T_{L∪R} = T_in = discrete", true, tlr == tin && tin == Topology::discrete(u));
    d.expect("(C3)", false, check_C3(l));
    const DualNestPair pair = make_dual_pair(l, r);
    const LotsReport lots = lots_check(pair);
    d.expect("orderability hypotheses", false, lots.hypotheses);
    d.expect("orderability conclusion", true, lots.conclusion);
    return d.done();
}

ExampleReport example_four_point_pair() {
    Demo d("3.8", "X = {x1,..,x4}, L = {{x1,x2},X}, R = {{x3,x4},X}: non-T0 dual pair");
    const Universe u(4);
    const Subset x = Subset::full(u);
    const Nest l(u, {Subset::of({0, 1}), x});
    const Nest r(u, {Subset::of({2, 3}), x});
    const Relation order_l = nest_order(l);
    const Topology tl = topology_from_subbase(l);
    const Topology lower = lower_topology(order_l);
    const Topology tr = topology_from_subbase(r);
    const Topology upper = upper_topology(order_l);
    const Topology tin = interval_topology(order_l);
    const Topology tlr = topology_from_subbase(SetFamily::deduplicated(u, {Subset::of({0, 1}), Subset::of({2, 3}), x}));

    d.show("L", roster(l.family()));
    d.show("R", roster(r.family()));
    d.expect("order of L", "{(x1,x3), (x1,x4), (x2,x3), (x2,x4)}", roster(generated_order(l)));
    for (int i = 0; i < 4; ++i) {
        d.show("up(" + u.label(i) + ")", roster(up_point(i, order_l), u));
        d.show("X - up(" + u.label(i) + ")", roster(x - up_point(i, order_l), u));
    }
    d.expect("up(x1)", "{x1,x3,x4}", roster(up_point(0, order_l), u));
    d.expect("up(x2)", "{x2,x3,x4}", roster(up_point(1, order_l), u));
    d.expect("up(x3)", "{x3}", roster(up_point(2, order_l), u));
    d.expect("up(x4)", "{x4}", roster(up_point(3, order_l), u));
    d.expect("T_l", "{∅, {x1}, {x2}, {x1,x2}, {x1,x2,x3}, {x1,x2,x4}, {x1,x2,x3,x4}}", roster(lower));
    d.expect("T_l open count", "7", std::to_string(lower.open_count()));
    d.expect("T_L", "{∅, {x1,x2}, {x1,x2,x3,x4}}", roster(tl));
    d.expect("T_L strictly coarser than T_l", true, tl.coarser_than(lower) && !(tl == lower));
    d.expect("L T0-separates X", false, t0_separates(l));
    const SupResult sup = sup_wrt(Subset::of({0, 1}), order_l);
    d.expect("sup {x1,x2}", std::string(to_string(SupReason::no_least_upper_bound)),
             sup.exists ? u.label(*sup.element) : std::string(to_string(sup.reason)));
    d.expect("(C2)", false, check_C2(l));
    // The stated list has x4 < x3 where x4 < x1 is meant; the duality listing confirms it.
    d.expect("order of R", "{(x3,x1), (x3,x2), (x4,x1), (x4,x2)}", roster(generated_order(r)));
    const DualNestPair pair = make_dual_pair(l, r);
    d.expect("T_R", "{∅, {x3,x4}, {x1,x2,x3,x4}}", roster(tr));
    d.expect("T_U", "{∅, {x3}, {x4}, {x3,x4}, {x1,x3,x4}, {x2,x3,x4}, {x1,x2,x3,x4}}", roster(upper));
    d.expect("T_U open count", "7", std::to_string(upper.open_count()));
    d.expect("R T0-separates X", false, t0_separates(r));
    d.expect("(C2)*", false, check_conditions_star(pair).c2);
    d.expect("T_R strictly coarser than T_U", true, tr.coarser_than(upper) && !(tr == upper));
    d.expect("T_in", "{∅, {x1}, {x2}, {x3}, {x4}, {x1,x2}, {x1,x3}, {x2,x3}, {x1,x4}, {x2,x4}, {x3,x4}, "
                     "{x1,x2,x3}, {x1,x2,x4}, {x1,x3,x4}, {x2,x3,x4}, {x1,x2,x3,x4}}",
             roster(tin));
    d.expect("T_in is discrete", true, tin == Topology::discrete(u));
    d.show("T_{L∪R}", roster(tlr));
    d.expect("T_{L∪R} strictly coarser than T_in", true, tlr.coarser_than(tin) && !(tlr == tin));
    const LotsReport lots = lots_check(pair);
    d.expect("orderability hypotheses", false, lots.hypotheses);
    // The order is not linear, so X is not a LOTS under it.
    d.expect("orderability conclusion", false, lots.conclusion);
    return d.done();
}

// ---- ray examples ----

RayNest full_line(CarrierKind k, RayShape s, EndpointSet e) {
    RayNest n;
    n.carrier.kind = k;
    n.shape = s;
    n.endpoints = std::move(e);
    n.validate();
    return n;
}

RayNest unit_window_half_open(RayShape s) {
    RayNest n;
    n.carrier.kind = CarrierKind::Qsqrt2;
    n.carrier.window.lo = FieldElement(0);
    n.carrier.window.hi = FieldElement(1);
    n.shape = s;
    n.endpoints = EndpointSet::dense_interval(FieldElement(Rational(1, 2)), true, FieldElement(1), false);
    n.validate();
    return n;
}

ExampleReport example_real_line_order() {
    Demo d("2.2", "rays (-inf,x): the generated order is the usual order");
    const RayNest n = full_line(CarrierKind::Qsqrt2, RayShape::open, EndpointSet::all_carrier());
    show_ray(d, "L", n);
    const RayT0 eq = ray_generated_order_is_carrier_order(n);
    d.expect("generated order = carrier order", true, eq.separating);
    const RayNest q = full_line(CarrierKind::Q, RayShape::open, EndpointSet::all_carrier());
    d.expect("generated order = carrier order over Q", true, ray_generated_order_is_carrier_order(q).separating);
    d.expect("1/2 < 1 in the generated order", true, ray_related(n, FieldElement(Rational(1, 2)), FieldElement(1)));
    const RayDualPair pair = ray_dual_pair(n);
    d.expect("(C3)", true, pair.left_conditions.c3);
    d.expect("(C3)*", true, pair.right_conditions.c3);
    return d.done();
}

ExampleReport example_closed_half_interval() {
    Demo d("3.1", "X = (0,1), L = {(0,a] : 1/2 <= a < 1}");
    const RayNest n = unit_window_half_open(RayShape::closed);
    show_ray(d, "L", n);
    const RayConditions c = ray_check_conditions(n);
    const RayT0 t0 = ray_t0(n);
    d.show("T0 witness", witness_text(t0.witness));
    d.expect("sup (0,1/2] = 1/2 lies in it", true,
             ray_member(n, FieldElement(Rational(1, 2)), FieldElement(Rational(1, 2))));
    d.expect("(C1)", true, c.c1);
    d.expect("(C2)", false, c.c2);
    d.expect("(C3)", false, c.c3);
    d.expect("T0-separating", false, t0.separating);
    d.expect("unseparated pair", "(1/8, 1/4)", witness_text(t0.witness));
    return d.done();
}

ExampleReport example_open_half_interval() {
    Demo d("3.2", "X = (0,1), L = {(0,a) : 1/2 <= a < 1}");
    const RayNest n = unit_window_half_open(RayShape::open);
    show_ray(d, "L", n);
    const RayConditions c = ray_check_conditions(n);
    const RayT0 t0 = ray_t0(n);
    d.show("T0 witness", witness_text(t0.witness));
    d.expect("(C1)", true, c.c1);
    d.expect("(C2)", true, c.c2);
    d.expect("(C3)", false, c.c3);
    d.expect("1/4 is the supremum of no member", false, is_endpoint(n, FieldElement(Rational(1, 4))));
    d.expect("T0-separating", false, t0.separating);
    d.expect("unseparated pair", "(1/8, 1/4)", witness_text(t0.witness));
    return d.done();
}

ExampleReport example_closed_rays() {
    Demo d("3.5", "rays (-inf,a]: T0-separating without (C2)");
    const RayNest n = full_line(CarrierKind::Qsqrt2, RayShape::closed, EndpointSet::all_carrier());
    show_ray(d, "L", n);
    const RayConditions c = ray_check_conditions(n);
    d.expect("T0-separating", true, ray_t0_separating(n));
    d.expect("(C1)", true, c.c1);
    d.expect("(C2)", false, c.c2);
    d.expect("(C3)", false, c.c3);
    return d.done();
}

ExampleReport example_rationals_real_cuts() {
    Demo d("3.6", "X = Q, L = {(-inf,r) n Q : r real}: T0-separating without (C1)");
    const RayNest n = full_line(CarrierKind::Q, RayShape::open,
                                EndpointSet::dense_interval(std::nullopt, false, std::nullopt, false, true));
    show_ray(d, "L", n);
    d.expect("T0-separating", true, ray_t0_separating(n));
    d.expect("generated order = usual order on Q", true, ray_generated_order_is_carrier_order(n).separating);
    d.expect("√2 is an endpoint", true, is_endpoint(n, FieldElement::sqrt2()));
    d.expect("√2 lies in X", false, n.carrier.contains(FieldElement::sqrt2()));
    d.expect("(C1)", false, ray_check_conditions(n).c1);
    const RayNest single = full_line(CarrierKind::Q, RayShape::open, EndpointSet::finite_list({FieldElement::sqrt2()}));
    show_ray(d, "L_√2 alone", single);
    d.expect("(C1) of {L_√2}", false, ray_check_conditions(single).c1);
    return d.done();
}

ExampleReport example_natural_rays() {
    Demo d("3.9", "L = {(-inf,n)}, R = {(n,inf)}, n in N: (C2) and (C2)* without T0");
    const RayNest n = full_line(CarrierKind::Qsqrt2, RayShape::open,
                                EndpointSet::arithmetic_progression(FieldElement(0), FieldElement(1)));
    const RayDualPair pair = ray_dual_pair(n);
    show_ray(d, "L", pair.left);
    show_ray(d, "R", pair.right);
    const RayT0 t0l = ray_t0(pair.left);
    const RayT0 t0r = ray_t0(pair.right);
    d.expect("(C2)", true, pair.left_conditions.c2);
    d.expect("(C2)*", true, pair.right_conditions.c2);
    d.expect("L T0-separating", false, t0l.separating);
    d.expect("R T0-separating", false, t0r.separating);
    d.show("unseparated pair", witness_text(t0l.witness));
    bool unsplit = t0l.witness.has_value();
    if (t0l.witness) {
        const auto& [x, y] = *t0l.witness;
        unsplit = !ray_related(pair.left, x, y) && !ray_related(pair.left, y, x);
    }
    d.expect("no ray splits the pair", true, unsplit);
    return d.done();
}

ExampleReport example_additive_group() {
    Demo d("5.1", "(R,+) with L = {(-inf,a)}: compatible");
    const RayNest n = full_line(CarrierKind::Qsqrt2, RayShape::open, EndpointSet::all_carrier());
    show_ray(d, "L", n);
    const RayGroupCompat g = ray_group_compat(GroupOp::add, n);
    d.expect("T0-separating", true, ray_t0_separating(n));
    d.expect("translates are members", true, g.premise);
    d.expect("compatible with +", true, g.compatible);
    return d.done();
}

ExampleReport example_multiplicative_group() {
    Demo d("5.2", "(R - {0}, x) with L = {(-inf,a)}: not compatible");
    const RayNest n = full_line(CarrierKind::Qsqrt2, RayShape::open, EndpointSet::all_carrier());
    show_ray(d, "L", n);
    const RayGroupCompat g = ray_group_compat(GroupOp::multiply, n);
    std::string witness = "none";
    bool negative = false;
    if (g.witness) {
        const auto& [a, b, m] = *g.witness;
        witness = "a = " + to_string(a) + ", b = " + to_string(b) + ", multiplier " + to_string(m);
        negative = m < FieldElement(0);
        d.show("witness", witness + ": a < b but not a*g < b*g");
    }
    d.expect("dilates are members", false, g.premise);
    d.expect("compatible with x", false, g.compatible);
    d.expect("witness multiplier is negative", true, negative);
    return d.done();
}

using Builder = ExampleReport (*)();

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> r = {
        {"2.2", example_real_line_order},      {"3.1", example_closed_half_interval},
        {"3.2", example_open_half_interval},   {"3.4", example_two_point_t0},
        {"3.5", example_closed_rays},          {"3.6", example_rationals_real_cuts},
        {"3.7", example_two_point_pair},       {"3.8", example_four_point_pair},
        {"3.9", example_natural_rays},         {"5.1", example_additive_group},
        {"5.2", example_multiplicative_group},
    };
    return r;
}

}  // namespace

bool ExampleReport::passed() const {
    for (const ExampleCheck& c : checks) {
        if (!c.pass()) return false;
    }
    return true;
}

namespace {

// Terminal columns of a UTF-8 string, one per code point.
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
        return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
    }));
}

}  // namespace

std::string ExampleReport::to_text() const {
    std::ostringstream out;
    out << "Example " << id << ": " << title << "\n";
    std::size_t width = 0;
    for (const auto& [name, value] : objects) width = std::max(width, display_width(name));
    for (const ExampleCheck& c : checks) width = std::max(width, display_width(c.label));
    for (const auto& [name, value] : objects)
        out << "  " << name << std::string(width - display_width(name), ' ') << "  " << value << "\n";
    for (const ExampleCheck& c : checks) {
        out << "  " << c.label << std::string(width - display_width(c.label), ' ') << "  " << c.actual << "  ["
            << (c.pass() ? "PASS" : "FAIL");
        if (!c.pass()) out << ", expected " << c.expected;
        out << "]\n";
    }
    out << "  " << (passed() ? "all checks pass" : "some checks FAIL") << "\n";
    return out.str();
}

json ExampleReport::to_json() const {
    json objs = json::array();
    for (const auto& [name, value] : objects) objs.push_back({{"name", name}, {"value", value}});
    json cs = json::array();
    for (const ExampleCheck& c : checks)
        cs.push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass()}});
    return {{"id", id}, {"title", title}, {"objects", objs}, {"checks", cs}, {"pass", passed()}};
}

const std::vector<std::string>& example_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, builder] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

ExampleReport run_example(const std::string& id) {
    std::string key = id;
    if (key == "2.x") key = "2.2";
    if (key == "3.3") key = "3.4";
    const auto it = registry().find(key);
    if (it == registry().end()) throw Unsupported("unknown example '" + id + "'");
    ExampleReport r = it->second();
    if (key != id) r.id = id;
    return r;
}

}  // namespace nests::harness
