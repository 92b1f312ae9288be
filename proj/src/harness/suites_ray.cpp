// Ray-nest suite: decision-table invariants over generated symbolic ray nests.

#include "nests/harness/generators.hpp"
#include "nests/ray_nests.hpp"
#include "suite_common.hpp"

namespace nests::harness::detail {

namespace {

bool has_irrational_part(const RayNest& n) {
    auto irr = [](const std::optional<FieldElement>& x) { return x && !x->is_rational(); };
    const EndpointSet& e = n.endpoints;
    bool out = irr(n.carrier.window.lo) || irr(n.carrier.window.hi) || irr(e.lo) || irr(e.hi) || e.over_qsqrt2;
    if (e.kind == EndpointSet::Kind::arithmetic_progression) out |= !e.start.is_rational() || !e.step.is_rational();
    for (const FieldElement& v : e.values) out |= !v.is_rational();
    return out;
}

// Carrier points of the window: an even grid between finite bounds plus random draws.
std::vector<FieldElement> sample_points(Rng& rng, const RayNest& n) {
    std::vector<FieldElement> pts;
    const Window& w = n.carrier.window;
    if (w.lo && w.hi) {
        for (int k = 1; k < 8; ++k) pts.push_back(*w.lo + (*w.hi - *w.lo) * FieldElement(Rational(k, 8)));
    } else if (w.lo) {
        for (int k = 1; k < 6; ++k) pts.push_back(*w.lo + FieldElement(Rational(k, 2)));
    } else if (w.hi) {
        for (int k = 1; k < 6; ++k) pts.push_back(*w.hi - FieldElement(Rational(k, 2)));
    }
    for (int k = 0; k < 12; ++k) pts.push_back(random_field_element(rng, n.carrier.kind == CarrierKind::Qsqrt2));
    std::vector<FieldElement> inside;
    for (FieldElement& p : pts) {
        if (n.carrier.contains(p)) inside.push_back(std::move(p));
    }
    return inside;
}

// x < y by brute force over an explicit endpoint list.
bool listed_related(const RayNest& n, const FieldElement& x, const FieldElement& y) {
    for (const FieldElement& v : n.endpoints.values) {
        if (ray_contains(x, v, n.shape, n.orientation) && !ray_contains(y, v, n.shape, n.orientation)) return true;
    }
    return false;
}

bool same(const RayConditions& a, const RayConditions& b) { return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3; }

}  // namespace

SuiteReport run_ray_nests(const SuiteConfig& cfg) {
    SuiteReport report = start_report("ray-nests", cfg);
    report.absorb(sweep(cfg.iters, cfg.mode, [&](std::uint64_t i, Collector& c) {
        Rng rng = instance_rng(cfg.seed, i);
        const RayNest n = random_ray_nest(rng);
        c.count_instance();
        const json j = to_json(n);
        auto inst = [&] { return j; };

        const RayConditions cond = ray_check_conditions(n);
        const RayT0 t0 = ray_t0(n);
        c.check("prop3.1-c3-implies-c2", cond.c3, cond.c2, inst);
        c.check("prop3.1-c2-implies-c1", cond.c2, cond.c1, inst);
        c.check("prop3.3-c3-implies-t0", cond.c3, t0.separating, inst);
        c.expect("json-roundtrip", to_json(ray_nest_from_json(j)) == j, inst);

        const RayDualPair pair = ray_dual_pair(n);
        c.expect("dual-involution", to_json(ray_dual(pair.right)) == j, inst);
        c.expect("dual-mirror-classification",
                 same(pair.left_conditions, pair.right_conditions) && ray_t0(pair.right).separating == t0.separating,
                 inst);

        bool witness_ok = t0.witness.has_value();
        if (t0.witness) {
            const auto& [x, y] = *t0.witness;
            witness_ok = n.carrier.contains(x) && n.carrier.contains(y) && x < y && !ray_related(n, x, y) &&
                         !ray_related(n, y, x);
        }
        c.check("t0-witness-unseparated", !t0.separating, witness_ok, inst);

        const std::vector<FieldElement> pts = sample_points(rng, n);
        const bool listed = n.endpoints.kind == EndpointSet::Kind::finite_list;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = 0; b < pts.size(); ++b) {
                const FieldElement& x = pts[a];
                const FieldElement& y = pts[b];
                const bool related = ray_related(n, x, y);
                c.check("order-within-carrier-order", related, x < y, inst,
                        to_string(x) + " before " + to_string(y));
                c.check("t0-dense-pairs", t0.separating && x < y, related, inst,
                        to_string(x) + " before " + to_string(y));
                c.check("order-oracle-finite-list", listed, related == listed_related(n, x, y), inst,
                        to_string(x) + " vs " + to_string(y));
            }
        }
        if (listed) {
            bool all_inside = true;
            for (const FieldElement& v : n.endpoints.values) all_inside &= n.carrier.contains(v);
            c.expect("c1-oracle-finite-list", cond.c1 == all_inside, inst);
            c.expect("c3-impossible-finite-list", !cond.c3, inst);
        }

        if (!has_irrational_part(n)) {
            RayNest other = n;
            other.carrier.kind = n.carrier.kind == CarrierKind::Q ? CarrierKind::Qsqrt2 : CarrierKind::Q;
            c.expect("carrier-consistency",
                     same(cond, ray_check_conditions(other)) && ray_t0(other).separating == t0.separating, inst);
        }

        if (n.carrier.window.full_line()) {
            const RayGroupCompat add = ray_group_compat(GroupOp::add, n);
            c.check("prop5.1-ray-add", add.premise, add.compatible, inst);
            const RayGroupCompat mul = ray_group_compat(GroupOp::multiply, n);
            c.check("prop5.1-ray-multiply", mul.premise, mul.compatible, inst);
        }
    }));
    report.notes.push_back("the finite suites cannot exhibit T0 without (C1); the rationals cut at real "
                           "endpoints do, and the nonempty (C2)/(C3) cases live here as well");
    return report;
}

}  // namespace nests::harness::detail
