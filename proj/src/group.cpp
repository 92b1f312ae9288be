#include "nests/group.hpp"

#include <algorithm>

#include "nests/errors.hpp"
#include "nests/relation.hpp"

namespace nests {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n < 1 || n > kMaxUniverse) throw InvalidInstance("group order must lie in [1, 64]");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw InvalidInstance("Cayley table is not square");
        for (int v : row) {
            if (v < 0 || v >= n) throw InvalidInstance("Cayley table entry out of range");
        }
    }
    FiniteGroup g;
    g.name_ = std::move(name);
    g.table_ = std::move(table);

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw InvalidInstance("Cayley table is not associative at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a) ok = ok && g.op(e, a) == a && g.op(a, e) == a;
        if (ok) identity = e;
    }
    if (identity < 0) throw InvalidInstance("Cayley table has no identity");
    g.identity_ = identity;

    g.inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.op(a, b) == identity && g.op(b, a) == identity) {
                g.inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (g.inverse_[static_cast<std::size_t>(a)] < 0)
            throw InvalidInstance("element " + std::to_string(a) + " has no inverse");
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1 || n > kMaxUniverse) throw InvalidInstance("cyclic group order must lie in [1, 64]");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
    return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::klein() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    }
    return from_table(std::move(t), "Z2xZ2");
}

FiniteGroup FiniteGroup::symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
            t[a][b] = index_of(c);
        }
    }
    return from_table(std::move(t), "S3");
}

FiniteGroup FiniteGroup::dihedral4() {
    // r^k s^f * r^m s^g = r^(k + (-1)^f m) s^(f xor g)
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            const int f = x / 4;
            const int k = x % 4;
            const int g = y / 4;
            const int m = y % 4;
            const int rot = ((k + (f ? -m : m)) % 4 + 4) % 4;
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 4 * (f ^ g) + rot;
        }
    }
    return from_table(std::move(t), "D4");
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
    if (name == "Z2xZ2") return klein();
    if (name == "S3") return symmetric3();
    if (name == "D4") return dihedral4();
    if (name.size() > 1 && name[0] == 'Z' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return cyclic(std::stoi(name.substr(1)));
    }
    throw Unsupported("unknown built-in group '" + name + "' (expected Z<n>, Z2xZ2, S3 or D4)");
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a) {
        for (int b = a + 1; b < order(); ++b) {
            if (op(a, b) != op(b, a)) return false;
        }
    }
    return true;
}

Subset translate(int g, Subset s, Side side, const FiniteGroup& grp) {
    Subset out;
    for (int x : s.elements()) out.bits |= std::uint64_t{1} << (side == Side::left ? grp.op(g, x) : grp.op(x, g));
    return out;
}

Subset inverse_set(Subset s, const FiniteGroup& grp) {
    Subset out;
    for (int x : s.elements()) out.bits |= std::uint64_t{1} << grp.inverse(x);
    return out;
}

Subset product_set(Subset a, Subset b, const FiniteGroup& grp) {
    Subset out;
    for (int x : a.elements()) {
        for (int y : b.elements()) out.bits |= std::uint64_t{1} << grp.op(x, y);
    }
    return out;
}

namespace {

void require_group_universe(const FiniteGroup& grp, const SetFamily& f, const char* op) {
    require_same_universe(grp.universe(), f.universe(), op);
}

}  // namespace

Compatibility order_compatibility(const FiniteGroup& grp, const Nest& n) {
    require_group_universe(grp, n, "order_compatibility");
    const Relation lt = generated_order(n);
    Compatibility c;
    c.t0_separating = t0_separates(n);
    const int order = grp.order();
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            const bool base = lt.holds(a, b);
            for (int g = 0; g < order; ++g) {
                if (base != lt.holds(grp.op(a, g), grp.op(b, g)) || base != lt.holds(grp.op(g, a), grp.op(g, b))) {
                    c.witness = std::array<int, 3>{a, b, g};
                    return c;
                }
            }
        }
    }
    c.compatible = true;
    return c;
}

bool prop51_premise(const FiniteGroup& grp, const Nest& n) {
    require_group_universe(grp, n, "prop51_premise");
    for (int g = 0; g < grp.order(); ++g) {
        for (Subset l : n) {
            if (!n.family().contains(translate(g, l, Side::left, grp))) return false;
            if (!n.family().contains(translate(g, l, Side::right, grp))) return false;
        }
    }
    return true;
}

Topology group_topology(const SetFamily& l, const SetFamily& r) {
    require_same_universe(l.universe(), r.universe(), "group_topology");
    std::vector<Subset> both(l.begin(), l.end());
    both.insert(both.end(), r.begin(), r.end());
    return Topology::from_subbase(SetFamily::deduplicated(l.universe(), std::move(both)));
}

ContinuityCheck inversion_continuity_check(const FiniteGroup& grp, const SetFamily& l, const SetFamily& r) {
    require_group_universe(grp, l, "inversion_continuity_check");
    require_group_universe(grp, r, "inversion_continuity_check");
    ContinuityCheck c;
    c.premise = std::all_of(l.begin(), l.end(), [&](Subset s) { return r.contains(inverse_set(s, grp)); }) &&
                std::all_of(r.begin(), r.end(), [&](Subset s) { return l.contains(inverse_set(s, grp)); });
    const Topology t = group_topology(l, r);
    std::vector<int> inv(static_cast<std::size_t>(grp.order()));
    for (int x = 0; x < grp.order(); ++x) inv[static_cast<std::size_t>(x)] = grp.inverse(x);
    c.conclusion = is_continuous(inv, t, t);
    return c;
}

namespace {

// Mask over the product universe (index x * order + y) of a x b.
std::uint64_t rectangle_mask(Subset a, Subset b, int order) {
    std::uint64_t out = 0;
    for (int x : a.elements()) out |= b.bits << (x * order);
    return out;
}

bool factorization_premise(const FiniteGroup& grp, const SetFamily& f) {
    const int order = grp.order();
    const auto& members = f.sets();
    const std::size_t m = members.size();
    std::vector<Subset> products(m * m);
    std::vector<std::uint64_t> rects(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            products[i * m + j] = product_set(members[i], members[j], grp);
            rects[i * m + j] = rectangle_mask(members[i], members[j], order);
        }
    }
    for (Subset target : members) {
        // Pairs (x, y) with x*y in target must lie in some Lx x Ly with Lx*Ly inside target.
        std::uint64_t needed = 0;
        for (int x = 0; x < order; ++x) {
            for (int y = 0; y < order; ++y) {
                if (target.contains(grp.op(x, y))) needed |= std::uint64_t{1} << (x * order + y);
            }
        }
        std::uint64_t covered = 0;
        for (std::size_t k = 0; k < m * m; ++k) {
            if (products[k].subset_of(target)) covered |= rects[k];
        }
        if ((needed & ~covered) != 0) return false;
    }
    return true;
}

}  // namespace

ContinuityCheck multiplication_continuity_check(const FiniteGroup& grp, const SetFamily& l, const SetFamily& r) {
    require_group_universe(grp, l, "multiplication_continuity_check");
    require_group_universe(grp, r, "multiplication_continuity_check");
    if (grp.order() * grp.order() > kMaxUniverse)
        throw BoundExceeded("multiplication_continuity_check: order^2 exceeds 64");
    ContinuityCheck c;
    c.premise = factorization_premise(grp, l) && factorization_premise(grp, r);
    const Topology t = group_topology(l, r);
    const Topology square = product_topology(t, t);
    const int order = grp.order();
    std::vector<int> mult(static_cast<std::size_t>(order * order));
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) mult[static_cast<std::size_t>(x * order + y)] = grp.op(x, y);
    }
    c.conclusion = is_continuous(mult, square, t);
    return c;
}

}  // namespace nests
