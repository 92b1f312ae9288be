#include "nests/relation.hpp"

#include "nests/errors.hpp"

namespace nests {

Relation::Relation(Universe u) : universe_(std::move(u)), rows_(static_cast<std::size_t>(universe_.size()), 0) {}

Relation Relation::identity(const Universe& u) {
    Relation r(u);
    for (int x = 0; x < u.size(); ++x) r.set(x, x);
    return r;
}

Relation Relation::from_pairs(const Universe& u, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(u);
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= u.size() || y >= u.size()) throw InvalidInstance("relation pair index out of range");
        r.set(x, y);
    }
    return r;
}

Subset Relation::predecessors(int x) const {
    Subset out;
    for (int y = 0; y < size(); ++y) {
        if (holds(y, x)) out.bits |= std::uint64_t{1} << y;
    }
    return out;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x) {
        for (int y : successors(x).elements()) out.emplace_back(x, y);
    }
    return out;
}

std::size_t Relation::pair_count() const {
    std::size_t n = 0;
    for (auto row : rows_) n += static_cast<std::size_t>(std::popcount(row));
    return n;
}

bool Relation::subset_of(const Relation& other) const {
    require_same_universe(universe_, other.universe_, "Relation::subset_of");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if ((rows_[i] & ~other.rows_[i]) != 0) return false;
    }
    return true;
}

Relation Relation::operator|(const Relation& other) const {
    require_same_universe(universe_, other.universe_, "Relation union");
    Relation out = *this;
    for (std::size_t i = 0; i < rows_.size(); ++i) out.rows_[i] |= other.rows_[i];
    return out;
}

Relation generated_order(const SetFamily& f) {
    const Universe& u = f.universe();
    Relation r(u);
    for (int x = 0; x < u.size(); ++x) {
        for (int y = 0; y < u.size(); ++y) {
            for (Subset s : f) {
                if (s.contains(x) && !s.contains(y)) {
                    r.set(x, y);
                    break;
                }
            }
        }
    }
    return r;
}

Relation rectangle(const Universe& u, Subset s) {
    Relation r(u);
    const Subset outside = s.complement(u);
    for (int x : s.elements()) {
        for (int y : outside.elements()) r.set(x, y);
    }
    return r;
}

Relation generated_order_product_form(const SetFamily& f) {
    Relation r(f.universe());
    for (Subset s : f) r = r | rectangle(f.universe(), s);
    return r;
}

Relation compose(const Relation& a, const Relation& b) {
    require_same_universe(a.universe(), b.universe(), "compose");
    Relation out(a.universe());
    for (int x = 0; x < a.size(); ++x) {
        for (int z : b.successors(x).elements()) {
            for (int y : a.successors(z).elements()) out.set(x, y);
        }
    }
    return out;
}

bool composition_condition(const SetFamily& f) {
    const Universe& u = f.universe();
    std::vector<Relation> rects;
    rects.reserve(f.size());
    for (Subset s : f) rects.push_back(rectangle(u, s));
    for (const Relation& rs : rects) {
        for (const Relation& rt : rects) {
            const Relation composed = compose(rs, rt);
            bool covered = false;
            for (const Relation& rr : rects) {
                if (composed.subset_of(rr)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

bool is_transitive(const Relation& r, Transitivity mode) {
    const int n = r.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!r.holds(x, y)) continue;
            for (int z = 0; z < n; ++z) {
                if (!r.holds(y, z)) continue;
                if (mode == Transitivity::distinct_triples && (x == y || y == z || x == z)) continue;
                if (!r.holds(x, z)) return false;
            }
        }
    }
    return true;
}

namespace {

// true iff some member contains x and not y
bool split(const SetFamily& f, int x, int y) {
    for (Subset s : f) {
        if (s.contains(x) && !s.contains(y)) return true;
    }
    return false;
}

}  // namespace

bool t0_separates(const SetFamily& f) {
    const int n = f.universe().size();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (!split(f, x, y) && !split(f, y, x)) return false;
        }
    }
    return true;
}

bool t1_separates(const SetFamily& f) {
    const int n = f.universe().size();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (!split(f, x, y) || !split(f, y, x)) return false;
        }
    }
    return true;
}

bool t0_product_characterization(const SetFamily& f) {
    const Universe& u = f.universe();
    Relation cover(u);
    for (Subset s : f) {
        cover = cover | rectangle(u, s) | rectangle(u, s.complement(u));
    }
    Relation off_diagonal(u);
    for (int x = 0; x < u.size(); ++x) {
        for (int y = 0; y < u.size(); ++y) {
            if (x != y) off_diagonal.set(x, y);
        }
    }
    return off_diagonal.subset_of(cover);
}

StarUnion star_union(const SetFamily& f1, const SetFamily& f2) {
    require_same_universe(f1.universe(), f2.universe(), "star_union");
    std::vector<Subset> unions;
    unions.reserve(f1.size() * f2.size());
    for (Subset a : f1) {
        for (Subset b : f2) unions.push_back(a | b);
    }
    const bool ok = f1.contains(Subset{}) && f2.contains(Subset{});
    return {SetFamily::deduplicated(f1.universe(), std::move(unions)), ok};
}

bool orders_equivalent(const SetFamily& f1, const SetFamily& f2) {
    require_same_universe(f1.universe(), f2.universe(), "orders_equivalent");
    return generated_order(f1) == generated_order(f2);
}

Relation reflexive_closure(const Relation& r) { return r | Relation::identity(r.universe()); }

Relation transpose(const Relation& r) {
    Relation out(r.universe());
    for (auto [x, y] : r.pairs()) out.set(y, x);
    return out;
}

bool is_reflexive(const Relation& r) {
    for (int x = 0; x < r.size(); ++x) {
        if (!r.holds(x, x)) return false;
    }
    return true;
}

bool is_irreflexive(const Relation& r) {
    for (int x = 0; x < r.size(); ++x) {
        if (r.holds(x, x)) return false;
    }
    return true;
}

bool is_antisymmetric(const Relation& r) {
    for (auto [x, y] : r.pairs()) {
        if (x != y && r.holds(y, x)) return false;
    }
    return true;
}

bool is_asymmetric(const Relation& r) {
    for (auto [x, y] : r.pairs()) {
        if (r.holds(y, x)) return false;
    }
    return true;
}

bool is_total(const Relation& r) {
    for (int x = 0; x < r.size(); ++x) {
        for (int y = x + 1; y < r.size(); ++y) {
            if (!r.holds(x, y) && !r.holds(y, x)) return false;
        }
    }
    return true;
}

bool is_linear_order(const Relation& r) {
    const Relation le = reflexive_closure(r);
    return is_reflexive(le) && is_antisymmetric(le) && is_transitive(le) && is_total(le);
}

Nest lower_ray_nest(const Universe& u, const std::vector<int>& rank) {
    if (static_cast<int>(rank.size()) != u.size()) throw InvalidInstance("rank vector does not match universe");
    std::vector<Subset> rays;
    for (int a = 0; a < u.size(); ++a) {
        Subset ray;
        for (int x = 0; x < u.size(); ++x) {
            if (rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(a)]) ray.bits |= std::uint64_t{1} << x;
        }
        rays.push_back(ray);
    }
    return Nest(SetFamily::deduplicated(u, std::move(rays)));
}

}  // namespace nests
