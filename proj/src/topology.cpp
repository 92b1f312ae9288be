#include "nests/topology.hpp"

#include <sstream>

#include "nests/errors.hpp"

namespace nests {

Topology Topology::from_subbase(const SetFamily& subbase) {
    const Universe& u = subbase.universe();
    std::vector<Subset> nbhd(static_cast<std::size_t>(u.size()), Subset::full(u));
    for (Subset s : subbase) {
        for (int x : s.elements()) nbhd[static_cast<std::size_t>(x)] = nbhd[static_cast<std::size_t>(x)] & s;
    }
    return Topology(u, std::move(nbhd));
}

Topology Topology::from_opens(const SetFamily& opens) {
    const Universe& u = opens.universe();
    const Subset full = Subset::full(u);
    if (!opens.contains(Subset{}) || !opens.contains(full))
        throw InvalidInstance("topology must contain the empty set and the whole universe");
    for (Subset a : opens) {
        for (Subset b : opens) {
            if (!opens.contains(a | b) || !opens.contains(a & b))
                throw InvalidInstance("open family is not closed under union and intersection");
        }
    }
    return from_subbase(opens);
}

Topology Topology::discrete(const Universe& u) {
    std::vector<Subset> nbhd;
    for (int x = 0; x < u.size(); ++x) nbhd.push_back(Subset::of({x}));
    return Topology(u, std::move(nbhd));
}

Topology Topology::indiscrete(const Universe& u) {
    return Topology(u, std::vector<Subset>(static_cast<std::size_t>(u.size()), Subset::full(u)));
}

bool Topology::is_open(Subset s) const {
    for (int x : s.elements()) {
        if (!neighborhoods_[static_cast<std::size_t>(x)].subset_of(s)) return false;
    }
    return true;
}

SetFamily Topology::opens() const {
    if (universe_.size() > kMaxExplicitOpens) {
        std::ostringstream msg;
        msg << "open family of a " << universe_.size() << "-point space is not materialized (limit "
            << kMaxExplicitOpens << ")";
        throw BoundExceeded(msg.str());
    }
    std::vector<Subset> out;
    const std::uint64_t total = std::uint64_t{1} << universe_.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        if (is_open(Subset(m))) out.emplace_back(m);
    }
    return SetFamily(universe_, std::move(out));
}

std::size_t Topology::open_count() const { return opens().size(); }

bool Topology::coarser_than(const Topology& finer) const {
    require_same_universe(universe_, finer.universe_, "Topology::coarser_than");
    for (std::size_t x = 0; x < neighborhoods_.size(); ++x) {
        if (!finer.neighborhoods_[x].subset_of(neighborhoods_[x])) return false;
    }
    return true;
}

Subset up_point(int x, const Relation& reflexive) { return reflexive.successors(x); }

Subset down_point(int x, const Relation& reflexive) { return reflexive.predecessors(x); }

Subset up_set_strict(Subset a, const Relation& strict) {
    Subset out;
    for (int y : a.elements()) out = out | strict.successors(y);
    return out;
}

Subset down_set_strict(Subset a, const Relation& strict) {
    Subset out;
    for (int y : a.elements()) out = out | strict.predecessors(y);
    return out;
}

namespace {

template <class Cone>
Topology cone_complement_topology(const Relation& r, Cone cone) {
    const Universe& u = r.universe();
    std::vector<Subset> subbase;
    for (int x = 0; x < u.size(); ++x) subbase.push_back(cone(x, r).complement(u));
    return Topology::from_subbase(SetFamily::deduplicated(u, std::move(subbase)));
}

}  // namespace

Topology lower_topology(const Relation& reflexive) { return cone_complement_topology(reflexive, up_point); }

Topology upper_topology(const Relation& reflexive) { return cone_complement_topology(reflexive, down_point); }

Topology join(const Topology& a, const Topology& b) {
    require_same_universe(a.universe(), b.universe(), "join");
    std::vector<Subset> nbhd(a.neighborhoods_.size());
    for (std::size_t x = 0; x < nbhd.size(); ++x) nbhd[x] = a.neighborhoods_[x] & b.neighborhoods_[x];
    return Topology(a.universe(), std::move(nbhd));
}

Topology interval_topology(const Relation& reflexive) {
    return join(upper_topology(reflexive), lower_topology(reflexive));
}

Topology open_ray_topology(const Relation& reflexive) {
    const Universe& u = reflexive.universe();
    std::vector<Subset> rays;
    for (int a = 0; a < u.size(); ++a) {
        const Subset point = Subset::of({a});
        rays.push_back(down_point(a, reflexive) - point);
        rays.push_back(up_point(a, reflexive) - point);
    }
    return Topology::from_subbase(SetFamily::deduplicated(u, std::move(rays)));
}

SetFamily alexandroff_family(const Relation& strict) {
    const Universe& u = strict.universe();
    if (u.size() > kMaxExplicitOpens) throw BoundExceeded("alexandroff_family: universe too large");
    std::vector<Subset> out;
    const std::uint64_t total = std::uint64_t{1} << u.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        const Subset y(m);
        if (up_set_strict(y, strict) == y) out.push_back(y);
    }
    return SetFamily(u, std::move(out));
}

bool is_closed(const Topology& t, Subset a) { return t.is_open(a.complement(t.universe())); }

bool is_alexandroff_closed(const Relation& strict, Subset a) {
    const Subset rest = a.complement(strict.universe());
    return up_set_strict(rest, strict) == rest;
}

Universe product_universe(const Universe& a, const Universe& b) {
    const int n = a.size() * b.size();
    if (n > kMaxUniverse) throw BoundExceeded("product universe exceeds 64 points");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    }
    return Universe(n, std::move(labels));
}

Topology product_topology(const Topology& a, const Topology& b) {
    Universe u = product_universe(a.universe(), b.universe());
    const int nb = b.universe().size();
    std::vector<Subset> nbhd;
    nbhd.reserve(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < a.universe().size(); ++i) {
        for (int j = 0; j < nb; ++j) {
            Subset box;
            for (int p : a.neighborhoods_[static_cast<std::size_t>(i)].elements()) {
                for (int q : b.neighborhoods_[static_cast<std::size_t>(j)].elements())
                    box.bits |= std::uint64_t{1} << (p * nb + q);
            }
            nbhd.push_back(box);
        }
    }
    return Topology(std::move(u), std::move(nbhd));
}

bool is_continuous(const std::vector<int>& map, const Topology& domain, const Topology& codomain) {
    if (static_cast<int>(map.size()) != domain.universe().size())
        throw NonTotalMap("map is not defined on every domain point");
    for (int image : map) {
        if (image < 0 || image >= codomain.universe().size()) throw NonTotalMap("map leaves the codomain");
    }
    // f is continuous iff f(N(x)) lies inside N(f(x)) for every point x.
    for (int x = 0; x < domain.universe().size(); ++x) {
        const Subset target = codomain.neighborhoods()[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])];
        for (int y : domain.neighborhoods()[static_cast<std::size_t>(x)].elements()) {
            if (!target.contains(map[static_cast<std::size_t>(y)])) return false;
        }
    }
    return true;
}

}  // namespace nests
