#include "nests/roster.hpp"

namespace nests {

std::string roster(Subset s, const Universe& u) {
    if (s.empty()) return "∅";
    std::string out = "{";
    bool first = true;
    for (int x : s.elements()) {
        if (!first) out += ",";
        out += u.label(x);
        first = false;
    }
    return out + "}";
}

std::string roster(const SetFamily& f) {
    std::string out = "{";
    bool first = true;
    for (Subset s : f) {
        if (!first) out += ", ";
        out += roster(s, f.universe());
        first = false;
    }
    return out + "}";
}

std::string roster(const Topology& t) { return roster(t.opens()); }

std::string roster(const Relation& r) {
    std::string out = "{";
    bool first = true;
    for (auto [x, y] : r.pairs()) {
        if (!first) out += ", ";
        out += "(" + r.universe().label(x) + "," + r.universe().label(y) + ")";
        first = false;
    }
    return out + "}";
}

}  // namespace nests
