#include "nests/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nests/errors.hpp"

namespace nests {

namespace {

// Runs f, turning JSON access errors into InvalidInstance.
template <class F>
auto guarded(const char* what, F f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidInstance(std::string(what) + ": " + e.what());
    }
}

Universe universe_from_json(const json& j) {
    const int n = j.at("universe").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) labels = j.at("labels").get<std::vector<std::string>>();
    return Universe(n, std::move(labels));
}

void put_universe(json& j, const Universe& u) {
    j["universe"] = u.size();
    if (u.has_labels()) j["labels"] = u.labels();
}

std::vector<Subset> members_from_json(const json& arr, const Universe& u) {
    std::vector<Subset> out;
    for (const json& m : arr) out.push_back(subset_from_json(m, u));
    return out;
}

json family_array(const SetFamily& f) {
    json arr = json::array();
    for (Subset s : f) arr.push_back(subset_to_json(s));
    return arr;
}

std::optional<FieldElement> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return field_from_json(j.at(key));
}

json optional_to_json(const std::optional<FieldElement>& x) { return x ? to_json(*x) : json(nullptr); }

}  // namespace

std::string to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::family: return "family";
        case InstanceKind::nest: return "nest";
        case InstanceKind::topology: return "topology";
    }
    return "family";
}

json subset_to_json(Subset s) { return s.elements(); }

Subset subset_from_json(const json& j, const Universe& u) {
    Subset s;
    for (const json& e : j) {
        const int i = e.get<int>();
        if (i < 0 || i >= u.size()) throw InvalidInstance("element index " + std::to_string(i) + " out of range");
        if (s.contains(i)) throw InvalidInstance("subset lists element " + std::to_string(i) + " twice");
        s.bits |= std::uint64_t{1} << i;
    }
    return s;
}

json to_json(const SetFamily& f, InstanceKind kind) {
    json j;
    put_universe(j, f.universe());
    j["family"] = family_array(f);
    j["kind"] = to_string(kind);
    return j;
}

json to_json(const Nest& n) { return to_json(n.family(), InstanceKind::nest); }

json to_json(const Topology& t) { return to_json(t.opens(), InstanceKind::topology); }

json to_json(const Instance& inst) {
    json j = to_json(inst.family, inst.kind);
    if (inst.dual) j["dual"] = family_array(*inst.dual);
    return j;
}

Instance instance_from_json(const json& j) {
    return guarded("instance", [&] {
        const Universe u = universe_from_json(j);
        Instance inst;
        const std::string kind = j.value("kind", std::string("family"));
        if (kind == "family") {
            inst.kind = InstanceKind::family;
        } else if (kind == "nest") {
            inst.kind = InstanceKind::nest;
        } else if (kind == "topology") {
            inst.kind = InstanceKind::topology;
        } else {
            throw InvalidInstance("unknown instance kind '" + kind + "'");
        }
        inst.family = SetFamily(u, members_from_json(j.at("family"), u));
        if (inst.kind == InstanceKind::nest && !is_nest(inst.family))
            throw InvalidInstance("instance of kind nest is not totally ordered by inclusion");
        if (inst.kind == InstanceKind::topology) Topology::from_opens(inst.family);
        if (j.contains("dual") && !j.at("dual").is_null()) {
            inst.dual = SetFamily(u, members_from_json(j.at("dual"), u));
            if (!is_nest(*inst.dual)) throw InvalidInstance("dual partner is not a nest");
        }
        return inst;
    });
}

json to_json(const Relation& r) {
    json pairs = json::array();
    for (auto [x, y] : r.pairs()) pairs.push_back({x, y});
    return {{"universe", r.size()}, {"pairs", pairs}};
}

Relation relation_from_json(const json& j) {
    return guarded("relation", [&] {
        const Universe u = universe_from_json(j);
        std::vector<std::pair<int, int>> pairs;
        for (const json& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        return Relation::from_pairs(u, pairs);
    });
}

json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const json& j) {
    return guarded("group", [&] {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
            throw InvalidInstance("group order does not match the table size");
        return FiniteGroup::from_table(std::move(table), j.value("name", std::string("custom")));
    });
}

json to_json(const Rational& q) {
    auto part = [](const boost::multiprecision::cpp_int& v) -> json {
        if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
            return v.convert_to<std::int64_t>();
        return v.str();
    };
    return json::array({part(numerator(q)), part(denominator(q))});
}

Rational rational_from_json(const json& j) {
    return guarded("rational", [&] {
        auto part = [](const json& v) {
            if (v.is_string()) return boost::multiprecision::cpp_int(v.get<std::string>());
            return boost::multiprecision::cpp_int(v.get<std::int64_t>());
        };
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (!j.is_array() || j.size() != 2) throw InvalidInstance("rational must be [num, den]");
        const auto den = part(j.at(1));
        if (den == 0) throw InvalidInstance("rational with zero denominator");
        return Rational(part(j.at(0)), den);
    });
}

json to_json(const FieldElement& x) { return {{"a", to_json(x.a())}, {"b", to_json(x.b())}}; }

FieldElement field_from_json(const json& j) {
    return guarded("field element", [&] {
        const Rational a = rational_from_json(j.at("a"));
        const Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
        return FieldElement(a, b);
    });
}

json to_json(const RayNest& n) {
    json j;
    j["carrier"] = to_string(n.carrier.kind);
    if (n.carrier.window.full_line()) {
        j["window"] = nullptr;
    } else {
        j["window"] = {{"lo", optional_to_json(n.carrier.window.lo)}, {"hi", optional_to_json(n.carrier.window.hi)}};
    }
    j["shape"] = to_string(n.shape);
    j["orientation"] = to_string(n.orientation);
    const EndpointSet& e = n.endpoints;
    json ep = {{"kind", to_string(e.kind)}};
    switch (e.kind) {
        case EndpointSet::Kind::all_carrier:
            break;
        case EndpointSet::Kind::dense_interval:
            ep["lo"] = optional_to_json(e.lo);
            ep["hi"] = optional_to_json(e.hi);
            ep["lo_closed"] = e.lo_closed;
            ep["hi_closed"] = e.hi_closed;
            ep["over"] = e.over_qsqrt2 ? "Qsqrt2" : "carrier";
            break;
        case EndpointSet::Kind::arithmetic_progression:
            ep["start"] = to_json(e.start);
            ep["step"] = to_json(e.step);
            break;
        case EndpointSet::Kind::finite_list: {
            json values = json::array();
            for (const FieldElement& v : e.values) values.push_back(to_json(v));
            ep["values"] = values;
            break;
        }
    }
    j["endpoints"] = ep;
    return j;
}

RayNest ray_nest_from_json(const json& j) {
    return guarded("ray nest", [&] {
        RayNest n;
        const std::string carrier = j.at("carrier").get<std::string>();
        if (carrier == "Q") {
            n.carrier.kind = CarrierKind::Q;
        } else if (carrier == "Qsqrt2") {
            n.carrier.kind = CarrierKind::Qsqrt2;
        } else {
            throw InvalidInstance("carrier must be \"Q\" or \"Qsqrt2\"");
        }
        if (j.contains("window") && !j.at("window").is_null()) {
            n.carrier.window.lo = optional_field(j.at("window"), "lo");
            n.carrier.window.hi = optional_field(j.at("window"), "hi");
        }
        const std::string shape = j.at("shape").get<std::string>();
        if (shape != "open" && shape != "closed") throw InvalidInstance("shape must be \"open\" or \"closed\"");
        n.shape = shape == "open" ? RayShape::open : RayShape::closed;
        const std::string orientation = j.value("orientation", std::string("lower"));
        if (orientation != "lower" && orientation != "upper")
            throw InvalidInstance("orientation must be \"lower\" or \"upper\"");
        n.orientation = orientation == "lower" ? Orientation::lower : Orientation::upper;

        const json& ep = j.at("endpoints");
        const std::string kind = ep.at("kind").get<std::string>();
        if (kind == "all_carrier") {
            n.endpoints = EndpointSet::all_carrier();
        } else if (kind == "dense_interval") {
            const std::string over = ep.value("over", std::string("carrier"));
            if (over != "carrier" && over != "Qsqrt2") throw InvalidInstance("over must be \"carrier\" or \"Qsqrt2\"");
            n.endpoints = EndpointSet::dense_interval(optional_field(ep, "lo"), ep.value("lo_closed", true),
                                                      optional_field(ep, "hi"), ep.value("hi_closed", true),
                                                      over == "Qsqrt2");
        } else if (kind == "arithmetic_progression") {
            n.endpoints = EndpointSet::arithmetic_progression(field_from_json(ep.at("start")),
                                                              field_from_json(ep.at("step")));
        } else if (kind == "finite_list") {
            std::vector<FieldElement> values;
            for (const json& v : ep.at("values")) values.push_back(field_from_json(v));
            n.endpoints = EndpointSet::finite_list(std::move(values));
        } else {
            throw InvalidInstance("unknown endpoint kind '" + kind + "'");
        }
        n.validate();
        return n;
    });
}

Subset parse_subset(const std::string& text, const Universe& u) {
    std::string body;
    for (char c : text) {
        if (c != '{' && c != '}') body += c;
    }
    Subset s;
    std::stringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        token = token.substr(first, token.find_last_not_of(" \t") - first + 1);
        int index = -1;
        for (int i = 0; i < u.size(); ++i) {
            if (u.label(i) == token) index = i;
        }
        if (index < 0 && std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            index = std::stoi(token);
        if (index < 0 || index >= u.size()) throw InvalidInstance("unknown element '" + token + "' in subset");
        s.bits |= std::uint64_t{1} << index;
    }
    return s;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInstance("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInstance("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace nests
