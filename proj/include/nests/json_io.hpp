#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nests/finite_core.hpp"
#include "nests/group.hpp"
#include "nests/ray_nests.hpp"
#include "nests/relation.hpp"
#include "nests/topology.hpp"

namespace nests {

using json = nlohmann::json;

enum class InstanceKind { family, nest, topology };

std::string to_string(InstanceKind k);

/// A finite instance as read from or written to disk.
struct Instance {
    InstanceKind kind = InstanceKind::family;
    SetFamily family{Universe(1)};
    /// Optional dual partner of a nest (the "dual" field).
    std::optional<SetFamily> dual;
};

/// {"universe": n, "labels": [...]?, "family": [[indices], ...], "kind": ...}.
json to_json(const SetFamily& f, InstanceKind kind = InstanceKind::family);
json to_json(const Nest& n);
json to_json(const Topology& t);
json to_json(const Instance& inst);

/// Validates every invariant: ranges, duplicates, nest-ness, topology axioms.
Instance instance_from_json(const json& j);

json to_json(const Relation& r);
Relation relation_from_json(const json& j);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const FieldElement& x);
FieldElement field_from_json(const json& j);

json to_json(const RayNest& n);
RayNest ray_nest_from_json(const json& j);

/// Sorted element indices.
json subset_to_json(Subset s);
Subset subset_from_json(const json& j, const Universe& u);

/// Parses "{x1, x3}", "x1,x3" or "0,2": labels first, then 0-based indices.
Subset parse_subset(const std::string& text, const Universe& u);

/// Reads and parses a JSON file; throws InvalidInstance on I/O or syntax errors.
json load_json_file(const std::string& path);

}  // namespace nests
