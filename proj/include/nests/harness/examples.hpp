#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nests/json_io.hpp"

namespace nests::harness {

struct ExampleCheck {
    std::string label;
    std::string expected;
    std::string actual;

    bool pass() const { return expected == actual; }
};

/// A replayed example: every computed object in roster notation plus the
/// comparisons against the stated values.
struct ExampleReport {
    std::string id;
    std::string title;
    std::vector<std::pair<std::string, std::string>> objects;
    std::vector<ExampleCheck> checks;

    bool passed() const;
    std::string to_text() const;
    json to_json() const;
};

/// Registered example ids in display order (aliases excluded).
const std::vector<std::string>& example_ids();

/// Replays one example. Accepts the aliases "2.x" and "3.3"; throws
/// Unsupported for an unknown id.
ExampleReport run_example(const std::string& id);

}  // namespace nests::harness
