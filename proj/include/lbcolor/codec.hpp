#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "lbcolor/instance.hpp"

namespace lbcolor {

using Json = nlohmann::ordered_json;

// Documents use 1-based parts and colors and 0-based vertex, edge, bag and
// tree-node indices. Field paths in errors are JSON paths into the document.

/// Parses and validates an instance document. Unknown top-level keys (such as
/// "metadata") are ignored. Throws InstanceError.
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);

/// Accepts {"color_of": [...]} or a solve result carrying {"witness": {...}}.
/// Throws StructuralError on a malformed document.
Coloring coloring_from_json(const Json& doc);
Json coloring_to_json(const Coloring& col);

/// {"status", "witness", "objective"}; absent values are null.
Json outcome_to_json(const SolveOutcome& out);

/// Reads a whole JSON document; InstanceError("document", ...) on a parse failure.
Json parse_json(std::istream& in);
Json parse_json_file(const std::string& path);

}  // namespace lbcolor
