#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lbcolor {

// Internally every index is 0-based: vertices, edges, parts and colors.
// Files and the CLI use 1-based parts and colors; the codec converts.

using Weight = std::int64_t;

enum class Mode { vertex, edge };

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An instance (or document) breaks a structural invariant. `path` names the
/// offending field, e.g. "bounds[1]" or "allowed[3][0]".
class InstanceError : public Error {
public:
    InstanceError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// A coloring does not even have the shape of an assignment for the instance.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A solver was called on an instance outside its precondition.
class UsageError : public Error {
public:
    using Error::Error;
};

/// The exhaustive oracle refuses instances above its enumeration cap.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

using Edge = std::pair<int, int>;

/// Supplied tree decomposition, as found in instance documents.
struct DecompositionSpec {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;
    int root = 0;

    bool operator==(const DecompositionSpec&) const = default;
};

struct Instance {
    Mode mode = Mode::vertex;
    int n = 0;
    std::vector<Edge> edges;
    int k = 0;
    int p = 0;
    std::vector<int> part_of;                 // element -> part
    std::vector<Weight> weight;               // element -> positive weight
    std::vector<std::vector<Weight>> bounds;  // p x k
    std::vector<std::vector<int>> allowed;    // element -> sorted colors
    std::optional<std::vector<std::vector<Weight>>> profit;  // element x k
    std::optional<DecompositionSpec> decomposition;

    int element_count() const {
        return mode == Mode::vertex ? n : static_cast<int>(edges.size());
    }
    bool allows(int element, int color) const;
    Weight profit_of(int element, int color) const {
        return profit ? (*profit)[element][color] : 0;
    }

    bool operator==(const Instance&) const = default;
};

/// Throws InstanceError naming the first violated invariant.
void validate_instance(const Instance& inst);

struct Coloring {
    std::vector<int> color_of;

    bool operator==(const Coloring&) const = default;
};

enum class Status { feasible, infeasible };

struct SolveOutcome {
    Status status = Status::infeasible;
    std::optional<Coloring> witness;
    std::optional<Weight> objective;

    bool feasible() const { return status == Status::feasible; }
    static SolveOutcome infeasible() { return {}; }
    bool operator==(const SolveOutcome&) const = default;
};

enum class Objective { decide, maximize, minimize };

enum class Violation { none, properness, list, bounds };

struct ValidityReport {
    bool ok = true;
    Violation kind = Violation::none;
    std::string message;
};

/// Checks properness, list membership and exact bounds, in that order, and
/// reports the first violation. Throws StructuralError when the coloring does
/// not cover exactly the instance's elements with colors in range.
ValidityReport validate_coloring(const Instance& inst, const Coloring& col);

/// Sum of profits of the coloring (0 when the instance has no profit matrix).
Weight coloring_profit(const Instance& inst, const Coloring& col);

/// Per-part, per-color weight totals of a coloring, p x k.
std::vector<std::vector<Weight>> weight_tally(const Instance& inst, const Coloring& col);

/// Adjacency lists of the instance graph (always the vertex graph).
std::vector<std::vector<int>> adjacency(const Instance& inst);

/// Adjacency matrix of the instance graph.
std::vector<std::vector<char>> adjacency_matrix(const Instance& inst);

/// Returns a copy with the profit matrix negated, so that maximization on the
/// copy minimizes on the original.
Instance negate_profit(const Instance& inst);

const char* to_string(Violation v);
const char* to_string(Status s);

}  // namespace lbcolor
