#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lbcolor/codec.hpp"
#include "lbcolor/instance.hpp"

namespace lbcolor {

// Source problems. Variables, elements and triples are 0-based here and
// 1-based in source documents. docs/layout.md describes how each construction
// numbers its vertices, edges, parts and colors.

/// a_1..a_n with sum 2B.
struct PartitionSource {
    std::vector<Weight> a;
    Weight B = 0;
};

/// a_1..a_3n with sum nB and B/4 < a_i < B/2.
struct ThreePartitionSource {
    std::vector<Weight> a;
    Weight B = 0;

    int groups() const { return static_cast<int>(a.size()) / 3; }
};

/// Monotone clauses of three distinct variables each.
struct OneInThreeSatSource {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;

    /// occurrences()[i] = number of clauses containing variable i.
    std::vector<int> occurrences() const;
};

/// |X| = |Y| = |Z| = q; triples (x, y, z).
struct ThreeDimMatchingSource {
    int q = 0;
    std::vector<std::array<int, 3>> triples;
};

using SourceProblem = std::variant<PartitionSource, ThreePartitionSource, OneInThreeSatSource, ThreeDimMatchingSource>;

/// Throw InstanceError naming the source field that breaks a side condition.
void validate_source(const PartitionSource& src);
void validate_source(const ThreePartitionSource& src);
void validate_source(const OneInThreeSatSource& src);
void validate_source(const ThreeDimMatchingSource& src);
void validate_source(const SourceProblem& src);

enum class PartitionVariant { vertex, edge };
enum class ThreePartitionVariant { isolated, star_forest };
enum class SatVariant { star_forest, complete_bipartite, cycles_edges };

/// Isolated vertices (or disjoint edges), k = 2, p = 1, W = (B, B).
Instance gen_from_partition(const PartitionSource& src, PartitionVariant variant = PartitionVariant::vertex);

/// isolated: 3n weighted vertices, k = n, W_c = B.
/// star_forest: 3n^2 unit-weight stars plus 3n isolated vertices, k = 3n^2 + 4n;
/// needs n >= 2 (UsageError otherwise).
Instance gen_from_three_partition(const ThreePartitionSource& src,
                                  ThreePartitionVariant variant = ThreePartitionVariant::isolated);

/// star_forest: one star per variable, k = 2, p = variables + clauses.
/// complete_bipartite: p = 1, k = 2 * variables + 1.
/// cycles_edges: edge mode, one C4 and one single edge per occurrence, k = 2.
Instance gen_from_one_in_three_sat(const OneInThreeSatSource& src, SatVariant variant = SatVariant::star_forest);

/// Split graph on |T| triple vertices (first) and 3q element vertices,
/// k = |T|, p = 1. Needs |T| >= q (UsageError otherwise).
Instance gen_from_three_dim_matching(const ThreeDimMatchingSource& src);

SourceProblem source_from_json(const Json& doc);
Json source_to_json(const SourceProblem& src);

/// Variant names accepted by generate(); the first one is the default.
std::vector<std::string> variant_names(const SourceProblem& src);

struct Generated {
    Instance instance;
    Json metadata;  // source, variant and the expected answer when known
};

/// Dispatches on the source type. An empty variant picks the default.
/// UsageError on an unknown variant.
Generated generate(const SourceProblem& src, const std::string& variant = {},
                   std::optional<bool> expected = std::nullopt);

/// Instance document with a "metadata" block appended.
Json generated_to_json(const Generated& g);

}  // namespace lbcolor
