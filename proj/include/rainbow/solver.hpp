#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

struct SearchBudget {
    uint64_t node_limit = 50'000'000;
    std::optional<double> time_limit_seconds;
};

struct SearchResult {
    /// Witness vertices. For cycles the closing edge back to the first
    /// vertex is implied and length() == vertices.size().
    std::vector<Vertex> vertices;
    int length = 0;
    bool optimal = false;
    bool is_cycle = false;
    uint64_t nodes_expanded = 0;
};

/// Exact longest rainbow path by depth-first branch and bound over
/// (endpoint, visited set, used colors). Prunes branches that cannot beat
/// the incumbent and duplicate states via a transposition table (engaged
/// for n <= 64). optimal is set when the space was exhausted under the
/// budget or the incumbent hit the ceiling min(n-1, color count).
SearchResult longest_rainbow_path_exact(const ColoredGraph& g,
                                        const SearchBudget& budget = {});

/// Exact largest rainbow cycle: same scheme rooted at each cycle's minimal
/// vertex, with a closing-color check. Requires n >= 3.
SearchResult largest_rainbow_cycle_exact(const ColoredGraph& g,
                                         const SearchBudget& budget = {});

/// Independent reference for tests: enumerates every vertex sequence,
/// extending only while the rainbow predicate holds, with no other pruning
/// and no code shared with the branch-and-bound search. n <= 9.
int brute_force_oracle(const ColoredGraph& g);

}  // namespace rainbow
