#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

enum class MoveKind {
    append_end,     // new vertex after v_l
    append_start,   // new vertex before v_0
    insert,         // new vertex between v_{i-1} and v_i, dropping that edge
    chord_pendant,  // endpoint chord replaces one path edge, new vertex hangs
                    // off one end of the rotated path
    close_and_cut,  // closing chord v_0 v_l forms a cycle, one cycle edge is
                    // cut and the new vertex hangs off a freed end
};

// Which statement's refutation construction a move realizes. The split
// follows the hypothesis that holds when the move validates: a fresh
// pendant color selects p3 over p6, and a fresh closing chord selects l1
// over p4.
enum class Rule { p1, p2, p3, p4, p5, p6, l1 };

const char* move_kind_name(MoveKind k);
const char* rule_name(Rule r);

/// One validated path surgery. `result` is rainbow under the owning graph
/// and one edge longer than `base`, the path the move was generated for.
struct Move {
    MoveKind kind = MoveKind::append_end;
    Vertex u = -1;                     // the vertex joining the path
    int cut = -1;                      // index of the dropped edge, -1 if none
    std::pair<Vertex, Vertex> chord{-1, -1};
    Rule rule = Rule::p1;
    std::vector<Vertex> base;
    std::vector<Vertex> result;
};

/// Every length-increasing surgery available on p, in deterministic order
/// (kind, cut index, joining vertex), deduplicated up to reversal. Each
/// returned move has been re-validated against the rainbow predicate, so
/// the list is sound even where the underlying statements need extra
/// guards. A path that already spans all vertices gets an empty list.
std::vector<Move> candidate_moves(const ColoredGraph& g, const RainbowPath& p);

/// Applies a move produced by candidate_moves for exactly this path.
/// Throws StaleMove if the move does not validate against p.
RainbowPath apply_move(const ColoredGraph& g, const RainbowPath& p, const Move& m);

/// All same-length rainbow paths reachable by one elementary rotation:
/// replace a path edge adjacent to an endpoint chord by that chord, at
/// either endpoint. Outputs are validated and deduplicated up to reversal.
std::vector<RainbowPath> rotations(const ColoredGraph& g, const RainbowPath& p);

struct ExtensionTrace {
    int seed_length = 0;
    int final_length = 0;
    std::vector<Move> moves;
    long rotations_explored = 0;
};

/// Greedy fixpoint search: apply the first available move; when none
/// exists, walk the rotation closure breadth-first (up to rotation_budget
/// distinct paths, counting reversals as equal) and continue from the
/// first rotated representative that admits a move. Stops when the whole
/// explored closure is moveless. Deterministic; never shortens the path.
std::pair<RainbowPath, ExtensionTrace> extend_to_fixpoint(const ColoredGraph& g,
                                                          const RainbowPath& seed,
                                                          int rotation_budget = 4096);

/// Diagnostic quantities of a path. Index conventions follow the path
/// v_0..v_l with edge colors C_1..C_l.
struct PathStructure {
    /// The closing chord's color does not occur on the path, so the path
    /// closes into a rainbow cycle one edge longer.
    bool closes_rainbow_cycle = false;

    /// Indices i in [2, l) whose start chord v_0 v_i has a color outside
    /// the path's color set. Properness makes these colors distinct, so
    /// the count is also the number of fresh colors seen from v_0.
    std::vector<int> fresh_chord_indices;

    /// i-1 for start chords v_0 v_i (2 <= i <= l-1) fresh with respect to
    /// the path colors plus the closing chord color, and j+1 for end
    /// chords v_j v_l (1 <= j <= l-1) fresh the same way.
    std::vector<int> start_marks;
    std::vector<int> end_marks;

    /// Least i such that some vertex off the path sees color C_i on its
    /// edge to v_l; empty when no pendant edge at v_l repeats a path color.
    std::optional<int> min_end_match;

    /// Per fresh chord index i_j: the number of colors at v_{i_j - 1} that
    /// lie outside the path colors and the chord color, and the number of
    /// path colors its side chords displace (computed by scanning chords
    /// from v_{i_j - 1} to v_s for s in [1, i_j-3] and [i_j+1, l-1]).
    std::vector<int> side_palette_sizes;
    std::vector<int> displaced_sizes;

    int fresh_chord_count() const { return static_cast<int>(fresh_chord_indices.size()); }
};

PathStructure analyze_structure(const ColoredGraph& g, const RainbowPath& p);

}  // namespace rainbow
