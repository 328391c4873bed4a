#include "rainbow/engine.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rainbow {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::append_end: return "append_end";
        case MoveKind::append_start: return "append_start";
        case MoveKind::insert: return "insert";
        case MoveKind::chord_pendant: return "chord_pendant";
        case MoveKind::close_and_cut: return "close_and_cut";
    }
    return "?";
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::p1: return "P1";
        case Rule::p2: return "P2";
        case Rule::p3: return "P3";
        case Rule::p4: return "P4";
        case Rule::p5: return "P5";
        case Rule::p6: return "P6";
        case Rule::l1: return "L1";
    }
    return "?";
}

namespace {

// Rainbow re-check for candidate sequences whose vertices are distinct by
// construction.
bool rainbow_colors_ok(const ColoredGraph& g, std::span<const Vertex> seq) {
    Bitset seen(g.color_count());
    for (size_t i = 1; i < seq.size(); ++i) {
        Color c = g.color_unchecked(seq[i - 1], seq[i]);
        if (seen.test(c)) return false;
        seen.set(c);
    }
    return true;
}

// Enumerates the full surgery catalog for p in deterministic order
// (kind, cut index, joining vertex, construction variant), re-validating
// every candidate. emit returning false stops the enumeration early.
//
// Guard convention: a construction drops at most one path edge (the cut)
// and introduces exactly two new edge colors (one for plain appends). It
// yields a rainbow path iff the new colors are distinct and each is either
// off the path's color set or equal to the cut color.
template <typename Emit>
void enumerate_moves(const ColoredGraph& g, const RainbowPath& p, Emit&& emit) {
    const std::vector<Vertex>& vs = p.vertices();
    const int l = p.length();
    const int n = g.vertex_count();
    const Bitset& pc = p.colors();
    if (l >= n - 1) return;

    std::vector<Vertex> ext;
    ext.reserve(n - l - 1);
    for (Vertex u = 0; u < n; ++u)
        if (!p.contains(u)) ext.push_back(u);

    auto fresh = [&](Color c, Color cutc) { return !pc.test(c) || c == cutc; };
    auto edge_color = [&](int i) { return g.color_unchecked(vs[i - 1], vs[i]); };

    bool keep_going = true;
    auto try_emit = [&](MoveKind kind, Vertex u, int cut, std::pair<Vertex, Vertex> chord,
                        Rule rule, std::vector<Vertex>&& result) {
        if (!rainbow_colors_ok(g, result)) return;
        keep_going = emit(Move{kind, u, cut, chord, rule, vs, std::move(result)});
    };

    // append_end / append_start: one fresh pendant color, nothing cut.
    for (Vertex u : ext) {
        if (!keep_going) return;
        if (pc.test(g.color_unchecked(vs[l], u))) continue;
        std::vector<Vertex> r(vs);
        r.push_back(u);
        try_emit(MoveKind::append_end, u, -1, {-1, -1}, Rule::p1, std::move(r));
    }
    for (Vertex u : ext) {
        if (!keep_going) return;
        if (pc.test(g.color_unchecked(vs[0], u))) continue;
        std::vector<Vertex> r;
        r.reserve(vs.size() + 1);
        r.push_back(u);
        r.insert(r.end(), vs.begin(), vs.end());
        try_emit(MoveKind::append_start, u, -1, {-1, -1}, Rule::p1, std::move(r));
    }

    // insert: u replaces the cut edge with two pendant edges.
    for (int cut = 1; cut <= l && keep_going; ++cut) {
        Color cutc = edge_color(cut);
        for (Vertex u : ext) {
            if (!keep_going) return;
            Color c1 = g.color_unchecked(vs[cut - 1], u);
            Color c2 = g.color_unchecked(u, vs[cut]);
            if (c1 == c2 || !fresh(c1, cutc) || !fresh(c2, cutc)) continue;
            std::vector<Vertex> r(vs.begin(), vs.begin() + cut);
            r.push_back(u);
            r.insert(r.end(), vs.begin() + cut, vs.end());
            try_emit(MoveKind::insert, u, cut, {-1, -1}, Rule::p2, std::move(r));
        }
    }

    // chord_pendant: a non-closing endpoint chord replaces the cut edge and
    // u hangs off the freed endpoint or the opposite one. Four variants per
    // cut index: the start-side chord (v_0, v_cut) frees v_{cut-1}; the
    // end-side chord (v_{cut-1}, v_l) frees v_cut.
    for (int cut = 2; cut <= l - 1 && keep_going; ++cut) {
        Color cutc = edge_color(cut);
        Color cc_start = g.color_unchecked(vs[0], vs[cut]);
        Color cc_end = g.color_unchecked(vs[cut - 1], vs[l]);
        bool start_ok = fresh(cc_start, cutc);
        bool end_ok = fresh(cc_end, cutc);
        if (!start_ok && !end_ok) continue;

        // v_{cut-1} .. v_0, v_cut .. v_l
        std::vector<Vertex> rot_start;
        if (start_ok) {
            rot_start.assign(vs.rbegin() + (l + 1 - cut), vs.rend());
            rot_start.insert(rot_start.end(), vs.begin() + cut, vs.end());
        }
        // v_0 .. v_{cut-1}, v_l .. v_cut
        std::vector<Vertex> rot_end;
        if (end_ok) {
            rot_end.assign(vs.begin(), vs.begin() + cut);
            rot_end.insert(rot_end.end(), vs.rbegin(), vs.rbegin() + (l + 1 - cut));
        }

        for (Vertex u : ext) {
            if (!keep_going) return;
            if (start_ok) {
                Color pfree = g.color_unchecked(u, vs[cut - 1]);
                if (pfree != cc_start && fresh(pfree, cutc)) {
                    std::vector<Vertex> r;
                    r.reserve(vs.size() + 1);
                    r.push_back(u);
                    r.insert(r.end(), rot_start.begin(), rot_start.end());
                    try_emit(MoveKind::chord_pendant, u, cut, {vs[0], vs[cut]},
                             pc.test(pfree) ? Rule::p6 : Rule::p3, std::move(r));
                }
                if (!keep_going) return;
                Color pfar = g.color_unchecked(vs[l], u);
                if (pfar != cc_start && fresh(pfar, cutc)) {
                    std::vector<Vertex> r(rot_start);
                    r.push_back(u);
                    try_emit(MoveKind::chord_pendant, u, cut, {vs[0], vs[cut]}, Rule::p5,
                             std::move(r));
                }
            }
            if (!keep_going) return;
            if (end_ok) {
                Color pfree = g.color_unchecked(u, vs[cut]);
                if (pfree != cc_end && fresh(pfree, cutc)) {
                    std::vector<Vertex> r(rot_end);
                    r.push_back(u);
                    try_emit(MoveKind::chord_pendant, u, cut, {vs[cut - 1], vs[l]},
                             pc.test(pfree) ? Rule::p6 : Rule::p3, std::move(r));
                }
                if (!keep_going) return;
                Color pfar = g.color_unchecked(vs[0], u);
                if (pfar != cc_end && fresh(pfar, cutc)) {
                    std::vector<Vertex> r;
                    r.reserve(vs.size() + 1);
                    r.push_back(u);
                    r.insert(r.end(), rot_end.begin(), rot_end.end());
                    try_emit(MoveKind::chord_pendant, u, cut, {vs[cut - 1], vs[l]}, Rule::p5,
                             std::move(r));
                }
            }
        }
    }

    // close_and_cut: the closing chord turns the path into a cycle, one
    // cycle edge is cut, and u hangs off a freed end.
    if (l >= 2) {
        Color cc = g.color_unchecked(vs[0], vs[l]);
        Rule rule = pc.test(cc) ? Rule::p4 : Rule::l1;
        for (int cut = 1; cut <= l && keep_going; ++cut) {
            Color cutc = edge_color(cut);
            if (!fresh(cc, cutc)) continue;
            // v_cut .. v_l, v_0 .. v_{cut-1}
            std::vector<Vertex> opened(vs.begin() + cut, vs.end());
            opened.insert(opened.end(), vs.begin(), vs.begin() + cut);
            for (Vertex u : ext) {
                if (!keep_going) return;
                Color phead = g.color_unchecked(u, vs[cut]);
                if (phead != cc && fresh(phead, cutc)) {
                    std::vector<Vertex> r;
                    r.reserve(vs.size() + 1);
                    r.push_back(u);
                    r.insert(r.end(), opened.begin(), opened.end());
                    try_emit(MoveKind::close_and_cut, u, cut, {vs[0], vs[l]}, rule,
                             std::move(r));
                }
                if (!keep_going) return;
                Color ptail = g.color_unchecked(vs[cut - 1], u);
                if (ptail != cc && fresh(ptail, cutc)) {
                    std::vector<Vertex> r(opened);
                    r.push_back(u);
                    try_emit(MoveKind::close_and_cut, u, cut, {vs[0], vs[l]}, rule,
                             std::move(r));
                }
            }
        }
    }
}

std::optional<Move> first_move(const ColoredGraph& g, const RainbowPath& p) {
    std::optional<Move> out;
    enumerate_moves(g, p, [&](Move&& m) {
        out = std::move(m);
        return false;
    });
    return out;
}

}  // namespace

std::vector<Move> candidate_moves(const ColoredGraph& g, const RainbowPath& p) {
    std::vector<Move> out;
    std::set<std::vector<Vertex>> seen;
    enumerate_moves(g, p, [&](Move&& m) {
        if (seen.insert(canonical_orientation(m.result)).second) out.push_back(std::move(m));
        return true;
    });
    return out;
}

RainbowPath apply_move(const ColoredGraph& g, const RainbowPath& p, const Move& m) {
    const std::vector<Vertex>& vs = p.vertices();
    bool base_matches =
        m.base == vs || (m.base.size() == vs.size() &&
                         std::equal(m.base.rbegin(), m.base.rend(), vs.begin()));
    if (!base_matches) raise(Errc::stale_move, "move was generated for a different path");
    if (m.result.size() != vs.size() + 1)
        raise(Errc::stale_move, "result length does not extend the path by one");
    int added = 0;
    for (Vertex v : m.result) {
        g.check_vertex(v);
        if (!p.contains(v)) {
            ++added;
            if (v != m.u) raise(Errc::stale_move, "result adds a vertex other than u");
        }
    }
    if (added != 1) raise(Errc::stale_move, "result does not add exactly one vertex");
    try {
        return RainbowPath::from_vertices(g, m.result);
    } catch (const Error&) {
        raise(Errc::stale_move, "result is not a rainbow path");
    }
}

std::vector<RainbowPath> rotations(const ColoredGraph& g, const RainbowPath& p) {
    const std::vector<Vertex>& vs = p.vertices();
    const int l = p.length();
    const Bitset& pc = p.colors();
    std::vector<RainbowPath> out;
    std::set<std::vector<Vertex>> seen;

    auto add = [&](std::vector<Vertex>&& seq) {
        if (!rainbow_colors_ok(g, seq)) return;
        if (!seen.insert(canonical_orientation(seq)).second) return;
        out.push_back(RainbowPath::from_vertices(g, std::move(seq)));
    };

    // start-side: chord (v_0, v_i) replaces the edge (v_{i-1}, v_i)
    for (int i = 2; i <= l; ++i) {
        Color cc = g.color_unchecked(vs[0], vs[i]);
        Color cutc = g.color_unchecked(vs[i - 1], vs[i]);
        if (pc.test(cc) && cc != cutc) continue;
        std::vector<Vertex> seq(vs.rbegin() + (l + 1 - i), vs.rend());
        seq.insert(seq.end(), vs.begin() + i, vs.end());
        add(std::move(seq));
    }
    // end-side: chord (v_j, v_l) replaces the edge (v_j, v_{j+1})
    for (int j = 0; j <= l - 2; ++j) {
        Color cc = g.color_unchecked(vs[j], vs[l]);
        Color cutc = g.color_unchecked(vs[j], vs[j + 1]);
        if (pc.test(cc) && cc != cutc) continue;
        std::vector<Vertex> seq(vs.begin(), vs.begin() + j + 1);
        seq.insert(seq.end(), vs.rbegin(), vs.rbegin() + (l - j));
        add(std::move(seq));
    }
    return out;
}

std::pair<RainbowPath, ExtensionTrace> extend_to_fixpoint(const ColoredGraph& g,
                                                          const RainbowPath& seed,
                                                          int rotation_budget) {
    if (rotation_budget < 0) raise(Errc::bad_config, "negative rotation budget");
    RainbowPath p = seed;
    ExtensionTrace tr;
    tr.seed_length = seed.length();

    for (;;) {
        if (auto m = first_move(g, p)) {
            RainbowPath next = apply_move(g, p, *m);
            tr.moves.push_back(std::move(*m));
            p = std::move(next);
            continue;
        }
        if (rotation_budget == 0) break;

        // p itself is moveless; search its rotation closure for a
        // representative that is not.
        std::set<std::vector<Vertex>> visited{canonical_orientation(p.vertices())};
        std::deque<RainbowPath> queue;
        queue.push_back(p);
        long explored = 0;
        bool advanced = false;
        bool root = true;
        while (!queue.empty()) {
            RainbowPath q = std::move(queue.front());
            queue.pop_front();
            ++explored;
            if (!root) {
                if (auto m = first_move(g, q)) {
                    RainbowPath next = apply_move(g, q, *m);
                    tr.moves.push_back(std::move(*m));
                    p = std::move(next);
                    advanced = true;
                    break;
                }
            }
            root = false;
            if (visited.size() >= static_cast<size_t>(rotation_budget)) continue;
            for (RainbowPath& r : rotations(g, q)) {
                if (visited.size() >= static_cast<size_t>(rotation_budget)) break;
                if (visited.insert(canonical_orientation(r.vertices())).second)
                    queue.push_back(std::move(r));
            }
        }
        tr.rotations_explored += explored;
        if (!advanced) break;
    }
    tr.final_length = p.length();
    return {std::move(p), tr};
}

PathStructure analyze_structure(const ColoredGraph& g, const RainbowPath& p) {
    const std::vector<Vertex>& vs = p.vertices();
    const int l = p.length();
    const int n = g.vertex_count();
    const Bitset& pc = p.colors();
    PathStructure s;

    if (l >= 1) s.closes_rainbow_cycle = !pc.test(g.color_unchecked(vs[0], vs[l]));

    for (int i = 2; i <= l - 1; ++i)
        if (!pc.test(g.color_unchecked(vs[0], vs[i]))) s.fresh_chord_indices.push_back(i);

    if (l >= 2) {
        Bitset blocked = pc;
        blocked.set(g.color_unchecked(vs[0], vs[l]));
        for (int i = 2; i <= l - 1; ++i)
            if (!blocked.test(g.color_unchecked(vs[0], vs[i]))) s.start_marks.push_back(i - 1);
        for (int j = 1; j <= l - 1; ++j)
            if (!blocked.test(g.color_unchecked(vs[j], vs[l]))) s.end_marks.push_back(j + 1);
    }

    Bitset end_pendants(g.color_count());
    for (Vertex u = 0; u < n; ++u)
        if (!p.contains(u)) end_pendants.set(g.color_unchecked(vs[l], u));
    for (int i = 1; i <= l; ++i) {
        if (end_pendants.test(g.color_unchecked(vs[i - 1], vs[i]))) {
            s.min_end_match = i;
            break;
        }
    }

    for (int ij : s.fresh_chord_indices) {
        Vertex w = vs[ij - 1];
        Bitset side = g.palette(w);
        side.subtract(pc);
        side.reset(g.color_unchecked(vs[0], vs[ij]));
        s.side_palette_sizes.push_back(side.count());

        Bitset displaced(g.color_count());
        for (int t = 1; t <= ij - 3; ++t)
            if (side.test(g.color_unchecked(w, vs[t])))
                displaced.set(g.color_unchecked(vs[t], vs[t + 1]));
        for (int t = ij + 1; t <= l - 1; ++t)
            if (side.test(g.color_unchecked(w, vs[t])))
                displaced.set(g.color_unchecked(vs[t - 1], vs[t]));
        s.displaced_sizes.push_back(displaced.count());
    }
    return s;
}

}  // namespace rainbow
