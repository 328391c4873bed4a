#include <doctest.h>

#include <algorithm>
#include <set>

#include "rainbow/engine.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

RainbowPath path_of(const ColoredGraph& g, std::vector<Vertex> vs) {
    return RainbowPath::from_vertices(g, std::move(vs));
}

// Random small instance: shuffled workhorse of the index's parity.
ColoredGraph random_instance(int n, uint64_t seed) {
    ColoredGraph base = n % 2 == 0 ? round_robin(n) : cyclic(n);
    return kempe_shuffle(base, 30, seed);
}

// Random rainbow path grown greedily from a random start.
RainbowPath random_path(const ColoredGraph& g, uint64_t seed) {
    SplitMix64 rng(seed);
    int n = g.vertex_count();
    std::vector<Vertex> seq{static_cast<Vertex>(rng.below(n))};
    Bitset used(g.color_count());
    Bitset in(n);
    in.set(seq[0]);
    int target = 1 + static_cast<int>(rng.below(n));
    while (static_cast<int>(seq.size()) < target) {
        Vertex from = seq.back();
        bool grew = false;
        for (int tries = 0; tries < 2 * n && !grew; ++tries) {
            Vertex v = static_cast<Vertex>(rng.below(n));
            if (in.test(v)) continue;
            Color c = g.color_unchecked(from, v);
            if (used.test(c)) continue;
            seq.push_back(v);
            in.set(v);
            used.set(c);
            grew = true;
        }
        if (!grew) break;
    }
    return RainbowPath::from_vertices(g, std::move(seq));
}

}  // namespace

TEST_CASE("candidate_moves on round_robin(4) [1,0,2] is empty") {
    ColoredGraph g = round_robin(4);
    CHECK(candidate_moves(g, path_of(g, {1, 0, 2})).empty());
}

TEST_CASE("candidate_moves finds the fresh append in cyclic(5)") {
    ColoredGraph g = cyclic(5);
    std::vector<Move> moves = candidate_moves(g, path_of(g, {0, 1}));
    bool found = false;
    for (const Move& m : moves)
        if (m.kind == MoveKind::append_end && m.u == 2) {
            found = true;
            CHECK(m.result == std::vector<Vertex>{0, 1, 2});
            CHECK(m.rule == Rule::p1);
        }
    CHECK(found);
}

TEST_CASE("no moves from a spanning path") {
    ColoredGraph g = cyclic(5);
    CHECK(candidate_moves(g, path_of(g, {0, 1, 2, 3, 4})).empty());
}

TEST_CASE("apply_move extends and rejects stale moves") {
    ColoredGraph g = cyclic(5);
    RainbowPath p = path_of(g, {0, 1});
    std::vector<Move> moves = candidate_moves(g, p);
    REQUIRE(!moves.empty());
    const Move& m = moves.front();
    RainbowPath q = apply_move(g, p, m);
    CHECK(q.length() == p.length() + 1);
    CHECK(is_rainbow(g, q.vertices()));
    CHECK(p.length() == 1);  // input untouched

    CHECK_THROWS_AS(apply_move(g, q, m), Error);
    try {
        apply_move(g, q, m);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::stale_move);
    }
}

TEST_CASE("apply_move accepts the reversed orientation of its base") {
    ColoredGraph g = cyclic(5);
    RainbowPath p = path_of(g, {0, 1});
    Move m = candidate_moves(g, p).front();
    RainbowPath rev = path_of(g, {1, 0});
    CHECK(apply_move(g, rev, m).length() == 2);
}

TEST_CASE("specific append chain in cyclic(5)") {
    ColoredGraph g = cyclic(5);
    RainbowPath p = path_of(g, {0, 1});
    for (const Move& m : candidate_moves(g, p))
        if (m.kind == MoveKind::append_end && m.u == 2) p = apply_move(g, p, m);
    CHECK(p.vertices() == std::vector<Vertex>{0, 1, 2});
    CHECK(p.colors().test(1));
    CHECK(p.colors().test(3));
    for (const Move& m : candidate_moves(g, p))
        if (m.kind == MoveKind::append_end && m.u == 3) p = apply_move(g, p, m);
    CHECK(p.vertices() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(p.colors().test(0));
}

TEST_CASE("rotations of round_robin(4) [1,0,2]") {
    ColoredGraph g = round_robin(4);
    std::vector<RainbowPath> rots = rotations(g, path_of(g, {1, 0, 2}));
    bool found = false;
    for (const RainbowPath& r : rots) found = found || r.vertices() == std::vector<Vertex>{0, 1, 2};
    CHECK(found);
    for (const RainbowPath& r : rots) {
        CHECK(r.length() == 2);
        CHECK(is_rainbow(g, r.vertices()));
    }
}

TEST_CASE("rotations edge cases") {
    ColoredGraph g = cyclic(5);
    CHECK(rotations(g, path_of(g, {0, 1})).empty());
    CHECK(rotations(g, path_of(g, {0, 1, 2, 3, 4})).empty());
}

TEST_CASE("extend_to_fixpoint reaches the Hamiltonian path of cyclic(5)") {
    ColoredGraph g = cyclic(5);
    auto [p, trace] = extend_to_fixpoint(g, path_of(g, {0}));
    CHECK(p.length() == 4);
    CHECK(trace.seed_length == 0);
    CHECK(trace.final_length == 4);
    CHECK(trace.final_length == trace.seed_length + static_cast<int>(trace.moves.size()));
}

TEST_CASE("extend_to_fixpoint caps at 2 on round_robin(4)") {
    ColoredGraph g = round_robin(4);
    auto [p, trace] = extend_to_fixpoint(g, path_of(g, {1}));
    CHECK(p.length() == 2);
    CHECK(trace.rotations_explored > 0);
}

TEST_CASE("extend_to_fixpoint with zero budget keeps a moveless seed") {
    ColoredGraph g = round_robin(4);
    RainbowPath seed = path_of(g, {1, 0, 2});
    auto [p, trace] = extend_to_fixpoint(g, seed, 0);
    CHECK(p.vertices() == seed.vertices());
    CHECK(trace.moves.empty());
    CHECK(trace.rotations_explored == 0);
}

TEST_CASE("extend_to_fixpoint is deterministic and never shortens") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        ColoredGraph g = random_instance(9, seed);
        RainbowPath s = random_path(g, seed * 31);
        auto [p1, t1] = extend_to_fixpoint(g, s, 256);
        auto [p2, t2] = extend_to_fixpoint(g, s, 256);
        CHECK(p1.vertices() == p2.vertices());
        CHECK(t1.rotations_explored == t2.rotations_explored);
        CHECK(p1.length() >= s.length());
    }
}

TEST_CASE("move catalog soundness over random instances") {
    int checked = 0;
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);  // 4..12
        ColoredGraph g = random_instance(n, seed);
        RainbowPath p = random_path(g, seed * 977 + 5);
        for (const Move& m : candidate_moves(g, p)) {
            RainbowPath q = apply_move(g, p, m);
            CHECK(q.length() == p.length() + 1);
            CHECK(is_rainbow(g, q.vertices()));
            ++checked;
        }
        for (const RainbowPath& r : rotations(g, p)) {
            CHECK(r.length() == p.length());
            CHECK(r.members().count() == p.members().count());
            CHECK(is_rainbow(g, r.vertices()));
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("candidate results are unique up to reversal and sorted by kind") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        ColoredGraph g = random_instance(8, seed);
        RainbowPath p = random_path(g, seed * 13);
        std::vector<Move> moves = candidate_moves(g, p);
        std::set<std::vector<Vertex>> seen;
        for (const Move& m : moves) CHECK(seen.insert(canonical_orientation(m.result)).second);
        for (size_t i = 1; i < moves.size(); ++i)
            CHECK(static_cast<int>(moves[i - 1].kind) <= static_cast<int>(moves[i].kind));
    }
}

TEST_CASE("analyze_structure on the cyclic(5) Hamiltonian path") {
    ColoredGraph g = cyclic(5);
    PathStructure s = analyze_structure(g, path_of(g, {0, 1, 2, 3, 4}));
    CHECK(s.closes_rainbow_cycle);  // C(0,4) = 4, path colors {1,3,0,2}
    CHECK(s.fresh_chord_count() == 0);
    CHECK(s.start_marks.empty());
    CHECK(s.end_marks.empty());
}

TEST_CASE("analyze_structure on short paths") {
    ColoredGraph g = cyclic(7);
    PathStructure s = analyze_structure(g, path_of(g, {0, 1}));
    CHECK(s.fresh_chord_count() == 0);
    CHECK(s.start_marks.empty());
    CHECK(s.end_marks.empty());
    CHECK_FALSE(s.closes_rainbow_cycle);

    PathStructure r = analyze_structure(g, path_of(g, {3}));
    CHECK_FALSE(r.closes_rainbow_cycle);
    CHECK(!r.min_end_match.has_value());
}

TEST_CASE("analyze_structure on round_robin(4) [1,0,2]") {
    ColoredGraph g = round_robin(4);
    PathStructure s = analyze_structure(g, path_of(g, {1, 0, 2}));
    CHECK(s.closes_rainbow_cycle);  // C(1,2) = 0, path colors {2,1}
    CHECK(s.fresh_chord_count() == 0);
}

TEST_CASE("structure invariants over random instances") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 5 + static_cast<int>(seed % 8);
        ColoredGraph g = random_instance(n, seed);
        RainbowPath p = random_path(g, seed * 7919);
        PathStructure s = analyze_structure(g, p);
        int l = p.length();
        CHECK(s.side_palette_sizes.size() == s.fresh_chord_indices.size());
        CHECK(s.displaced_sizes.size() == s.fresh_chord_indices.size());
        for (size_t j = 0; j < s.displaced_sizes.size(); ++j)
            CHECK(s.displaced_sizes[j] <= s.side_palette_sizes[j]);
        for (int mark : s.start_marks) {
            CHECK(mark >= 1);
            CHECK(mark <= l - 1);
        }
        for (int mark : s.end_marks) {
            CHECK(mark >= 1);
            CHECK(mark <= l - 1);
        }
        for (int i : s.fresh_chord_indices) {
            CHECK(i >= 2);
            CHECK(i < l);
        }
        if (s.min_end_match) {
            CHECK(*s.min_end_match >= 1);
            CHECK(*s.min_end_match <= l);
        }
    }
}
