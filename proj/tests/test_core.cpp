#include <doctest.h>

#include <set>

#include "rainbow/core.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::bad_config;
}

}  // namespace

TEST_CASE("build_graph accepts a proper cyclic triangle") {
    std::vector<EdgeColor> edges{{0, 1, 1}, {0, 2, 2}, {1, 2, 0}};
    ColoredGraph g = ColoredGraph::build(3, edges);
    CHECK(g.vertex_count() == 3);
    CHECK(g.color_count() == 3);
    CHECK(g.color(0, 1) == 1);
    CHECK(g.color(1, 0) == 1);
}

TEST_CASE("build_graph rejects bad assignments") {
    std::vector<EdgeColor> allsame{{0, 1, 0}, {0, 2, 0}, {1, 2, 0}};
    CHECK(code_of([&] { ColoredGraph::build(3, allsame); }) == Errc::not_proper);

    std::vector<EdgeColor> missing{{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 2}, {1, 3, 1}};
    CHECK(code_of([&] { ColoredGraph::build(4, missing); }) == Errc::incomplete_assignment);

    std::vector<EdgeColor> loop{{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 2, 0}};
    CHECK(code_of([&] { ColoredGraph::build(3, loop); }) == Errc::self_loop);

    std::vector<EdgeColor> dup{{0, 1, 1}, {1, 0, 2}, {0, 2, 2}, {1, 2, 0}};
    CHECK(code_of([&] { ColoredGraph::build(3, dup); }) == Errc::duplicate_pair);
}

TEST_CASE("color normalization is by ascending original id") {
    std::vector<EdgeColor> edges{{0, 1, 10}, {0, 2, 70}, {1, 2, 5}};
    ColoredGraph g = ColoredGraph::build(3, edges);
    CHECK(g.color_count() == 3);
    CHECK(g.color(1, 2) == 0);  // 5 -> 0
    CHECK(g.color(0, 1) == 1);  // 10 -> 1
    CHECK(g.color(0, 2) == 2);  // 70 -> 2
}

TEST_CASE("color_of accessor") {
    ColoredGraph g = cyclic(5);
    CHECK(g.color(1, 4) == 0);
    CHECK(g.color(4, 1) == 0);
    CHECK(g.color(1, 3) == 4);
    CHECK(code_of([&] { g.color(2, 2); }) == Errc::self_loop);
    CHECK(code_of([&] { g.color(0, 5); }) == Errc::out_of_range);
}

TEST_CASE("color degree is n-1 on valid graphs") {
    CHECK(cyclic(5).color_degree(0) == 4);
    CHECK(round_robin(6).color_degree(3) == 5);
    CHECK(cyclic(7).color_degree(6) == 6);
    for (Vertex v = 0; v < 9; ++v) CHECK(cyclic(9).color_degree(v) == 8);
    ColorNeighborhood cn = color_neighborhood(cyclic(5), 2);
    CHECK(cn.vertex == 2);
    CHECK(cn.colors.count() == 4);
}

TEST_CASE("is_rainbow") {
    ColoredGraph c5 = cyclic(5);
    CHECK(is_rainbow(c5, std::vector<Vertex>{0, 1, 2, 3, 4}));
    ColoredGraph r4 = round_robin(4);
    CHECK_FALSE(is_rainbow(r4, std::vector<Vertex>{1, 0, 2, 3}));
    ColoredGraph c9 = cyclic(9);
    CHECK(is_rainbow(c9, std::vector<Vertex>{7}));
    CHECK(is_rainbow(c9, std::vector<Vertex>{}));
    CHECK(code_of([&] { is_rainbow(c5, std::vector<Vertex>{0, 1, 0}); }) == Errc::duplicate_vertex);
    CHECK(code_of([&] { is_rainbow(c5, std::vector<Vertex>{0, 9}); }) == Errc::out_of_range);
}

TEST_CASE("is_rainbow equals count-of-colors recomputation") {
    // Random walks, validated against an independent recount.
    for (int n : {5, 7, 9}) {
        ColoredGraph g = kempe_shuffle(cyclic(n), 40, 1000 + n);
        SplitMix64 rng(n);
        for (int t = 0; t < 200; ++t) {
            std::vector<Vertex> seq;
            std::vector<char> in(n, 0);
            int len = 1 + static_cast<int>(rng.below(n));
            for (int i = 0; i < len; ++i) {
                Vertex v = static_cast<Vertex>(rng.below(n));
                while (in[v]) v = (v + 1) % n;
                in[v] = 1;
                seq.push_back(v);
            }
            std::set<Color> colors;
            for (size_t i = 1; i < seq.size(); ++i) colors.insert(g.color(seq[i - 1], seq[i]));
            bool expect = colors.size() == seq.size() - 1 || seq.size() <= 1;
            CHECK(is_rainbow(g, seq) == expect);
        }
    }
}

TEST_CASE("rainbow path construction and canonical orientation") {
    ColoredGraph g = cyclic(5);
    RainbowPath p = RainbowPath::from_vertices(g, {0, 1, 2});
    CHECK(p.length() == 2);
    CHECK(p.colors().count() == 2);
    CHECK(p.contains(1));
    CHECK_FALSE(p.contains(4));
    CHECK(p.front() == 0);
    CHECK(p.back() == 2);

    CHECK(code_of([&] { RainbowPath::from_vertices(g, {}); }) == Errc::invalid_path);

    std::vector<Vertex> fwd{2, 1, 0};
    CHECK(canonical_orientation(fwd) == std::vector<Vertex>{0, 1, 2});
    std::vector<Vertex> id{0, 1, 2};
    CHECK(canonical_orientation(id) == id);
}
