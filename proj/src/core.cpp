#include "rainbow/core.hpp"

#include <algorithm>
#include <map>

namespace rainbow {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::self_loop: return "SelfLoop";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::incomplete_assignment: return "IncompleteAssignment";
        case Errc::duplicate_pair: return "DuplicatePair";
        case Errc::not_proper: return "NotProper";
        case Errc::duplicate_vertex: return "DuplicateVertex";
        case Errc::invalid_path: return "InvalidPath";
        case Errc::stale_move: return "StaleMove";
        case Errc::too_large: return "TooLarge";
        case Errc::odd_n: return "OddN";
        case Errc::even_n: return "EvenN";
        case Errc::not_applicable: return "NotApplicable";
        case Errc::evaluator_mismatch: return "EvaluatorMismatch";
        case Errc::invalid_witness: return "InvalidWitness";
        case Errc::parse_error: return "ParseError";
        case Errc::bad_config: return "BadConfig";
    }
    return "Unknown";
}

void raise(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

ColoredGraph ColoredGraph::build(int n, std::span<const EdgeColor> edges) {
    if (n < 2) raise(Errc::bad_config, "need at least 2 vertices, got " + std::to_string(n));
    if (n > kMaxVertices)
        raise(Errc::too_large, "n = " + std::to_string(n) + " exceeds supported " +
                                   std::to_string(kMaxVertices));

    constexpr uint32_t kUnset = 0xffffffffu;
    std::vector<uint32_t> raw(static_cast<size_t>(n) * n, kUnset);
    for (const EdgeColor& e : edges) {
        if (e.u == e.v) raise(Errc::self_loop, "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            raise(Errc::out_of_range, "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                          "} with n = " + std::to_string(n));
        if (e.c < 0) raise(Errc::bad_config, "negative color " + std::to_string(e.c));
        size_t a = static_cast<size_t>(e.u) * n + e.v;
        size_t b = static_cast<size_t>(e.v) * n + e.u;
        if (raw[a] != kUnset) {
            raise(Errc::duplicate_pair,
                  "pair {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} assigned twice");
        }
        raw[a] = raw[b] = static_cast<uint32_t>(e.c);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (raw[static_cast<size_t>(u) * n + v] == kUnset)
                raise(Errc::incomplete_assignment,
                      "pair {" + std::to_string(u) + "," + std::to_string(v) + "} missing");

    // Normalize color ids: ascending original value -> 0..k-1.
    std::map<uint32_t, uint16_t> relabel;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) relabel.emplace(raw[static_cast<size_t>(u) * n + v], 0);
    if (relabel.size() > static_cast<size_t>(Bitset::kMaxBits))
        raise(Errc::too_large, "more than " + std::to_string(Bitset::kMaxBits) + " colors");
    uint16_t next = 0;
    for (auto& [orig, id] : relabel) id = next++;

    ColoredGraph g;
    g.n_ = n;
    g.num_colors_ = static_cast<int>(relabel.size());
    g.color_.assign(static_cast<size_t>(n) * n, 0xffff);
    g.palette_.assign(n, Bitset(g.num_colors_));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            uint16_t c = relabel.at(raw[static_cast<size_t>(u) * n + v]);
            g.color_[static_cast<size_t>(u) * n + v] = c;
            if (g.palette_[u].test(c))
                raise(Errc::not_proper, "vertex " + std::to_string(u) + " sees color " +
                                            std::to_string(c) + " twice");
            g.palette_[u].set(c);
        }
    }
    return g;
}

void ColoredGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        raise(Errc::out_of_range,
              "vertex " + std::to_string(v) + " with n = " + std::to_string(n_));
}

Color ColoredGraph::color(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) raise(Errc::self_loop, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return color_unchecked(u, v);
}

const Bitset& ColoredGraph::palette(Vertex v) const {
    check_vertex(v);
    return palette_[v];
}

int ColoredGraph::color_degree(Vertex v) const { return palette(v).count(); }

Bitset ColoredGraph::colors_to(Vertex u, std::span<const Vertex> targets) const {
    check_vertex(u);
    Bitset out(num_colors_);
    for (Vertex t : targets) {
        check_vertex(t);
        if (t == u) continue;
        out.set(color_unchecked(u, t));
    }
    return out;
}

std::vector<EdgeColor> ColoredGraph::edges_sorted() const {
    std::vector<EdgeColor> out;
    out.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            out.push_back({u, v, color_unchecked(u, v)});
    return out;
}

bool ColoredGraph::same_coloring(const ColoredGraph& o) const {
    return n_ == o.n_ && num_colors_ == o.num_colors_ && color_ == o.color_;
}

ColorNeighborhood color_neighborhood(const ColoredGraph& g, Vertex v) {
    return {v, g.palette(v)};
}

bool is_rainbow(const ColoredGraph& g, std::span<const Vertex> vertices) {
    Bitset seen_v(g.vertex_count());
    for (Vertex v : vertices) {
        g.check_vertex(v);
        if (seen_v.test(v)) raise(Errc::duplicate_vertex, "vertex " + std::to_string(v));
        seen_v.set(v);
    }
    Bitset seen_c(g.color_count());
    for (size_t i = 1; i < vertices.size(); ++i) {
        Color c = g.color_unchecked(vertices[i - 1], vertices[i]);
        if (seen_c.test(c)) return false;
        seen_c.set(c);
    }
    return true;
}

RainbowPath RainbowPath::from_vertices(const ColoredGraph& g, std::vector<Vertex> vertices) {
    if (vertices.empty()) raise(Errc::invalid_path, "empty vertex sequence");
    if (!is_rainbow(g, vertices)) raise(Errc::invalid_path, "repeated edge color");
    RainbowPath p;
    p.colors_ = Bitset(g.color_count());
    p.members_ = Bitset(g.vertex_count());
    for (size_t i = 0; i < vertices.size(); ++i) {
        p.members_.set(vertices[i]);
        if (i > 0) p.colors_.set(g.color_unchecked(vertices[i - 1], vertices[i]));
    }
    p.v_ = std::move(vertices);
    return p;
}

std::vector<Vertex> canonical_orientation(std::span<const Vertex> vertices) {
    std::vector<Vertex> fwd(vertices.begin(), vertices.end());
    std::vector<Vertex> rev(vertices.rbegin(), vertices.rend());
    return std::min(fwd, rev);
}

}  // namespace rainbow
