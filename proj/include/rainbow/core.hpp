#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/bitset.hpp"

namespace rainbow {

using Vertex = int;
using Color = int;

enum class Errc {
    self_loop,
    out_of_range,
    incomplete_assignment,
    duplicate_pair,
    not_proper,
    duplicate_vertex,
    invalid_path,
    stale_move,
    too_large,
    odd_n,
    even_n,
    not_applicable,
    evaluator_mismatch,
    invalid_witness,
    parse_error,
    bad_config,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

struct EdgeColor {
    Vertex u = 0;
    Vertex v = 0;
    Color c = 0;
    bool operator==(const EdgeColor&) const = default;
};

/// A complete graph on n vertices with a proper edge coloring. Immutable
/// after construction; safe to share across threads.
///
/// Color identifiers are normalized at build time: the distinct input colors
/// are relabeled to 0..color_count()-1 in ascending order of their original
/// values, so equal colorings serialize identically.
class ColoredGraph {
public:
    static constexpr int kMaxVertices = Bitset::kMaxBits;

    /// Validates completeness (every unordered pair assigned exactly once)
    /// and properness (no vertex sees a color twice), then normalizes.
    static ColoredGraph build(int n, std::span<const EdgeColor> edges);

    int vertex_count() const { return n_; }
    int color_count() const { return num_colors_; }

    /// Color of edge {u,v}; symmetric in u,v.
    Color color(Vertex u, Vertex v) const;
    Color color_unchecked(Vertex u, Vertex v) const {
        return color_[static_cast<size_t>(u) * n_ + v];
    }

    /// Set of colors on edges incident to v (CN(v)). |palette(v)| == n-1
    /// for any graph this class can hold.
    const Bitset& palette(Vertex v) const;
    int color_degree(Vertex v) const;

    /// Colors on edges from u into the given vertex set.
    Bitset colors_to(Vertex u, std::span<const Vertex> targets) const;

    /// All edges with u < v, sorted lexicographically.
    std::vector<EdgeColor> edges_sorted() const;

    bool same_coloring(const ColoredGraph& o) const;

    void check_vertex(Vertex v) const;

private:
    ColoredGraph() = default;

    int n_ = 0;
    int num_colors_ = 0;
    std::vector<uint16_t> color_;  // n*n, symmetric, diagonal unused
    std::vector<Bitset> palette_;

    friend ColoredGraph kempe_shuffle(const ColoredGraph&, int, uint64_t);
};

/// The colors incident to one vertex.
struct ColorNeighborhood {
    Vertex vertex = 0;
    Bitset colors;
};

ColorNeighborhood color_neighborhood(const ColoredGraph& g, Vertex v);

/// True iff the consecutive-edge colors of the sequence are pairwise
/// distinct. Sequences with at most one vertex are rainbow. Throws on
/// duplicate or out-of-range vertices.
bool is_rainbow(const ColoredGraph& g, std::span<const Vertex> vertices);

/// An ordered sequence of distinct vertices whose consecutive-edge colors
/// are pairwise distinct, together with that color set. length() counts
/// edges, so a single vertex has length 0.
class RainbowPath {
public:
    static RainbowPath from_vertices(const ColoredGraph& g,
                                     std::vector<Vertex> vertices);

    int length() const { return static_cast<int>(v_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return v_; }
    const Bitset& colors() const { return colors_; }
    const Bitset& members() const { return members_; }
    bool contains(Vertex v) const { return members_.test(v); }
    Vertex front() const { return v_.front(); }
    Vertex back() const { return v_.back(); }

    bool operator==(const RainbowPath& o) const { return v_ == o.v_; }

private:
    RainbowPath() = default;

    std::vector<Vertex> v_;
    Bitset colors_;
    Bitset members_;
};

/// A path and its reversal are the same path; this returns the
/// lexicographically smaller of the two orientations.
std::vector<Vertex> canonical_orientation(std::span<const Vertex> vertices);

}  // namespace rainbow
