#pragma once

#include <cstdint>
#include <memory>

#include "rainbow/core.hpp"

namespace rainbow {

// splitmix64. Fixed here so runs with equal seeds agree across builds and
// implementations; documented in the README.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // next() mod bound; bias is irrelevant at these bound sizes and the
    // reduction is part of the documented generator contract.
    uint64_t below(uint64_t bound) { return next() % bound; }
};

/// Circle-method 1-factorization of K_n, n even: round r colors the pair
/// {n-1, r} and the pairs {(r+i) mod (n-1), (r-i) mod (n-1)}. Exactly n-1
/// colors, each class a perfect matching.
ColoredGraph round_robin(int n);

/// C(uv) = (u+v) mod n for odd n. Exactly n colors, each class a matching
/// of (n-1)/2 edges; vertex v misses exactly color (2v) mod n.
ColoredGraph cyclic(int n);

/// Performs `steps` random properness-preserving swaps. Each step picks a
/// uniform random edge (its color is a), a uniform other color b, and swaps
/// a and b on the component of the a/b subgraph containing that edge. A
/// step that would remove a color class entirely is a no-op, so the output
/// uses exactly as many colors as the input. Deterministic given seed.
ColoredGraph kempe_shuffle(const ColoredGraph& g, int steps, uint64_t seed);

enum class GeneratorKind { round_robin, cyclic, kempe_shuffle };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::round_robin;
    int n = 0;
    int steps = 0;                        // kempe_shuffle only
    uint64_t seed = 0;                    // kempe_shuffle only
    std::shared_ptr<GeneratorSpec> base;  // required for kempe_shuffle
};

ColoredGraph generate(const GeneratorSpec& spec);

}  // namespace rainbow
