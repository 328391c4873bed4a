#include "rainbow/generators.hpp"

#include <utility>
#include <vector>

namespace rainbow {

ColoredGraph round_robin(int n) {
    if (n < 2 || n % 2 != 0) raise(Errc::odd_n, "round_robin needs even n >= 2, got " + std::to_string(n));
    std::vector<EdgeColor> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    int m = n - 1;
    for (int r = 0; r < m; ++r) {
        edges.push_back({n - 1, r, r});
        for (int i = 1; i <= n / 2 - 1; ++i) {
            int a = (r + i) % m;
            int b = ((r - i) % m + m) % m;
            edges.push_back({a, b, r});
        }
    }
    return ColoredGraph::build(n, edges);
}

ColoredGraph cyclic(int n) {
    if (n < 3 || n % 2 != 1) raise(Errc::even_n, "cyclic needs odd n >= 3, got " + std::to_string(n));
    std::vector<EdgeColor> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, (u + v) % n});
    return ColoredGraph::build(n, edges);
}

ColoredGraph kempe_shuffle(const ColoredGraph& g, int steps, uint64_t seed) {
    if (steps < 0) raise(Errc::bad_config, "negative step count");
    ColoredGraph out = g;
    const int n = out.n_;
    const int k = out.num_colors_;
    if (k < 2 || steps == 0) return out;

    auto at = [&](Vertex x, Vertex y) -> uint16_t& {
        return out.color_[static_cast<size_t>(x) * n + y];
    };

    // Per-color edge counts; a swap that would empty a color class is a no-op
    // so the output keeps exactly the input's colors.
    std::vector<int> class_size(k, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) ++class_size[at(u, v)];

    SplitMix64 rng(seed);
    const uint64_t num_edges = static_cast<uint64_t>(n) * (n - 1) / 2;
    std::vector<char> on_chain(n, 0);

    for (int step = 0; step < steps; ++step) {
        // Uniform random pair with u < v, by index.
        uint64_t e = rng.below(num_edges);
        Vertex u = 0;
        uint64_t row = static_cast<uint64_t>(n - 1);
        while (e >= row) {
            e -= row;
            --row;
            ++u;
        }
        Vertex v = u + 1 + static_cast<int>(e);
        const uint16_t a = at(u, v);
        uint16_t b = static_cast<uint16_t>(rng.below(static_cast<uint64_t>(k - 1)));
        if (b >= a) ++b;

        // Collect the a/b component containing (u,v). Properness bounds every
        // vertex's degree in the a/b subgraph by 2, so the component is a
        // path or an even cycle and the walk never branches.
        std::vector<std::pair<Vertex, Vertex>> chain{{u, v}};
        int na = 1, nb = 0;
        std::fill(on_chain.begin(), on_chain.end(), 0);
        on_chain[u] = on_chain[v] = 1;
        bool closed_cycle = false;
        for (int side = 0; side < 2 && !closed_cycle; ++side) {
            Vertex prev = side == 0 ? u : v;
            Vertex cur = side == 0 ? v : u;
            uint16_t want = b;
            while (true) {
                Vertex next = -1;
                for (Vertex w = 0; w < n; ++w) {
                    if (w == cur || w == prev) continue;
                    if (at(cur, w) == want) {
                        next = w;
                        break;
                    }
                }
                if (next < 0) break;  // path component ends here
                chain.emplace_back(cur, next);
                if (want == a) ++na; else ++nb;
                if (on_chain[next]) {  // only the seed endpoint can recur
                    closed_cycle = true;
                    break;
                }
                on_chain[next] = 1;
                prev = cur;
                cur = next;
                want = want == a ? b : a;
            }
        }

        if (class_size[a] - na + nb <= 0 || class_size[b] - nb + na <= 0) continue;
        for (auto [x, y] : chain) {
            uint16_t f = at(x, y) == a ? b : a;
            at(x, y) = f;
            at(y, x) = f;
        }
        class_size[a] += nb - na;
        class_size[b] += na - nb;
        for (auto [x, y] : chain) {
            for (Vertex w : {x, y}) {
                Bitset p(k);
                for (Vertex t = 0; t < n; ++t)
                    if (t != w) p.set(at(w, t));
                out.palette_[w] = p;
            }
        }
    }
    return out;
}

ColoredGraph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::round_robin: return round_robin(spec.n);
        case GeneratorKind::cyclic: return cyclic(spec.n);
        case GeneratorKind::kempe_shuffle: {
            if (!spec.base) raise(Errc::bad_config, "kempe_shuffle needs a base spec");
            return kempe_shuffle(generate(*spec.base), spec.steps, spec.seed);
        }
    }
    raise(Errc::bad_config, "unknown generator kind");
}

}  // namespace rainbow
