#include "rainbow/solver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

struct PairHash {
    size_t operator()(const std::pair<uint64_t, int>& k) const {
        uint64_t h = k.first * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(k.second);
        h ^= h >> 29;
        return static_cast<size_t>(h);
    }
};

// Cap on cached color sets; past it the table stops growing. Pruning stays
// sound either way: an entry only suppresses re-expanding a state whose
// subtree was already walked.
constexpr size_t kMaxCachedSets = 1u << 22;

struct PathSearch {
    const ColoredGraph& g;
    const int n;
    const int upper;  // ceiling on path length
    const SearchBudget& budget;
    std::optional<Clock::time_point> deadline;

    uint64_t nodes = 0;
    bool truncated = false;
    int best_len = -1;
    std::vector<Vertex> best;  // canonical orientation

    std::vector<Vertex> cur;
    Bitset visited;
    Bitset used;

    // (visited word, endpoint) -> color sets already expanded there. Only
    // engaged when the visited set fits one word.
    const bool use_cache;
    size_t cached_sets = 0;
    std::unordered_map<std::pair<uint64_t, int>, std::vector<Bitset>, PairHash> cache;

    PathSearch(const ColoredGraph& graph, const SearchBudget& b)
        : g(graph),
          n(graph.vertex_count()),
          upper(std::min(n - 1, graph.color_count())),
          budget(b),
          visited(n),
          used(graph.color_count()),
          use_cache(n <= 64) {
        if (b.time_limit_seconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*b.time_limit_seconds));
        cur.reserve(n);
    }

    bool out_of_budget() {
        if (nodes >= budget.node_limit) return true;
        if (deadline && (nodes & 0xfff) == 0 && Clock::now() >= *deadline) return true;
        return false;
    }

    void record() {
        int len = static_cast<int>(cur.size()) - 1;
        if (len < best_len) return;
        std::vector<Vertex> canon = canonical_orientation(cur);
        if (len > best_len || canon < best) {
            best_len = len;
            best = std::move(canon);
        }
    }

    uint64_t visited_word() const {
        uint64_t w = 0;
        for (Vertex v : cur) w |= uint64_t{1} << v;
        return w;
    }

    void dfs(Vertex end) {
        if (truncated) return;
        if (out_of_budget()) {
            truncated = true;
            return;
        }
        ++nodes;
        record();
        int len = static_cast<int>(cur.size()) - 1;
        if (best_len >= upper) return;
        if (len + (n - static_cast<int>(cur.size())) <= best_len) return;

        if (use_cache) {
            auto key = std::make_pair(visited_word(), static_cast<int>(end));
            auto& sets = cache[key];
            for (const Bitset& s : sets)
                if (used.is_subset_of(s)) return;  // equal length forces equality
            if (cached_sets < kMaxCachedSets) {
                sets.push_back(used);
                ++cached_sets;
            }
        }

        for (Vertex v = 0; v < n; ++v) {
            if (visited.test(v)) continue;
            Color c = g.color_unchecked(end, v);
            if (used.test(c)) continue;
            visited.set(v);
            used.set(c);
            cur.push_back(v);
            dfs(v);
            cur.pop_back();
            used.reset(c);
            visited.reset(v);
            if (truncated || best_len >= upper) return;
        }
    }

    SearchResult run() {
        for (Vertex s = 0; s < n && !truncated && best_len < upper; ++s) {
            cur.assign(1, s);
            visited.clear();
            visited.set(s);
            used.clear();
            dfs(s);
        }
        SearchResult r;
        r.vertices = best;
        r.length = best_len;
        r.optimal = !truncated || best_len >= upper;
        r.nodes_expanded = nodes;
        return r;
    }
};

struct CycleSearch {
    const ColoredGraph& g;
    const int n;
    const int upper;  // ceiling on cycle length
    const SearchBudget& budget;
    std::optional<Clock::time_point> deadline;

    uint64_t nodes = 0;
    bool truncated = false;
    int best_len = 0;
    std::vector<Vertex> best;

    Vertex root = 0;
    std::vector<Vertex> cur;
    Bitset visited;
    Bitset used;

    CycleSearch(const ColoredGraph& graph, const SearchBudget& b)
        : g(graph),
          n(graph.vertex_count()),
          upper(std::min(n, graph.color_count())),
          budget(b),
          visited(n),
          used(graph.color_count()) {
        if (b.time_limit_seconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*b.time_limit_seconds));
        cur.reserve(n);
    }

    bool out_of_budget() {
        if (nodes >= budget.node_limit) return true;
        if (deadline && (nodes & 0xfff) == 0 && Clock::now() >= *deadline) return true;
        return false;
    }

    // cur[0] == root is the cycle's smallest vertex; every other vertex is
    // larger, so each cycle is generated from exactly one root.
    void consider_close(Vertex end) {
        if (cur.size() < 3) return;
        Color c = g.color_unchecked(end, root);
        if (used.test(c)) return;
        int len = static_cast<int>(cur.size());
        if (len < best_len) return;
        // Canonical direction: keep the lex-smaller of the two traversals.
        std::vector<Vertex> rev;
        rev.reserve(cur.size());
        rev.push_back(root);
        rev.insert(rev.end(), cur.rbegin(), cur.rend() - 1);
        const std::vector<Vertex>& canon = std::min(cur, rev);
        if (len > best_len || canon < best) {
            best_len = len;
            best = canon;
        }
    }

    void dfs(Vertex end) {
        if (truncated) return;
        if (out_of_budget()) {
            truncated = true;
            return;
        }
        ++nodes;
        consider_close(end);
        if (best_len >= upper) return;
        int avail = (n - 1 - root) - (static_cast<int>(cur.size()) - 1);
        if (static_cast<int>(cur.size()) + avail <= best_len) return;

        for (Vertex v = root + 1; v < n; ++v) {
            if (visited.test(v)) continue;
            Color c = g.color_unchecked(end, v);
            if (used.test(c)) continue;
            visited.set(v);
            used.set(c);
            cur.push_back(v);
            dfs(v);
            cur.pop_back();
            used.reset(c);
            visited.reset(v);
            if (truncated || best_len >= upper) return;
        }
    }

    SearchResult run() {
        for (root = 0; root < n - 2 && !truncated && best_len < upper; ++root) {
            cur.assign(1, root);
            visited.clear();
            visited.set(root);
            used.clear();
            dfs(root);
        }
        SearchResult r;
        r.vertices = best;
        r.length = best_len;
        r.optimal = !truncated || best_len >= upper;
        r.is_cycle = true;
        r.nodes_expanded = nodes;
        return r;
    }
};

}  // namespace

SearchResult longest_rainbow_path_exact(const ColoredGraph& g, const SearchBudget& budget) {
    if (budget.node_limit < 1) raise(Errc::bad_config, "node_limit must be at least 1");
    PathSearch s(g, budget);
    return s.run();
}

SearchResult largest_rainbow_cycle_exact(const ColoredGraph& g, const SearchBudget& budget) {
    if (budget.node_limit < 1) raise(Errc::bad_config, "node_limit must be at least 1");
    if (g.vertex_count() < 3) raise(Errc::bad_config, "cycles need n >= 3");
    CycleSearch s(g, budget);
    return s.run();
}

namespace {

void oracle_extend(const ColoredGraph& g, std::vector<Vertex>& seq, std::vector<char>& used_v,
                   std::vector<char>& used_c, int& best) {
    best = std::max(best, static_cast<int>(seq.size()) - 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (used_v[v]) continue;
        int c = -1;
        if (!seq.empty()) {
            c = g.color(seq.back(), v);
            if (used_c[c]) continue;
        }
        used_v[v] = 1;
        if (c >= 0) used_c[c] = 1;
        seq.push_back(v);
        oracle_extend(g, seq, used_v, used_c, best);
        seq.pop_back();
        if (c >= 0) used_c[c] = 0;
        used_v[v] = 0;
    }
}

}  // namespace

int brute_force_oracle(const ColoredGraph& g) {
    if (g.vertex_count() > 9)
        raise(Errc::too_large, "oracle is limited to n <= 9, got " +
                                   std::to_string(g.vertex_count()));
    std::vector<Vertex> seq;
    std::vector<char> used_v(g.vertex_count(), 0);
    std::vector<char> used_c(g.color_count(), 0);
    int best = 0;
    oracle_extend(g, seq, used_v, used_c, best);
    return best;
}

}  // namespace rainbow
