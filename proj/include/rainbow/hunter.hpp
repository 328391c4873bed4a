#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

enum class HunterEvaluator {
    exact,   // certified longest rainbow path; n <= 12
    engine,  // fixpoint witness from seed vertex 0; heuristic floor only
};

struct HuntConfig {
    int n = 8;
    long iterations = 0;
    uint64_t seed = 0;
    double initial_temperature = 2.0;
    double decay = 0.999;
    HunterEvaluator evaluator = HunterEvaluator::exact;
    int rotation_budget = 512;         // engine evaluator
    uint64_t node_limit = 50'000'000;  // exact evaluator
};

struct HuntEvent {
    long iteration = 0;
    int value = 0;
};

struct HuntResult {
    ColoredGraph best_coloring;
    int best_value = 0;
    std::vector<HuntEvent> history;  // improvements, starting with iteration 0
    /// best_value fell below a theorem threshold. The theorems make this
    /// impossible for a correct evaluator, so a set flag means a bug; the
    /// CLI writes a reproduction artifact instead of failing silently.
    bool bound_violation = false;
};

/// Simulated annealing over proper colorings to minimize the longest
/// rainbow path. Starts from the deterministic workhorse for n's parity;
/// each proposal is one Kempe swap; acceptance follows exp(-delta/T) with
/// a geometric temperature schedule. Deterministic given the config.
HuntResult hunt(const HuntConfig& config);

}  // namespace rainbow
