#include "rainbow/hunter.hpp"

#include <cmath>

#include "rainbow/bounds.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

namespace {

int evaluate(const ColoredGraph& g, const HuntConfig& cfg) {
    if (cfg.evaluator == HunterEvaluator::exact) {
        SearchResult r = longest_rainbow_path_exact(g, {cfg.node_limit, {}});
        return r.length;
    }
    RainbowPath seed = RainbowPath::from_vertices(g, {0});
    return extend_to_fixpoint(g, seed, cfg.rotation_budget).first.length();
}

}  // namespace

HuntResult hunt(const HuntConfig& cfg) {
    if (cfg.iterations < 0) raise(Errc::bad_config, "negative iteration count");
    if (!(cfg.decay > 0.0 && cfg.decay <= 1.0)) raise(Errc::bad_config, "decay must be in (0,1]");
    if (cfg.evaluator == HunterEvaluator::exact && cfg.n > 12)
        raise(Errc::evaluator_mismatch,
              "exact evaluator supports n <= 12, got " + std::to_string(cfg.n));

    ColoredGraph current = cfg.n % 2 == 0 ? round_robin(cfg.n) : cyclic(cfg.n);
    int current_value = evaluate(current, cfg);

    HuntResult result{current, current_value, {{0, current_value}}, false};

    SplitMix64 rng(cfg.seed);
    double temperature = cfg.initial_temperature;
    for (long it = 1; it <= cfg.iterations; ++it) {
        ColoredGraph proposal = kempe_shuffle(current, 1, rng.next());
        int value = evaluate(proposal, cfg);
        int delta = value - current_value;
        bool accept = delta <= 0;
        if (!accept && temperature > 0.0) {
            double p = std::exp(-static_cast<double>(delta) / temperature);
            double roll = static_cast<double>(rng.next() >> 11) * 0x1p-53;
            accept = roll < p;
        }
        if (accept) {
            current = std::move(proposal);
            current_value = value;
            if (current_value < result.best_value) {
                result.best_coloring = current;
                result.best_value = current_value;
                result.history.push_back({it, current_value});
            }
        }
        temperature *= cfg.decay;
    }

    int floor = bound_gm(cfg.n);
    if (cfg.n >= 20)
        floor = std::max(floor, static_cast<int>(
                                    std::ceil(bound_main(cfg.n, MainVariant::derivation))));
    // Engine witnesses may undershoot the true longest path, so only the
    // certifying evaluator can flag a violation.
    if (cfg.evaluator == HunterEvaluator::exact && result.best_value < floor)
        result.bound_violation = true;
    return result;
}

}  // namespace rainbow
