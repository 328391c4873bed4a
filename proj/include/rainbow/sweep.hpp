#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/core.hpp"
#include "rainbow/generators.hpp"

namespace rainbow {

/// The data-parallel kernels run either serially (the reference the tests
/// compare against) or across OpenMP threads. Both produce identical
/// output; results are merged in index order regardless of scheduling.
enum class Execution { serial, parallel };

/// Longest fixpoint witness over every single-vertex seed; ties go to the
/// smallest seed vertex.
RainbowPath best_witness(const ColoredGraph& g, int rotation_budget,
                         Execution ex = Execution::parallel);

enum class Family { round_robin, cyclic, shuffle };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// One benchmark/verification instance. shuffle derives its base from the
/// parity of n (round_robin for even, cyclic for odd).
struct TrialSpec {
    Family family = Family::cyclic;
    int n = 0;
    int steps = 0;       // shuffle only
    uint64_t seed = 0;   // shuffle only
    int rotation_budget = 4096;
    bool want_exact = false;
    uint64_t node_limit = 50'000'000;
};

struct TrialResult {
    TrialSpec spec;
    int witness_length = 0;  // engine witness
    std::optional<int> exact_length;
    bool exact_optimal = false;
    BoundReport report;  // against the better of the two witnesses
    double millis = 0.0;
};

ColoredGraph build_instance(const TrialSpec& spec);

TrialResult run_trial(const TrialSpec& spec);

/// Evaluates the given trials; the parallel variant distributes whole
/// trials across threads and writes each result to its input slot.
std::vector<TrialResult> run_trials(std::span<const TrialSpec> specs,
                                    Execution ex = Execution::parallel);

/// CSV with columns n,family,seed,witness_len,exact_len,gm,cd,
/// main_abstract,main_proof,verdict and, when with_timing is set, a
/// trailing millis column. Rows follow the input order; everything except
/// millis is a pure function of the specs.
std::string trials_to_csv(std::span<const TrialResult> rows, bool with_timing = true);

}  // namespace rainbow
