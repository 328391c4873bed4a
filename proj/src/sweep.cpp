#include "rainbow/sweep.hpp"

#include <chrono>
#include <cstdio>

#include "rainbow/engine.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

RainbowPath best_witness(const ColoredGraph& g, int rotation_budget, Execution ex) {
    const int n = g.vertex_count();
    std::vector<std::optional<RainbowPath>> found(n);

    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (Vertex v = 0; v < n; ++v) {
            RainbowPath seed = RainbowPath::from_vertices(g, {v});
            found[v] = extend_to_fixpoint(g, seed, rotation_budget).first;
        }
    } else {
        for (Vertex v = 0; v < n; ++v) {
            RainbowPath seed = RainbowPath::from_vertices(g, {v});
            found[v] = extend_to_fixpoint(g, seed, rotation_budget).first;
        }
    }

    int best = 0;
    for (Vertex v = 1; v < n; ++v)
        if (found[v]->length() > found[best]->length()) best = v;
    return *found[best];
}

const char* family_name(Family f) {
    switch (f) {
        case Family::round_robin: return "round-robin";
        case Family::cyclic: return "cyclic";
        case Family::shuffle: return "shuffle";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "round-robin" || name == "round_robin") return Family::round_robin;
    if (name == "cyclic") return Family::cyclic;
    if (name == "shuffle") return Family::shuffle;
    return std::nullopt;
}

ColoredGraph build_instance(const TrialSpec& spec) {
    switch (spec.family) {
        case Family::round_robin: return round_robin(spec.n);
        case Family::cyclic: return cyclic(spec.n);
        case Family::shuffle: {
            ColoredGraph base = spec.n % 2 == 0 ? round_robin(spec.n) : cyclic(spec.n);
            return kempe_shuffle(base, spec.steps, spec.seed);
        }
    }
    raise(Errc::bad_config, "unknown family");
}

TrialResult run_trial(const TrialSpec& spec) {
    auto start = std::chrono::steady_clock::now();
    ColoredGraph g = build_instance(spec);

    // Trials run whole-instance parallel, so the inner sweep stays serial.
    RainbowPath witness = best_witness(g, spec.rotation_budget, Execution::serial);

    TrialResult r;
    r.spec = spec;
    r.witness_length = witness.length();
    bool certified = false;
    if (spec.want_exact) {
        SearchResult exact = longest_rainbow_path_exact(g, {spec.node_limit, {}});
        r.exact_length = exact.length;
        r.exact_optimal = exact.optimal;
        if (exact.length > witness.length())
            witness = RainbowPath::from_vertices(g, exact.vertices);
        certified = exact.optimal;
    }
    r.report = verify_witness(g, witness, analyze_structure(g, witness), certified);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

std::vector<TrialResult> run_trials(std::span<const TrialSpec> specs, Execution ex) {
    std::vector<TrialResult> out(specs.size());
    if (ex == Execution::parallel) {
        const long count = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) out[i] = run_trial(specs[i]);
    } else {
        for (size_t i = 0; i < specs.size(); ++i) out[i] = run_trial(specs[i]);
    }
    return out;
}

std::string trials_to_csv(std::span<const TrialResult> rows, bool with_timing) {
    std::string csv = "n,family,seed,witness_len,exact_len,gm,cd,main_abstract,main_proof,verdict";
    if (with_timing) csv += ",millis";
    csv += "\n";
    char buf[64];
    for (const TrialResult& r : rows) {
        csv += std::to_string(r.spec.n);
        csv += ',';
        csv += family_name(r.spec.family);
        csv += ',';
        csv += std::to_string(r.spec.seed);
        csv += ',';
        csv += std::to_string(r.witness_length);
        csv += ',';
        if (r.exact_length) csv += std::to_string(*r.exact_length);
        csv += ',';
        csv += std::to_string(r.report.gm);
        csv += ',';
        csv += std::to_string(r.report.cd);
        csv += ',';
        if (r.report.main_statement) {
            std::snprintf(buf, sizeof buf, "%.6f", *r.report.main_statement);
            csv += buf;
        }
        csv += ',';
        if (r.report.main_derivation) {
            std::snprintf(buf, sizeof buf, "%.6f", *r.report.main_derivation);
            csv += buf;
        }
        csv += ',';
        csv += r.report.unconditional_pass() ? "pass" : "fail";
        if (with_timing) {
            std::snprintf(buf, sizeof buf, ",%.3f", r.millis);
            csv += buf;
        }
        csv += '\n';
    }
    return csv;
}

}  // namespace rainbow
