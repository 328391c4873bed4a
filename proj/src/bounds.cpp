#include "rainbow/bounds.hpp"

#include <cmath>

namespace rainbow {

double bound_main(int n, MainVariant variant) {
    if (n < 20) raise(Errc::not_applicable, "main bound needs n >= 20, got " + std::to_string(n));
    double c = variant == MainVariant::statement ? 39.0 / 11.0 : 39.0 / 16.0;
    return 0.75 * n - 0.25 * std::sqrt(n / 2.0 - c) - 11.0 / 16.0;
}

int bound_gm(int n) {
    if (n < 2) raise(Errc::bad_config, "n must be at least 2");
    return (2 * n + 3) / 3 - 1;  // ceil((2n+1)/3) - 1
}

int bound_color_degree(int k) {
    if (k < 1) raise(Errc::bad_config, "color degree must be at least 1");
    return std::min((2 * k + 2) / 3 + 1, k - 1);  // min{ceil(2k/3)+1, k-1}
}

CycleCaseBounds bound_cycle_case(int n) {
    if (n < 20)
        raise(Errc::not_applicable, "cycle-case bound needs n >= 20, got " + std::to_string(n));
    return {0.75 * n - 1.0, (3.0 * n - 4.0) / 4.0};
}

BoundReport verify_witness(const ColoredGraph& g, const RainbowPath& witness,
                           const PathStructure& structure, bool certified_longest) {
    const int n = g.vertex_count();
    try {
        if (!is_rainbow(g, witness.vertices())) raise(Errc::invalid_witness, "witness not rainbow");
    } catch (const Error& e) {
        if (e.code() == Errc::invalid_witness) throw;
        raise(Errc::invalid_witness, e.what());
    }

    BoundReport r;
    r.n = n;
    r.witness_length = witness.length();
    r.gm = bound_gm(n);
    r.cd = bound_color_degree(n - 1);
    r.effective = std::max(r.gm, r.cd);
    r.gm_pass = r.witness_length >= r.gm;
    r.cd_pass = r.witness_length >= r.cd;

    if (n >= 20) {
        r.main_statement = bound_main(n, MainVariant::statement);
        r.main_derivation = bound_main(n, MainVariant::derivation);
        int main_threshold =
            static_cast<int>(std::ceil(std::min(*r.main_statement, *r.main_derivation)));
        r.effective = std::max(r.effective, main_threshold);
        r.main_pass = r.witness_length >= main_threshold;

        CycleCaseBounds cc = bound_cycle_case(n);
        r.cycle_case_bound = cc.cycle_case;
        r.cycle_case_companion = cc.companion;
        if (certified_longest && structure.closes_rainbow_cycle)
            r.cycle_case_pass = r.witness_length >= static_cast<int>(std::ceil(cc.cycle_case));
    }
    return r;
}

}  // namespace rainbow
