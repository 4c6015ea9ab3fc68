#include "weylflow/flow.hpp"

#include "weylflow/errors.hpp"

namespace weylflow {

State flow_iso(const State& s) {
    State out;
    for (const auto& [mono, coeff] : s.terms()) {
        // a-derivative orders become a*-depths and vice versa
        std::vector<int> new_a(mono.astar_modes());
        std::vector<int> new_astar(mono.a_modes());
        GaussRat c = coeff;
        if (mono.astar_modes().size() % 2 != 0) c = -c; // the (-1)^l sign
        out.add_term(Monomial(std::move(new_a), std::move(new_astar)), c);
    }
    return out;
}

bool flow_hom_check(const State& u, const State& v, long n, const ModeEngine& engine) {
    State lhs = flow_iso(engine.mode_of(u, n, v));
    State rhs = engine.mode_of(flow_iso(u), n, flow_iso(v));
    return lhs == rhs;
}

FlowedMode rho_auto(int s, GenMode g) {
    if (g.kind == GenKind::A) return {GaussRat(1), {GenKind::A, g.index + s}};
    return {GaussRat(1), {GenKind::AStar, g.index - s}};
}

FlowedMode phi_auto(const GaussRat& t, GenMode g) {
    if (t.is_zero()) throw DomainError("phi_t requires t != 0");
    if (g.kind == GenKind::A) return {t, {GenKind::AStar, g.index}};
    return {-t.inverse(), {GenKind::A, g.index}};
}

std::vector<FlowedMode> spectral_flow(int s, const GaussRat& t, std::span<const GenMode> word) {
    std::vector<FlowedMode> out;
    out.reserve(word.size());
    for (const GenMode& g : word) {
        FlowedMode shifted = rho_auto(s, g);
        FlowedMode swapped = phi_auto(t, shifted.mode);
        out.push_back({shifted.coeff * swapped.coeff, swapped.mode});
    }
    return out;
}

} // namespace weylflow
