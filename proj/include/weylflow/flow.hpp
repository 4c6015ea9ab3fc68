#pragma once

#include <span>
#include <vector>

#include "weylflow/modes.hpp"

namespace weylflow {

/// The lift of phi_1 . rho_1 to states: the monomial
/// a(-m_1-1)...a(-m_k-1) a*(-n_1)...a*(-n_l) |0> maps to
/// (-1)^l a(-n_1-1)...a(-n_l-1) a*(-m_1)...a*(-m_k) |0>, extended linearly.
/// Intertwines omega_mu with omega_{1-mu}.
State flow_iso(const State& s);

/// True iff flow_iso(u_n v) = flow_iso(u)_n flow_iso(v), exactly. Both
/// sides are computed by the mode engine.
bool flow_hom_check(const State& u, const State& v, long n, const ModeEngine& engine);

/// Image of one generator mode under a Weyl-algebra automorphism.
struct FlowedMode {
    GaussRat coeff;
    GenMode mode;
};

/// Spectral flow rho_s: a(n) -> a(n+s), a*(n) -> a*(n-s).
FlowedMode rho_auto(int s, GenMode g);

/// phi_t: a(n) -> t a*(n), a*(n) -> -t^{-1} a(n). Rejects t = 0.
FlowedMode phi_auto(const GaussRat& t, GenMode g);

/// Rewrites an abstract mode word under phi_t . rho_s, one entry per input
/// mode (coefficients multiply when composing words).
std::vector<FlowedMode> spectral_flow(int s, const GaussRat& t, std::span<const GenMode> word);

} // namespace weylflow
