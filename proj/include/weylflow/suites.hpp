#pragma once

#include <string>
#include <vector>

#include "weylflow/fock.hpp"
#include "weylflow/gaussian.hpp"
#include "weylflow/rational.hpp"

namespace weylflow {

struct CheckLine {
    std::string name;
    bool passed = true;
    std::string detail; // witness on failure, count/info on success
};

struct SuiteReport {
    std::string suite;
    std::string mu;
    std::vector<CheckLine> lines;

    bool all_passed() const {
        for (const auto& l : lines)
            if (!l.passed) return false;
        return true;
    }
};

/// Virasoro relations [L(m), L(n)] = (m-n)L(m+n) + (m^3-m)/12 c delta_{m,-n}
/// on every enumerated monomial with Re(weight) <= cap, m, n in the window.
SuiteReport run_virasoro_suite(const GaussRat& mu, const Rat& cap, int wlo, int whi);

/// Mode-engine oracles: two-path agreement, weight bookkeeping, D-operator
/// identity, generator brackets with L^mu(0), lower truncation, and the
/// conformal-family decomposition omega_mu = omega - mu D(beta).
SuiteReport run_modes_suite(const GaussRat& mu, const Rat& cap, int wlo, int whi);

/// Conformal-flow isomorphism: c_mu = c_{1-mu}, flow_iso(omega_mu) =
/// omega_{1-mu}, homomorphism property on monomial pairs, involution sign,
/// and bracket preservation for rho_s and phi_t.
SuiteReport run_flow_suite(const GaussRat& mu, const Rat& cap, int wlo, int whi);

/// Region classification coherence, V^r split, Omega certificates and the
/// degree dichotomy scan.
SuiteReport run_grading_suite(const GaussRat& mu, const Rat& cap, int wlo, int whi,
                              int scan_len);

/// Zhu identities at truncation: the delta_{r,0} gate, (D+L)u in the O-span,
/// residue spot checks, both commutation identities, filtration containment,
/// gr-commutativity, kernel containment, and gr-dimension consistency.
SuiteReport run_zhu_props_suite(const GaussRat& mu, const TruncConfig& cfg,
                                const Rat& report_cap);

} // namespace weylflow
