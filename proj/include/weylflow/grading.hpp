#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylflow/fock.hpp"
#include "weylflow/modes.hpp"

namespace weylflow {

enum class RegionTag { OmegaVoa, StripConfOmega, NotOmegaGenerated };

enum class RegionSubcase {
    Case1Integer,     // mu in {0, 1}
    Case2RealStrip,   // Im = 0, 0 < Re < 1
    Case3EdgeImag,    // Im != 0, Re in {0, 1}
    Case4aDiamond,    // Im != 0, 0 < Re < 1, inside the diamond
    Case4bStripWideIm,// Im != 0, 0 < Re < 1, outside the diamond
    Case5Outside      // Re < 0 or Re > 1
};

enum class OmegaDescription { TrivialVacuumLine, InfiniteFamily, Zero };

struct RegionClass {
    RegionTag tag;
    RegionSubcase subcase;
    OmegaDescription omega;

    auto operator<=>(const RegionClass&) const = default;
};

const char* to_string(RegionTag t);
const char* to_string(RegionSubcase s);
const char* to_string(OmegaDescription o);

/// Exact classification of the conformal structure at mu.
///
/// The vertex-operator-algebra diamond is the union of
///   (i)  0 < Re(mu) <= 1/2 and |Im(mu)| <= Re(mu), and
///   (ii) 0 < Re(1-mu) < 1/2 and |Im(mu)| <= Re(1-mu);
/// note (i) closes the Re(mu) = 1/2 line while (ii) is strict there, so on
/// that line condition (i) is the one that applies. The tags are symmetric
/// under mu <-> 1-mu.
RegionClass classify(const GaussRat& mu);

struct VrBlock {
    GaussRat r; // |u| - ceil(Re|u|), evaluated
    std::vector<Monomial> members;
};

/// Partition of basis_up_to(mu, cap) by r-value; the r = 0 block is V^0.
std::vector<VrBlock> vr_split(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg);

struct OmegaOutcome {
    bool in_omega = false; // qualified: IN_OMEGA_UP_TO_TRUNCATION
    // First (u, n) with u_n v != 0, n != |u|-1 and n >= Re(|u|)-1.
    // A violation is an absolute certificate, not truncation-qualified.
    std::optional<std::pair<Monomial, long>> violation;
};

/// Scans u over basis_up_to(mu, degCap) (or the strong generators when mu
/// is outside the strip, where the basis is not enumerable) and n over the
/// mode window.
OmegaOutcome omega_test(const GaussRat& mu, const State& v, const TruncConfig& cfg);

/// Degree of a monomial. For 0 <= Re(mu) <= 1 the degree grading and the
/// weight grading coincide; outside the strip the grading is undefined and
/// a DomainError is thrown.
WeightExpr degree(const GaussRat& mu, const Monomial& m);

struct GradingScanReport {
    long words_scanned = 0;
    long nonzero_words = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

/// Brute-force scan of the degree dichotomy: for every word
/// g^k_{n_k} ... g^1_{n_1} u^0 with g^j in {a(-1)|0>, a*(0)|0>}, u^0 in the
/// computed Omega, lengths 1..max_len and n_j in the mode window, a nonzero
/// result must have shift sum exactly 0 or real part > 0.
GradingScanReport degree_dichotomy_scan(const GaussRat& mu, const TruncConfig& cfg, int max_len);

} // namespace weylflow
