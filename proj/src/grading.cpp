#include "weylflow/grading.hpp"

#include <cstdlib>
#include <functional>
#include <map>

#include "weylflow/errors.hpp"

namespace weylflow {

const char* to_string(RegionTag t) {
    switch (t) {
        case RegionTag::OmegaVoa: return "OMEGA_VOA";
        case RegionTag::StripConfOmega: return "STRIP_CONF_OMEGA";
        case RegionTag::NotOmegaGenerated: return "NOT_OMEGA_GENERATED";
    }
    return "?";
}

const char* to_string(RegionSubcase s) {
    switch (s) {
        case RegionSubcase::Case1Integer: return "CASE1_INTEGER";
        case RegionSubcase::Case2RealStrip: return "CASE2_REAL_STRIP";
        case RegionSubcase::Case3EdgeImag: return "CASE3_EDGE_IMAG";
        case RegionSubcase::Case4aDiamond: return "CASE4A_DIAMOND";
        case RegionSubcase::Case4bStripWideIm: return "CASE4B_STRIP_WIDE_IM";
        case RegionSubcase::Case5Outside: return "CASE5_OUTSIDE";
    }
    return "?";
}

const char* to_string(OmegaDescription o) {
    switch (o) {
        case OmegaDescription::TrivialVacuumLine: return "TRIVIAL_VACUUM_LINE";
        case OmegaDescription::InfiniteFamily: return "INFINITE_FAMILY";
        case OmegaDescription::Zero: return "ZERO";
    }
    return "?";
}

RegionClass classify(const GaussRat& mu) {
    const Rat p = mu.re();
    const Rat q = mu.im();
    const Rat aq = q.sign() < 0 ? -q : q;
    const Rat zero(0), one(1), half(1, 2);

    if (p < zero || p > one)
        return {RegionTag::NotOmegaGenerated, RegionSubcase::Case5Outside,
                OmegaDescription::Zero};
    if (q.is_zero() && (p == zero || p == one))
        return {RegionTag::StripConfOmega, RegionSubcase::Case1Integer,
                OmegaDescription::InfiniteFamily};

    // conditions I(i)/(ii) of the classification, verbatim strictness
    const bool cond_i = p > zero && p <= half && aq <= p;
    const bool cond_ii = (one - p) > zero && (one - p) < half && aq <= one - p;
    const bool diamond = cond_i || cond_ii;

    if (q.is_zero())
        return {diamond ? RegionTag::OmegaVoa : RegionTag::StripConfOmega,
                RegionSubcase::Case2RealStrip, OmegaDescription::TrivialVacuumLine};
    if (p == zero || p == one)
        return {RegionTag::StripConfOmega, RegionSubcase::Case3EdgeImag,
                OmegaDescription::TrivialVacuumLine};
    if (diamond)
        return {RegionTag::OmegaVoa, RegionSubcase::Case4aDiamond,
                OmegaDescription::TrivialVacuumLine};
    return {RegionTag::StripConfOmega, RegionSubcase::Case4bStripWideIm,
            OmegaDescription::TrivialVacuumLine};
}

std::vector<VrBlock> vr_split(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg) {
    BasisResult basis = basis_up_to(mu, cap, cfg);
    std::map<GaussRat, std::vector<Monomial>> blocks;
    for (const Monomial& m : basis.monomials) {
        GaussRat w = m.weight().evaluate(mu);
        GaussRat r = w - GaussRat(Rat(ceil_re(w)));
        blocks[r].push_back(m);
    }
    std::vector<VrBlock> out;
    out.reserve(blocks.size());
    for (auto& [r, members] : blocks) out.push_back({r, std::move(members)});
    return out;
}

OmegaOutcome omega_test(const GaussRat& mu, const State& v, const TruncConfig& cfg) {
    if (!v.homogeneous_at(mu)) throw DomainError("omega_test requires a homogeneous state");
    if (v.is_zero()) return {true, std::nullopt};

    std::vector<Monomial> candidates;
    const bool in_strip = mu.re() >= Rat(0) && mu.re() <= Rat(1);
    if (in_strip) {
        candidates = basis_up_to(mu, cfg.deg_cap, cfg).monomials;
    } else {
        // The basis is not enumerable outside the strip; the known
        // violation witnesses live among the strong generators.
        candidates = {Monomial({0}, {}), Monomial({}, {0})};
    }

    // Mode actions can legitimately raise weights well past degCap here;
    // the scan engine gets a cap wide enough that overflow cannot fire.
    long window_abs = std::max(std::abs(cfg.window_lo), std::abs(cfg.window_hi));
    Rat wide = cfg.deg_cap + cfg.deg_cap + Rat(window_abs + 2);
    ModeEngine engine(mu, TruncConfig(wide, cfg.pair_budget, cfg.window_lo, cfg.window_hi));

    for (const Monomial& u : candidates) {
        GaussRat gamma = u.weight().evaluate(mu);
        for (long n = cfg.window_lo; n <= cfg.window_hi; ++n) {
            if (GaussRat(Rat(n)) == gamma - GaussRat(1)) continue; // n = |u|-1 allowed
            if (Rat(n) < gamma.re() - Rat(1)) continue;           // n < Re|u|-1 allowed
            State result = engine.mode_of(State(u), n, v);
            if (!result.is_zero()) return {false, std::make_pair(u, n)};
        }
    }
    return {true, std::nullopt};
}

WeightExpr degree(const GaussRat& mu, const Monomial& m) {
    if (mu.re() < Rat(0) || mu.re() > Rat(1))
        throw DomainError("degree grading undefined outside 0 <= Re(mu) <= 1 (Omega = 0)");
    // Inside the strip the weight spaces are the degree spaces.
    return m.weight();
}

GradingScanReport degree_dichotomy_scan(const GaussRat& mu, const TruncConfig& cfg, int max_len) {
    if (mu.re() < Rat(0) || mu.re() > Rat(1))
        throw DomainError("grading scan requires mu in the strip");

    // Computed Omega at truncation: basis states passing omega_test.
    std::vector<Monomial> omega_basis;
    for (const Monomial& m : basis_up_to(mu, cfg.deg_cap, cfg).monomials)
        if (omega_test(mu, State(m), cfg).in_omega) omega_basis.push_back(m);

    GradingScanReport report;
    // generator g applied with index n: a(-1)|0> acts as a(n),
    // a*(0)|0> acts as a*(n+1); weight shifts are -n-mu and mu-n-1.
    struct Gen {
        GenKind kind;
        WeightExpr weight;
    };
    const Gen gens[2] = {{GenKind::A, {1, -1}}, {GenKind::AStar, {0, 1}}};

    std::function<void(int, const State&, const WeightExpr&, std::string)> extend =
        [&](int len, const State& current, const WeightExpr& shift_sum, std::string word) {
            if (len > 0) {
                ++report.words_scanned;
                if (!current.is_zero()) {
                    ++report.nonzero_words;
                    GaussRat total = shift_sum.evaluate(mu);
                    bool ok = total.is_zero() || total.re() > Rat(0);
                    if (!ok)
                        report.counterexamples.push_back(word + " -> shift sum " + total.str());
                }
            }
            if (len == max_len) return;
            for (const Gen& g : gens) {
                for (long n = cfg.window_lo; n <= cfg.window_hi; ++n) {
                    GenMode mode{g.kind, static_cast<int>(g.kind == GenKind::A ? n : n + 1)};
                    State next = current.is_zero() ? State::zero() : act_gen(mode, current);
                    WeightExpr shift = g.weight;
                    shift.int_part -= n + 1;
                    std::string label = (g.kind == GenKind::A ? "A_" : "S_") + std::to_string(n);
                    extend(len + 1, next, shift_sum + shift, label + " " + word);
                }
            }
        };

    for (const Monomial& u0 : omega_basis)
        extend(0, State(u0), WeightExpr{0, 0}, u0.str());
    return report;
}

} // namespace weylflow
