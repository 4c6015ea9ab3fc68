#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "weylflow/fock.hpp"

namespace weylflow {

enum class GenKind { A, AStar };

/// A single Weyl-algebra mode a(n) or a*(n). Creation modes are a(n) with
/// n <= -1 and a*(n) with n <= 0; everything else annihilates down to the
/// vacuum.
struct GenMode {
    GenKind kind;
    int index;

    bool is_creation() const {
        return kind == GenKind::A ? index <= -1 : index <= 0;
    }
    std::string str() const {
        return (kind == GenKind::A ? "a(" : "a*(") + std::to_string(index) + ")";
    }
    auto operator<=>(const GenMode&) const = default;
};

/// Exact action of a generator mode on a state. Creation modes append a
/// factor; annihilation modes commute rightward picking up delta-terms
/// ([a(m), a*(n)] = delta_{m+n,0}) and kill the vacuum.
State act_gen(GenMode mode, const State& s);

/// One summand of a normally ordered mode expansion: the word has all
/// creation modes left of all annihilation modes.
struct ModeTerm {
    GaussRat coeff;
    std::vector<GenMode> word;
};

/// The mode-action engine. Computes general modes v_p of arbitrary states
/// two independent ways:
///   - structural recursion on the leftmost generator factor via the
///     iterate identity (the workhorse), and
///   - direct extraction from the normally ordered product of derivative
///     fields (the oracle path).
/// Every materialized term is checked against cfg.deg_cap; exceeding it
/// throws TruncationOverflow rather than dropping terms.
class ModeEngine {
  public:
    ModeEngine(GaussRat mu, TruncConfig cfg);

    const GaussRat& mu() const { return mu_; }
    const TruncConfig& config() const { return cfg_; }
    const State& conformal_vector() const { return omega_; }
    const GaussRat& central_charge() const { return central_; }

    /// v_p(target), exact. Every term has weight |v| + |w| - p - 1.
    State mode_of(const State& v, long p, const State& target) const;

    /// Same value computed through the normally ordered expansion.
    State mode_of_expansion(const State& v, long p, const State& target) const;

    /// The summands of v_p relevant for action on `target` (creation modes
    /// left of annihilation modes in each word).
    std::vector<ModeTerm> mode_expansion(const Monomial& v, long p, const Monomial& target) const;

    /// D(v) = v_{-2} 1.
    State d_op(const State& v) const;

    /// L^mu(n) s = (omega_mu)_{n+1} s.
    State virasoro_mode(long n, const State& s) const;

    /// Largest q for which v_q(w) can be nonzero; v_q(w) = 0 for all
    /// q > this value (so the lower-truncation index P is this + 1).
    long max_nonzero_mode(const State& v, const State& w) const;

    /// True iff [v_n, v'_m] w equals sum_i C(n,i) (v_i v')_{m+n-i} w.
    bool commutator_check(const State& v, const State& vprime, long n, long m,
                          const State& w) const;

  private:
    State mode_of_mono(const Monomial& v, long p, const Monomial& w) const;
    void check_cap(const State& s, const char* where) const;

    GaussRat mu_;
    TruncConfig cfg_;
    State omega_;
    GaussRat central_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<Monomial, long, Monomial>, State> cache_;
};

/// The conformal family omega_mu = (1-mu) a(-1)a*(-1)|0> - mu a(-2)a*(0)|0>.
State conformal_vector(const GaussRat& mu);

/// c_mu = 2(6 mu (mu - 1) + 1), exact.
GaussRat central_charge(const GaussRat& mu);

} // namespace weylflow
