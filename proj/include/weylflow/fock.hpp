#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weylflow/gaussian.hpp"
#include "weylflow/weight.hpp"

namespace weylflow {

/// Canonical Fock-space word in creation modes, applied to the vacuum.
/// a_modes stores m >= 0 for each factor a(-m-1); astar_modes stores n >= 0
/// for each factor a*(-n). Both multisets are kept sorted descending, which
/// fixes one spelling per word: a-factors commute among themselves and so
/// do a*-factors, so the order is a free choice and making it canonical
/// turns state comparison into plain map comparison.
class Monomial {
  public:
    Monomial() = default;
    Monomial(std::vector<int> a_modes, std::vector<int> astar_modes);

    static Monomial vacuum() { return {}; }

    const std::vector<int>& a_modes() const { return a_; }
    const std::vector<int>& astar_modes() const { return astar_; }

    bool is_vacuum() const { return a_.empty() && astar_.empty(); }
    int factor_count() const { return static_cast<int>(a_.size() + astar_.size()); }

    /// (sum m_i + sum n_j + k, t - k) with k = #a-factors, t = #a*-factors.
    WeightExpr weight() const;

    Monomial with_a_factor(int m) const;
    Monomial with_astar_factor(int n) const;
    /// Word with one occurrence of the given value removed; callers must
    /// check multiplicity first.
    Monomial without_a_factor(int m) const;
    Monomial without_astar_factor(int n) const;

    int a_multiplicity(int m) const;
    int astar_multiplicity(int n) const;

    /// "a(-2)a(-1)a*(-1)a*(0)|0>"; "|0>" for the vacuum.
    std::string str() const;

    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<int> a_;
    std::vector<int> astar_;
};

/// Finite Q(i)-linear combination of monomials. No zero coefficients are
/// stored; two states are equal iff their term maps are equal.
class State {
  public:
    State() = default;
    explicit State(const Monomial& m, GaussRat coeff = GaussRat(1));

    static State vacuum() { return State(Monomial::vacuum()); }
    static State zero() { return {}; }

    const std::map<Monomial, GaussRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const GaussRat& c);
    State& operator+=(const State& o);
    State& operator-=(const State& o);
    State& operator*=(const GaussRat& c);

    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(const GaussRat& c, State s) { return s *= c; }

    friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

    GaussRat coeff(const Monomial& m) const;

    /// True iff all monomials share one weight evaluation at mu (the zero
    /// state is homogeneous of any weight).
    bool homogeneous_at(const GaussRat& mu) const;
    /// Weight of a state homogeneous at mu; throws DomainError otherwise.
    GaussRat weight_at(const GaussRat& mu) const;

    std::string str() const;

  private:
    std::map<Monomial, GaussRat> terms_;
};

/// Truncation parameters governing every capped computation.
struct TruncConfig {
    Rat deg_cap;      // ambient cutoff on Re(weight)
    Rat pair_budget;  // max Re(|u|+|v|) for generator pairs
    int window_lo = 0;
    int window_hi = 0; // mode-index window [lo, hi] for brute-force scans

    TruncConfig(Rat deg_cap, Rat pair_budget, int window_lo, int window_hi);

    /// Default pair budget deg_cap - 1, so every u o v term fits the
    /// ambient space by construction.
    static TruncConfig with_cap(Rat deg_cap, int window_lo, int window_hi);

    /// Multiplicity cap for factor kinds of nonpositive Re-weight cost
    /// (the zero-real-part direction of Cases 1 and 3).
    int free_multiplicity_cap() const { return window_hi > 0 ? window_hi : 0; }
};

struct BasisResult {
    std::vector<Monomial> monomials; // graded by Re(weight), ties canonical
    bool direction_capped = false;   // true when a zero-cost direction was cut
};

/// Every monomial whose weight at mu has Re <= cap, graded by Re(weight)
/// with ties in canonical monomial order. Rejects Re(mu) < 0 or > 1 (the
/// enumeration is not lower-finite there). For Re(mu) in {0, 1} the
/// zero-real-cost factor kind is capped via cfg and the result is flagged.
BasisResult basis_up_to(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg);

/// Unchecked variant used by verification suites: enumerates monomials with
/// Re(weight) <= cap for any mu, capping the multiplicity of every factor
/// kind of nonpositive cost at cfg.free_multiplicity_cap().
BasisResult enumerate_monomials(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg);

/// Parses the state grammar:
///   state := term ('+' term)*
///   term  := [coeff '*'] factor* '|0>'
///   factor := 'a(' int ')' | 'a*(' int ')'
/// Whitespace is insignificant; coefficients use the GaussRat grammar
/// (parenthesized when they contain a sum). Only creation words are
/// accepted: a-mode index must be < 0 and a*-mode index <= 0.
State parse_state(std::string_view text);

/// Canonical form; parse_state(print_state(s)) == s.
std::string print_state(const State& s);

} // namespace weylflow
