#include "weylflow/modes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "weylflow/errors.hpp"

namespace weylflow {

namespace {

GaussRat gauss_of(const mpz_class& z) {
    return GaussRat(Rat(z));
}

// Smallest intPart a nonzero vector of the given muPart can have: every
// monomial satisfies intPart >= 0 and intPart >= -muPart.
long long min_int_part(long long mu_part) {
    return mu_part < 0 ? -mu_part : 0;
}

long max_nonzero_mode_expr(const WeightExpr& wv, const WeightExpr& ww) {
    long long n = wv.int_part + ww.int_part;
    long long d = wv.mu_part + ww.mu_part;
    return static_cast<long>(n - 1 - min_int_part(d));
}

} // namespace

State act_gen(GenMode mode, const State& s) {
    State out;
    for (const auto& [mono, coeff] : s.terms()) {
        if (mode.kind == GenKind::A) {
            if (mode.index <= -1) {
                out.add_term(mono.with_a_factor(-mode.index - 1), coeff);
            } else {
                // a(n), n >= 0 contracts against a*(-n) factors
                int mult = mono.astar_multiplicity(mode.index);
                if (mult > 0)
                    out.add_term(mono.without_astar_factor(mode.index),
                                 GaussRat(mult) * coeff);
            }
        } else {
            if (mode.index <= 0) {
                out.add_term(mono.with_astar_factor(-mode.index), coeff);
            } else {
                // a*(n), n >= 1 contracts against a(-n) factors with sign -1
                int mult = mono.a_multiplicity(mode.index - 1);
                if (mult > 0)
                    out.add_term(mono.without_a_factor(mode.index - 1),
                                 GaussRat(-mult) * coeff);
            }
        }
    }
    return out;
}

State conformal_vector(const GaussRat& mu) {
    State omega;
    omega.add_term(Monomial({0}, {1}), GaussRat(1) - mu); // a(-1)a*(-1)|0>
    omega.add_term(Monomial({1}, {0}), -mu);              // a(-2)a*(0)|0>
    return omega;
}

GaussRat central_charge(const GaussRat& mu) {
    return GaussRat(2) * (GaussRat(6) * mu * (mu - GaussRat(1)) + GaussRat(1));
}

ModeEngine::ModeEngine(GaussRat mu, TruncConfig cfg)
    : mu_(std::move(mu)), cfg_(std::move(cfg)), omega_(weylflow::conformal_vector(mu_)),
      central_(weylflow::central_charge(mu_)) {}

void ModeEngine::check_cap(const State& s, const char* where) const {
    for (const auto& [mono, coeff] : s.terms()) {
        if (mono.weight().evaluate(mu_).re() > cfg_.deg_cap)
            throw TruncationOverflow(std::string("term exceeds degCap in ") + where,
                                     mono.str());
    }
}

long ModeEngine::max_nonzero_mode(const State& v, const State& w) const {
    long best = -1;
    bool any = false;
    for (const auto& [mv, cv] : v.terms()) {
        for (const auto& [mw, cw] : w.terms()) {
            long q = max_nonzero_mode_expr(mv.weight(), mw.weight());
            if (!any || q > best) best = q;
            any = true;
        }
    }
    // zero inputs give an empty product; any bound is valid
    return any ? best : -1;
}

State ModeEngine::mode_of_mono(const Monomial& v, long p, const Monomial& w) const {
    if (v.is_vacuum()) return p == -1 ? State(w) : State::zero();

    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(std::tie(v, p, w));
        if (it != cache_.end()) return it->second;
    }

    // Peel the leftmost factor: v = g_r v' with g in {a(-1)|0>, a*(0)|0>}.
    // Iterate identity:
    //   (g_r v')_p = sum_{j>=0} (-1)^j C(r,j) [ g_{r-j} v'_{p+j}
    //                                           - (-1)^r v'_{r+p-j} g_j ].
    GenKind kind;
    long r;
    Monomial rest;
    if (!v.a_modes().empty()) {
        int m0 = v.a_modes().front();
        kind = GenKind::A;
        r = -(static_cast<long>(m0) + 1);
        rest = v.without_a_factor(m0);
    } else {
        int n0 = v.astar_modes().front();
        kind = GenKind::AStar;
        r = -(static_cast<long>(n0) + 1);
        rest = v.without_astar_factor(n0);
    }
    // g_q as a concrete generator mode: (a(-1)1)_q = a(q), (a*(0)1)_q = a*(q+1)
    auto gen_at = [&](long q) {
        return kind == GenKind::A ? GenMode{GenKind::A, static_cast<int>(q)}
                                  : GenMode{GenKind::AStar, static_cast<int>(q + 1)};
    };

    State result;

    long qmax = max_nonzero_mode_expr(rest.weight(), w.weight());
    for (long j = 0; p + j <= qmax; ++j) {
        State inner = mode_of_mono(rest, p + j, w);
        if (inner.is_zero()) continue;
        mpz_class c = binomial(mpz_class(static_cast<long>(r)), static_cast<unsigned long>(j));
        if (j % 2 != 0) c = -c;
        State applied = act_gen(gen_at(r - j), inner);
        applied *= gauss_of(c);
        check_cap(applied, "mode_of");
        result += applied;
    }

    // g_j annihilates w for only finitely many j >= 0: the hits are read
    // off w's factor content.
    std::set<int> hits;
    if (kind == GenKind::A) {
        for (int n : w.astar_modes()) hits.insert(n); // a(j) hits a*(-j)
    } else {
        for (int m : w.a_modes()) hits.insert(m); // a*(j+1) hits a(-j-1)
    }
    bool r_even = (r % 2) == 0;
    for (int j : hits) {
        State gw = act_gen(gen_at(j), State(w));
        if (gw.is_zero()) continue;
        State inner = mode_of(State(rest), r + p - j, gw);
        if (inner.is_zero()) continue;
        mpz_class c = binomial(mpz_class(static_cast<long>(r)), static_cast<unsigned long>(j));
        if (j % 2 != 0) c = -c;
        if (r_even) c = -c; // the -(-1)^r prefactor
        inner *= gauss_of(c);
        check_cap(inner, "mode_of");
        result += inner;
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(std::make_tuple(v, p, w), result);
    }
    return result;
}

State ModeEngine::mode_of(const State& v, long p, const State& target) const {
    State out;
    for (const auto& [mv, cv] : v.terms()) {
        for (const auto& [mw, cw] : target.terms()) {
            State part = mode_of_mono(mv, p, mw);
            part *= cv * cw;
            out += part;
        }
    }
    return out;
}

std::vector<ModeTerm> ModeEngine::mode_expansion(const Monomial& v, long p,
                                                 const Monomial& target) const {
    std::vector<ModeTerm> terms;
    if (v.is_vacuum()) {
        if (p == -1) terms.push_back({GaussRat(1), {}});
        return terms;
    }

    struct Factor {
        bool astar;
        int param;    // derivative order m for a-factors, depth n for a*
        int cmax;     // largest creation index
        std::vector<int> ann; // annihilator indices that can act on target
    };
    std::vector<Factor> factors;
    for (int m : v.a_modes()) {
        Factor f{false, m, -1, {}};
        std::set<int> seen;
        for (int n : target.astar_modes())
            if (seen.insert(n).second) f.ann.push_back(n); // a(n) hits a*(-n)
        factors.push_back(std::move(f));
    }
    for (int n : v.astar_modes()) {
        Factor f{true, n, 0, {}};
        std::set<int> seen;
        for (int m : target.a_modes())
            if (seen.insert(m).second) f.ann.push_back(m + 1); // a*(m+1) hits a(-m-1)
        factors.push_back(std::move(f));
    }

    // Annihilator choices are capped by the target's factor multiplicities;
    // assignments past that act as zero and need not be enumerated.
    std::map<int, int> astar_avail, a_avail; // keyed by annihilator index
    for (int n : target.astar_modes()) ++astar_avail[n];
    for (int m : target.a_modes()) ++a_avail[m + 1];

    // The z-exponent bookkeeping: factor with mode q contributes q + m + 1
    // (a-kind) or q + n (a*-kind) to the total, which must equal p + 1.
    long target_sum = p + 1;
    for (const auto& f : factors)
        target_sum -= f.astar ? f.param : f.param + 1;

    std::vector<long> suffix_max(factors.size() + 1, 0);
    for (std::size_t i = factors.size(); i-- > 0;) {
        long mx = factors[i].cmax;
        for (int q : factors[i].ann) mx = std::max(mx, static_cast<long>(q));
        suffix_max[i] = suffix_max[i + 1] + mx;
    }

    // Per-factor coefficient from 1/m! d^m a(z) resp. 1/n! d^n a*(z).
    auto factor_coeff = [](const Factor& f, long q) {
        mpz_class c;
        if (f.astar)
            c = binomial(mpz_class(q + f.param - 1), static_cast<unsigned long>(f.param));
        else
            c = binomial(mpz_class(q + f.param), static_cast<unsigned long>(f.param));
        if (f.param % 2 != 0) c = -c;
        return c;
    };

    // Identical factors are adjacent (the mode multisets are sorted), so
    // enumerating nonincreasing choices inside each run and scaling by the
    // number of orderings avoids factorially many duplicate tuples.
    auto same_group = [&](std::size_t i, std::size_t j) {
        return factors[i].astar == factors[j].astar && factors[i].param == factors[j].param;
    };

    std::vector<long> chosen(factors.size(), 0);
    std::function<void(std::size_t, long, mpz_class)> rec = [&](std::size_t idx, long rem,
                                                                mpz_class coeff) {
        if (idx == factors.size()) {
            if (rem != 0) return;
            // orderings of each group's mode multiset
            mpz_class orderings(1);
            std::size_t i = 0;
            while (i < factors.size()) {
                std::size_t group_end = i + 1;
                while (group_end < factors.size() && same_group(i, group_end)) ++group_end;
                mpz_class fact(1);
                for (std::size_t g = 2; g <= group_end - i; ++g) fact *= static_cast<long>(g);
                std::size_t j = i;
                while (j < group_end) {
                    std::size_t run = j + 1;
                    while (run < group_end && chosen[run] == chosen[j]) ++run;
                    mpz_class rfact(1);
                    for (std::size_t g = 2; g <= run - j; ++g) rfact *= static_cast<long>(g);
                    mpz_divexact(fact.get_mpz_t(), fact.get_mpz_t(), rfact.get_mpz_t());
                    j = run;
                }
                orderings *= fact;
                i = group_end;
            }
            ModeTerm term;
            term.coeff = gauss_of(coeff * orderings);
            std::vector<GenMode> creations, annihilations;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                GenMode g{factors[k].astar ? GenKind::AStar : GenKind::A,
                          static_cast<int>(chosen[k])};
                (g.is_creation() ? creations : annihilations).push_back(g);
            }
            term.word = std::move(creations);
            term.word.insert(term.word.end(), annihilations.begin(), annihilations.end());
            terms.push_back(std::move(term));
            return;
        }
        const Factor& f = factors[idx];
        bool in_group = idx > 0 && same_group(idx - 1, idx);
        long ceiling_q = in_group ? chosen[idx - 1] : std::numeric_limits<long>::max();
        auto visit = [&](long q) {
            if (q > ceiling_q) return;
            mpz_class c = factor_coeff(f, q);
            if (c == 0) return;
            chosen[idx] = q;
            rec(idx + 1, rem - q, coeff * c);
        };
        auto& avail = f.astar ? a_avail : astar_avail;
        for (int q : f.ann) {
            auto it = avail.find(q);
            if (it == avail.end() || it->second == 0) continue;
            --it->second;
            visit(q);
            ++it->second;
        }
        long lb = rem - suffix_max[idx + 1];
        long start = std::min(static_cast<long>(f.cmax), ceiling_q);
        for (long q = start; q >= lb; --q) visit(q);
    };
    rec(0, target_sum, mpz_class(1));
    return terms;
}

State ModeEngine::mode_of_expansion(const State& v, long p, const State& target) const {
    State out;
    for (const auto& [mv, cv] : v.terms()) {
        for (const auto& [mw, cw] : target.terms()) {
            for (const auto& term : mode_expansion(mv, p, mw)) {
                State s(mw);
                for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
                    s = act_gen(*it, s);
                    if (s.is_zero()) break;
                }
                s *= term.coeff * cv * cw;
                out += s;
            }
        }
    }
    check_cap(out, "mode_of_expansion");
    return out;
}

State ModeEngine::d_op(const State& v) const {
    return mode_of(v, -2, State::vacuum());
}

State ModeEngine::virasoro_mode(long n, const State& s) const {
    return mode_of(omega_, n + 1, s);
}

bool ModeEngine::commutator_check(const State& v, const State& vprime, long n, long m,
                                  const State& w) const {
    State lhs = mode_of(v, n, mode_of(vprime, m, w));
    lhs -= mode_of(vprime, m, mode_of(v, n, w));

    State rhs;
    long imax = max_nonzero_mode(v, vprime);
    for (long i = 0; i <= imax; ++i) {
        State vi = mode_of(v, i, vprime);
        if (vi.is_zero()) continue;
        State part = mode_of(vi, m + n - i, w);
        part *= gauss_of(binomial(mpz_class(n), static_cast<unsigned long>(i)));
        rhs += part;
    }
    return lhs == rhs;
}

} // namespace weylflow
