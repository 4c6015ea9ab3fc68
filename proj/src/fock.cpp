#include "weylflow/fock.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>

#include "weylflow/errors.hpp"

namespace weylflow {

Monomial::Monomial(std::vector<int> a_modes, std::vector<int> astar_modes)
    : a_(std::move(a_modes)), astar_(std::move(astar_modes)) {
    for (int m : a_)
        if (m < 0) throw DomainError("a-factor parameter must be >= 0");
    for (int n : astar_)
        if (n < 0) throw DomainError("a*-factor parameter must be >= 0");
    std::sort(a_.begin(), a_.end(), std::greater<int>());
    std::sort(astar_.begin(), astar_.end(), std::greater<int>());
}

WeightExpr Monomial::weight() const {
    long long total = 0;
    for (int m : a_) total += m;
    for (int n : astar_) total += n;
    total += static_cast<long long>(a_.size());
    return {total, static_cast<long long>(astar_.size()) - static_cast<long long>(a_.size())};
}

Monomial Monomial::with_a_factor(int m) const {
    std::vector<int> a = a_;
    a.insert(std::upper_bound(a.begin(), a.end(), m, std::greater<int>()), m);
    Monomial out;
    out.a_ = std::move(a);
    out.astar_ = astar_;
    return out;
}

Monomial Monomial::with_astar_factor(int n) const {
    std::vector<int> s = astar_;
    s.insert(std::upper_bound(s.begin(), s.end(), n, std::greater<int>()), n);
    Monomial out;
    out.a_ = a_;
    out.astar_ = std::move(s);
    return out;
}

Monomial Monomial::without_a_factor(int m) const {
    Monomial out = *this;
    auto it = std::find(out.a_.begin(), out.a_.end(), m);
    if (it == out.a_.end()) throw DomainError("a-factor not present");
    out.a_.erase(it);
    return out;
}

Monomial Monomial::without_astar_factor(int n) const {
    Monomial out = *this;
    auto it = std::find(out.astar_.begin(), out.astar_.end(), n);
    if (it == out.astar_.end()) throw DomainError("a*-factor not present");
    out.astar_.erase(it);
    return out;
}

int Monomial::a_multiplicity(int m) const {
    return static_cast<int>(std::count(a_.begin(), a_.end(), m));
}

int Monomial::astar_multiplicity(int n) const {
    return static_cast<int>(std::count(astar_.begin(), astar_.end(), n));
}

std::string Monomial::str() const {
    std::string out;
    for (int m : a_) out += "a(" + std::to_string(-m - 1) + ")";
    for (int n : astar_) out += "a*(" + std::to_string(-n) + ")";
    out += "|0>";
    return out;
}

State::State(const Monomial& m, GaussRat coeff) {
    if (!coeff.is_zero()) terms_.emplace(m, std::move(coeff));
}

void State::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

State& State::operator+=(const State& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

State& State::operator-=(const State& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

State& State::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GaussRat State::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat() : it->second;
}

bool State::homogeneous_at(const GaussRat& mu) const {
    if (terms_.empty()) return true;
    GaussRat w = terms_.begin()->first.weight().evaluate(mu);
    for (const auto& [m, c] : terms_)
        if (m.weight().evaluate(mu) != w) return false;
    return true;
}

GaussRat State::weight_at(const GaussRat& mu) const {
    if (terms_.empty()) return GaussRat();
    if (!homogeneous_at(mu)) throw DomainError("state is not homogeneous at mu");
    return terms_.begin()->first.weight().evaluate(mu);
}

std::string State::str() const {
    return print_state(*this);
}

TruncConfig::TruncConfig(Rat deg_cap_, Rat pair_budget_, int lo, int hi)
    : deg_cap(std::move(deg_cap_)), pair_budget(std::move(pair_budget_)),
      window_lo(lo), window_hi(hi) {
    if (deg_cap < Rat(0)) throw DomainError("degCap must be >= 0");
    if (pair_budget < Rat(0)) throw DomainError("pairBudget must be >= 0");
    if (pair_budget + Rat(1) > deg_cap)
        throw DomainError("pairBudget + 1 must be <= degCap");
    if (window_lo > window_hi) throw DomainError("empty mode window");
}

TruncConfig TruncConfig::with_cap(Rat deg_cap, int window_lo, int window_hi) {
    Rat budget = deg_cap - Rat(1);
    if (budget < Rat(0)) budget = Rat(0);
    Rat cap = deg_cap < Rat(1) ? Rat(1) : deg_cap;
    return TruncConfig(cap, budget, window_lo, window_hi);
}

namespace {

struct FactorKind {
    bool astar;
    int value; // m for a-kind, n for a*-kind
    Rat cost;  // exact Re-weight contribution
};

// Appends, for each choice of a*-multiset with cost sum <= budget, the
// monomial (a_part, chosen multiset). Values start at `first` and only
// kinds of positive cost are visited, so the recursion terminates.
void gen_astar(const std::vector<int>& a_part, std::vector<int>& astar_part, int first,
               const Rat& p, const Rat& budget, std::vector<Monomial>& out) {
    out.emplace_back(a_part, astar_part);
    for (int n = first;; ++n) {
        Rat cost = Rat(n) + p;
        if (cost > budget) break;
        astar_part.push_back(n);
        gen_astar(a_part, astar_part, n, p, budget - cost, out);
        astar_part.pop_back();
    }
}

void gen_a(std::vector<int>& a_part, int first, int astar_first, const Rat& p,
           const Rat& budget, std::vector<Monomial>& out) {
    std::vector<int> astar_part;
    gen_astar(a_part, astar_part, astar_first, p, budget, out);
    for (int m = first;; ++m) {
        Rat cost = Rat(m + 1) - p;
        if (cost > budget) break;
        a_part.push_back(m);
        gen_a(a_part, m, astar_first, p, budget - cost, out);
        a_part.pop_back();
    }
}

BasisResult enumerate_impl(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg) {
    const Rat p = mu.re();
    if (cap < Rat(0)) return {};

    std::vector<FactorKind> nonpos;
    int first_a = 0;
    while (Rat(first_a + 1) - p <= Rat(0)) {
        nonpos.push_back({false, first_a, Rat(first_a + 1) - p});
        ++first_a;
    }
    int first_astar = 0;
    while (Rat(first_astar) + p <= Rat(0)) {
        nonpos.push_back({true, first_astar, Rat(first_astar) + p});
        ++first_astar;
    }

    BasisResult result;
    result.direction_capped = !nonpos.empty();
    const int mult_cap = cfg.free_multiplicity_cap();

    // One pass per assignment of multiplicities to the nonpositive-cost
    // kinds; each such factor only enlarges the remaining budget.
    std::vector<int> mults(nonpos.size(), 0);
    std::function<void(std::size_t, Rat)> assign = [&](std::size_t k, Rat budget) {
        if (k == nonpos.size()) {
            std::vector<int> a_base, astar_base;
            for (std::size_t i = 0; i < nonpos.size(); ++i)
                for (int c = 0; c < mults[i]; ++c)
                    (nonpos[i].astar ? astar_base : a_base).push_back(nonpos[i].value);
            std::vector<Monomial> chunk;
            std::vector<int> a_part = a_base;
            std::ranges::sort(a_part, std::greater<int>());
            std::ranges::sort(astar_base, std::greater<int>());
            std::vector<int> astar_part = astar_base;
            // positive a*-kinds under each positive a-multiset
            std::function<void(std::vector<int>&, int, Rat)> rec_a =
                [&](std::vector<int>& a_vec, int m_first, Rat left) {
                    std::vector<int> s_vec = astar_base;
                    std::function<void(int, Rat)> rec_s = [&](int n_first, Rat sleft) {
                        chunk.emplace_back(a_vec, s_vec);
                        for (int n = n_first;; ++n) {
                            Rat cost = Rat(n) + p;
                            if (cost > sleft) break;
                            s_vec.push_back(n);
                            rec_s(n, sleft - cost);
                            s_vec.pop_back();
                        }
                    };
                    rec_s(first_astar, left);
                    for (int m = m_first;; ++m) {
                        Rat cost = Rat(m + 1) - p;
                        if (cost > left) break;
                        a_vec.push_back(m);
                        rec_a(a_vec, m, left - cost);
                        a_vec.pop_back();
                    }
                };
            rec_a(a_part, first_a, budget);
            result.monomials.insert(result.monomials.end(), chunk.begin(), chunk.end());
            return;
        }
        for (int c = 0; c <= mult_cap; ++c) {
            mults[k] = c;
            Rat used = nonpos[k].cost * Rat(c);
            assign(k + 1, budget - used);
        }
        mults[k] = 0;
    };
    assign(0, cap);

    std::sort(result.monomials.begin(), result.monomials.end(),
              [&](const Monomial& x, const Monomial& y) {
                  Rat wx = x.weight().evaluate(mu).re();
                  Rat wy = y.weight().evaluate(mu).re();
                  if (wx != wy) return wx < wy;
                  return x < y;
              });
    return result;
}

} // namespace

BasisResult basis_up_to(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg) {
    if (mu.re() < Rat(0) || mu.re() > Rat(1))
        throw DomainError("basis enumeration requires 0 <= Re(mu) <= 1: weights are not "
                          "bounded below outside the strip");
    if (cap < Rat(0)) throw DomainError("cap must be >= 0");
    return enumerate_impl(mu, cap, cfg);
}

BasisResult enumerate_monomials(const GaussRat& mu, const Rat& cap, const TruncConfig& cfg) {
    return enumerate_impl(mu, cap, cfg);
}

namespace {

struct StateCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char peek_at(std::size_t ahead) {
        skip_ws();
        std::size_t i = pos + ahead;
        return i < text.size() ? text[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos);
    }
};

long read_int(StateCursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (cur.pos < cur.text.size() && (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+'))
        ++cur.pos;
    std::size_t digits = cur.pos;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9')
        ++cur.pos;
    if (cur.pos == digits) throw ParseError("expected integer", start);
    return std::stol(std::string(cur.text.substr(start, cur.pos - start)));
}

Rat read_rat_token(StateCursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9')
        ++cur.pos;
    if (cur.pos == start) throw ParseError("expected digits", start);
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        std::size_t dstart = cur.pos;
        while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9')
            ++cur.pos;
        if (cur.pos == dstart) throw ParseError("expected denominator digits", cur.pos);
    }
    return Rat::parse(cur.text.substr(start, cur.pos - start));
}

// Single coefficient part with one-token lookahead so that "1/2*i*a(-1)"
// and "2*a(-1)" both parse. Sums must be parenthesized inside a term.
GaussRat read_term_coeff(StateCursor& cur, bool negative) {
    if (cur.peek() == '(') {
        std::size_t open = cur.pos;
        std::size_t depth = 0;
        std::size_t close = cur.pos;
        for (; close < cur.text.size(); ++close) {
            if (cur.text[close] == '(') ++depth;
            if (cur.text[close] == ')') {
                if (--depth == 0) break;
            }
        }
        if (close >= cur.text.size()) throw ParseError("unbalanced '(' in coefficient", open);
        GaussRat value = GaussRat::parse(cur.text.substr(open + 1, close - open - 1));
        cur.pos = close + 1;
        return negative ? -value : value;
    }
    if (cur.peek() == 'i') {
        cur.consume('i');
        Rat im(1);
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
            ++cur.pos;
            std::size_t at = cur.pos;
            Rat den = read_rat_token(cur);
            if (den.is_zero()) throw ParseError("zero denominator", at);
            im = Rat(1) / den;
        }
        if (negative) im = -im;
        return GaussRat(Rat(0), im);
    }
    Rat value = read_rat_token(cur);
    if (negative) value = -value;
    // lookahead for an imaginary marker: "3i" or "3*i"
    if (cur.peek() == 'i') {
        cur.consume('i');
        return GaussRat(Rat(0), value);
    }
    if (cur.peek() == '*' && cur.peek_at(1) == 'i') {
        cur.consume('*');
        cur.consume('i');
        return GaussRat(Rat(0), value);
    }
    return GaussRat(value);
}

void read_factor(StateCursor& cur, Monomial& word) {
    std::size_t at = cur.pos;
    cur.expect('a', "'a'");
    bool astar = cur.consume('*');
    cur.expect('(', "'('");
    long idx = read_int(cur);
    cur.expect(')', "')'");
    if (astar) {
        if (idx > 0)
            throw ParseError("a*-mode index > 0 is not a creation word", at);
        word = word.with_astar_factor(static_cast<int>(-idx));
    } else {
        if (idx >= 0)
            throw ParseError("a-mode index >= 0 is not a creation word", at);
        word = word.with_a_factor(static_cast<int>(-idx - 1));
    }
}

State read_term(StateCursor& cur, bool negate_term) {
    GaussRat coeff(1);
    char c = cur.peek();
    if (c == '-') {
        // sugar: "-a(-1)|0>" means coefficient -1
        if (cur.peek_at(1) == 'a' || cur.peek_at(1) == '|') {
            cur.consume('-');
            coeff = GaussRat(-1);
        } else {
            cur.consume('-');
            coeff = read_term_coeff(cur, true);
            if (!cur.consume('*') && cur.peek() != '|')
                throw ParseError("expected '*' after coefficient", cur.pos);
        }
    } else if (c == '(' || c == 'i' || (c >= '0' && c <= '9')) {
        coeff = read_term_coeff(cur, false);
        if (!cur.consume('*') && cur.peek() != '|')
            throw ParseError("expected '*' after coefficient", cur.pos);
    }
    Monomial word;
    while (cur.peek() == 'a') read_factor(cur, word);
    cur.expect('|', "'|0>'");
    cur.expect('0', "'|0>'");
    cur.expect('>', "'|0>'");
    if (negate_term) coeff = -coeff;
    return State(word, coeff);
}

} // namespace

State parse_state(std::string_view text) {
    StateCursor cur{text};
    if (cur.peek() == '\0') throw ParseError("empty state", 0);
    State out = read_term(cur, false);
    while (true) {
        if (cur.consume('+')) {
            out += read_term(cur, false);
        } else if (cur.peek() == '-') {
            cur.consume('-');
            out += read_term(cur, true);
        } else {
            break;
        }
    }
    cur.skip_ws();
    if (cur.pos != cur.text.size()) throw ParseError("trailing characters in state", cur.pos);
    return out;
}

std::string print_state(const State& s) {
    if (s.is_zero()) return "0*|0>";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : s.terms()) {
        if (!first) out += " + ";
        first = false;
        if (coeff == GaussRat(1)) {
            out += mono.str();
            continue;
        }
        std::string cs = coeff.str();
        bool composite = !coeff.re().is_zero() && !coeff.im().is_zero();
        if (composite)
            out += "(" + cs + ")*" + mono.str();
        else
            out += cs + "*" + mono.str();
    }
    return out;
}

} // namespace weylflow
