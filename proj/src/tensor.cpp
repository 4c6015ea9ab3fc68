#include "weylflow/tensor.hpp"

#include <functional>
#include <memory>

#include "weylflow/errors.hpp"

namespace weylflow {

TensorState::TensorState(std::vector<GaussRat> mus) : mus_(std::move(mus)) {}

TensorState::TensorState(std::vector<GaussRat> mus, const std::vector<State>& factors)
    : mus_(std::move(mus)) {
    if (factors.size() != mus_.size())
        throw DomainError("tensor factor count must match parameter count");
    std::vector<Monomial> monos(factors.size());
    std::function<void(std::size_t, GaussRat)> expand = [&](std::size_t i, GaussRat coeff) {
        if (i == factors.size()) {
            add_term(monos, coeff);
            return;
        }
        for (const auto& [m, c] : factors[i].terms()) {
            monos[i] = m;
            expand(i + 1, coeff * c);
        }
    };
    expand(0, GaussRat(1));
}

void TensorState::add_term(const std::vector<Monomial>& monos, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(monos);
    if (it == terms_.end()) {
        terms_.emplace(monos, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorState& TensorState::operator+=(const TensorState& o) {
    if (o.mus_ != mus_) throw DomainError("tensor parameter mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TensorState& TensorState::operator-=(const TensorState& o) {
    if (o.mus_ != mus_) throw DomainError("tensor parameter mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TensorState& TensorState::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GaussRat TensorState::weight() const {
    if (terms_.empty()) return GaussRat();
    GaussRat first;
    bool have = false;
    for (const auto& [monos, c] : terms_) {
        GaussRat total;
        for (std::size_t i = 0; i < monos.size(); ++i)
            total += monos[i].weight().evaluate(mus_[i]);
        if (!have) {
            first = total;
            have = true;
        } else if (total != first) {
            throw DomainError("tensor state is not homogeneous");
        }
    }
    return first;
}

std::string TensorState::str() const {
    return print_tensor_state(*this);
}

GaussRat tensor_central_charge(std::span<const GaussRat> mus) {
    GaussRat total;
    for (const GaussRat& mu : mus) total += central_charge(mu);
    return total;
}

RegionClass tensor_classify(std::span<const GaussRat> mus) {
    RegionClass best{RegionTag::OmegaVoa, RegionSubcase::Case4aDiamond,
                     OmegaDescription::TrivialVacuumLine};
    if (mus.empty()) return best;
    auto strength = [](RegionTag t) {
        switch (t) {
            case RegionTag::OmegaVoa: return 2;
            case RegionTag::StripConfOmega: return 1;
            case RegionTag::NotOmegaGenerated: return 0;
        }
        return 0;
    };
    bool have = false;
    RegionClass weakest{};
    for (const GaussRat& mu : mus) {
        RegionClass c = classify(mu);
        if (!have || strength(c.tag) < strength(weakest.tag)) {
            weakest = c;
            have = true;
        }
    }
    return weakest;
}

TensorEngine::TensorEngine(std::vector<GaussRat> mus, const TruncConfig& cfg)
    : mus_(std::move(mus)) {
    engines_.reserve(mus_.size());
    for (const GaussRat& mu : mus_) engines_.push_back(std::make_unique<ModeEngine>(mu, cfg));
}

GaussRat TensorEngine::central_charge() const {
    return tensor_central_charge(mus_);
}

TensorState TensorEngine::mode_of(const std::vector<State>& pure_factors, long p,
                                  const TensorState& target) const {
    if (pure_factors.size() != rank()) throw DomainError("tensor factor count mismatch");
    TensorState out(mus_);
    const long n = static_cast<long>(rank());

    for (const auto& [monos, coeff] : target.terms()) {
        // distribute p - (n-1) over factor modes, bounded by each factor's
        // lower-truncation index
        std::vector<long> qmax(rank());
        for (std::size_t i = 0; i < rank(); ++i)
            qmax[i] = engines_[i]->max_nonzero_mode(pure_factors[i], State(monos[i]));
        std::vector<long> suffix(rank() + 1, 0);
        for (std::size_t i = rank(); i-- > 0;) suffix[i] = suffix[i + 1] + qmax[i];

        std::vector<State> partial(rank());
        std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long rem) {
            if (idx == rank()) {
                // rem must be exhausted exactly (handled by the last factor)
                std::vector<Monomial> word(rank());
                GaussRat c = coeff;
                std::function<void(std::size_t, GaussRat)> emit = [&](std::size_t i, GaussRat acc) {
                    if (i == rank()) {
                        out.add_term(word, acc);
                        return;
                    }
                    for (const auto& [m, mc] : partial[i].terms()) {
                        word[i] = m;
                        emit(i + 1, acc * mc);
                    }
                };
                emit(0, c);
                return;
            }
            if (idx + 1 == rank()) {
                long q = rem;
                if (q > qmax[idx]) return;
                State s = engines_[idx]->mode_of(pure_factors[idx], q, State(monos[idx]));
                if (s.is_zero()) return;
                partial[idx] = std::move(s);
                rec(idx + 1, 0);
                return;
            }
            for (long q = rem - suffix[idx + 1]; q <= qmax[idx]; ++q) {
                State s = engines_[idx]->mode_of(pure_factors[idx], q, State(monos[idx]));
                if (s.is_zero()) continue;
                partial[idx] = std::move(s);
                rec(idx + 1, rem - q);
            }
        };
        rec(0, p - (n - 1));
    }
    return out;
}

TensorState TensorEngine::virasoro_mode(long n, const TensorState& target) const {
    TensorState out(mus_);
    for (std::size_t i = 0; i < rank(); ++i) {
        std::vector<State> factors(rank(), State::vacuum());
        factors[i] = engines_[i]->conformal_vector();
        out += mode_of(factors, n + 1, target);
    }
    return out;
}

TensorState parse_tensor_state(std::string_view text, std::vector<GaussRat> mus) {
    std::vector<State> factors;
    std::size_t start = 0;
    while (true) {
        std::size_t sep = text.find("(x)", start);
        if (sep == std::string_view::npos) {
            factors.push_back(parse_state(text.substr(start)));
            break;
        }
        factors.push_back(parse_state(text.substr(start, sep - start)));
        start = sep + 3;
    }
    if (factors.size() != mus.size())
        throw DomainError("tensor grammar: factor count does not match parameter count");
    return TensorState(std::move(mus), factors);
}

std::string print_tensor_state(const TensorState& s) {
    if (s.is_zero()) {
        std::string out = "0*|0>";
        for (std::size_t i = 1; i < s.rank(); ++i) out += " (x) 0*|0>";
        return out;
    }
    std::string out;
    bool first_term = true;
    for (const auto& [monos, coeff] : s.terms()) {
        if (!first_term) out += " + ";
        first_term = false;
        std::string cs = coeff.str();
        if (!(coeff == GaussRat(1))) {
            bool composite = !coeff.re().is_zero() && !coeff.im().is_zero();
            out += composite ? "(" + cs + ")*[" : cs + "*[";
        } else {
            out += "[";
        }
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (i) out += " (x) ";
            out += monos[i].str();
        }
        out += "]";
    }
    return out;
}

} // namespace weylflow
