#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylflow/grading.hpp"
#include "weylflow/modes.hpp"

namespace weylflow {

/// Linear combination of pure monomial tensors over n rank-one factors
/// with independent conformal parameters mu_i.
class TensorState {
  public:
    explicit TensorState(std::vector<GaussRat> mus);
    /// Expands a pure tensor of factor states.
    TensorState(std::vector<GaussRat> mus, const std::vector<State>& factors);

    std::size_t rank() const { return mus_.size(); }
    const std::vector<GaussRat>& mus() const { return mus_; }
    const std::map<std::vector<Monomial>, GaussRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<Monomial>& monos, const GaussRat& c);
    TensorState& operator+=(const TensorState& o);
    TensorState& operator-=(const TensorState& o);
    TensorState& operator*=(const GaussRat& c);

    friend bool operator==(const TensorState& a, const TensorState& b) {
        return a.mus_ == b.mus_ && a.terms_ == b.terms_;
    }

    /// Sum of factor weights, for a state homogeneous in every factor.
    GaussRat weight() const;

    std::string str() const;

  private:
    std::vector<GaussRat> mus_;
    std::map<std::vector<Monomial>, GaussRat> terms_;
};

/// sum_i c_{mu_i}; 0 for the empty product.
GaussRat tensor_central_charge(std::span<const GaussRat> mus);

/// OMEGA_VOA iff every factor classifies OMEGA_VOA, otherwise the weakest
/// factor's class. Agrees with classify for rank one.
RegionClass tensor_classify(std::span<const GaussRat> mus);

/// Mode engine over the tensor product: modes of pure tensors distribute
/// as (v_1 x...x v_n)_p = sum over i_1+...+i_n = p-(n-1) of the factor
/// modes, and the conformal vector is the sum of the embedded omega_{mu_i}.
class TensorEngine {
  public:
    TensorEngine(std::vector<GaussRat> mus, const TruncConfig& cfg);

    std::size_t rank() const { return engines_.size(); }
    const std::vector<GaussRat>& mus() const { return mus_; }

    /// (v_1 x ... x v_n)_p applied to target, exact.
    TensorState mode_of(const std::vector<State>& pure_factors, long p,
                        const TensorState& target) const;

    /// L(n) = sum_i (1 x..x omega_{mu_i} x..x 1)_{n+1}.
    TensorState virasoro_mode(long n, const TensorState& target) const;

    GaussRat central_charge() const;

  private:
    std::vector<GaussRat> mus_;
    std::vector<std::unique_ptr<ModeEngine>> engines_;
};

/// Grammar: factor states joined by "(x)".
TensorState parse_tensor_state(std::string_view text, std::vector<GaussRat> mus);
std::string print_tensor_state(const TensorState& s);

} // namespace weylflow
