#pragma once

#include <compare>
#include <string>

#include "weylflow/gaussian.hpp"

namespace weylflow {

/// Symbolic weight n + d*mu. Addition is componentwise; comparisons against
/// concrete thresholds are always done on the exact evaluation, never on
/// the symbols.
struct WeightExpr {
    long long int_part = 0; // the n in n + d*mu
    long long mu_part = 0;  // the d in n + d*mu

    GaussRat evaluate(const GaussRat& mu) const {
        GaussRat d(Rat(static_cast<long>(mu_part)));
        return GaussRat(Rat(static_cast<long>(int_part))) + d * mu;
    }

    WeightExpr& operator+=(const WeightExpr& o) {
        int_part += o.int_part;
        mu_part += o.mu_part;
        return *this;
    }
    friend WeightExpr operator+(WeightExpr a, const WeightExpr& b) { return a += b; }
    friend WeightExpr operator-(WeightExpr a, const WeightExpr& b) {
        a.int_part -= b.int_part;
        a.mu_part -= b.mu_part;
        return a;
    }

    auto operator<=>(const WeightExpr&) const = default;

    std::string str() const {
        std::string s = std::to_string(int_part);
        if (mu_part != 0) {
            s += (mu_part > 0 ? "+" : "-");
            s += std::to_string(mu_part > 0 ? mu_part : -mu_part) + "*mu";
        }
        return s;
    }
};

} // namespace weylflow
