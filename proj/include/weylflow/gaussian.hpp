#pragma once

#include <string>
#include <string_view>

#include "weylflow/rational.hpp"

namespace weylflow {

/// Exact element of Q(i). The scalar field for every coefficient in the
/// engine and the home of the conformal parameter mu. Restricting mu to
/// Q(i) keeps all Re/Im comparisons and ceilings decidable.
class GaussRat {
  public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Parses the decimal-free textual form, e.g. "2/3", "-1+1/2*i", "i",
    /// "1/4+i/4", "2i". Throws ParseError otherwise.
    static GaussRat parse(std::string_view text);

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const { return im_.is_zero() && re_.is_integer(); }

    GaussRat conj() const { return {re_, -im_}; }
    Rat norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Arbitrary total order (lexicographic on (re, im)); used only for
    /// deterministic container ordering, never for the Re/Im comparisons
    /// of the classification.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical form "p/q+r/s*i" with zero parts omitted; "0" for zero.
    std::string str() const;

  private:
    Rat re_;
    Rat im_;
};

/// Least integer >= Re(w), computed exactly. The imaginary part is ignored
/// by definition.
mpz_class ceil_re(const GaussRat& w);

} // namespace weylflow
