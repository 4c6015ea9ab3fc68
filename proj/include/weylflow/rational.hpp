#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weylflow {

/// Exact rational number. Thin value wrapper around GMP's mpq_class that
/// keeps the stored fraction canonical (gcd(|num|, den) = 1, den >= 1) and
/// adds the project's decimal-free textual form "p/q".
class Rat {
  public:
    Rat() : value_(0) {}
    Rat(long n) : value_(n) {}
    Rat(long num, long den);
    explicit Rat(const mpz_class& n) : value_(n) {}
    explicit Rat(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
    /// ParseError on anything else, including decimals.
    static Rat parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Least integer >= this value.
    mpz_class ceil() const;
    mpz_class floor() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.value_ >= b.value_; }

    int sign() const { return sgn(value_); }

    /// Canonical lowest-terms form, "/1" omitted: "2/3", "-5", "0".
    std::string str() const;

  private:
    mpq_class value_;
};

/// Generalized binomial coefficient C(n, k) = n(n-1)...(n-k+1)/k! for any
/// integer n and k >= 0 (always an integer).
mpz_class binomial(const mpz_class& n, unsigned long k);

} // namespace weylflow
