#include "weylflow/rational.hpp"

#include <cstddef>

#include "weylflow/errors.hpp"

namespace weylflow {

Rat::Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

mpz_class Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
}

Rat Rat::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](std::size_t start) {
        std::size_t end = start;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        if (end == start) throw ParseError("expected digits in rational", start);
        return end;
    };
    std::size_t num_end = read_digits(pos);
    mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
    mpz_class den(1);
    pos = num_end;
    if (pos < text.size() && text[pos] == '/') {
        std::size_t den_end = read_digits(pos + 1);
        den = mpz_class(std::string(text.substr(pos + 1, den_end - pos - 1)), 10);
        if (den == 0) throw ParseError("zero denominator", pos + 1);
        pos = den_end;
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class num(1);
    for (unsigned long i = 0; i < k; ++i) num *= n - static_cast<long>(i);
    mpz_class fact(1);
    for (unsigned long i = 2; i <= k; ++i) fact *= static_cast<long>(i);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return out;
}

} // namespace weylflow
