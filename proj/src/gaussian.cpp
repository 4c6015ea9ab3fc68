#include "weylflow/gaussian.hpp"

#include <cstddef>

#include "weylflow/errors.hpp"

namespace weylflow {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rat n = norm();
    return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    return *this *= o.inverse();
}

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out = re_.str();
    if (!im_.is_zero()) {
        if (!out.empty() && im_.sign() > 0) out += "+";
        if (im_ == Rat(1)) {
            out += "i";
        } else if (im_ == Rat(-1)) {
            out += "-i";
        } else {
            out += im_.str() + "*i";
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

mpz_class read_integer(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9')
        ++cur.pos;
    if (cur.pos == start) throw ParseError("expected digits", start);
    return mpz_class(std::string(cur.text.substr(start, cur.pos - start)), 10);
}

Rat read_rat(Cursor& cur) {
    mpz_class num = read_integer(cur);
    mpz_class den(1);
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        std::size_t slash = cur.pos;
        ++cur.pos;
        den = read_integer(cur);
        if (den == 0) throw ParseError("zero denominator", slash + 1);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
}

// part := 'i' ['/' int]  |  rat ['*'] ['i']
// Returns the part's value and whether it was imaginary.
std::pair<Rat, bool> read_part(Cursor& cur) {
    if (cur.consume('i')) {
        Rat value(1);
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
            ++cur.pos;
            std::size_t at = cur.pos;
            mpz_class den = read_integer(cur);
            if (den == 0) throw ParseError("zero denominator", at);
            mpq_class q(1, den);
            q.canonicalize();
            value = Rat(q);
        }
        return {value, true};
    }
    Rat value = read_rat(cur);
    bool starred = cur.consume('*');
    if (cur.consume('i')) return {value, true};
    if (starred) throw ParseError("expected 'i' after '*'", cur.pos);
    return {value, false};
}

} // namespace

GaussRat GaussRat::parse(std::string_view text) {
    Cursor cur{text};
    if (cur.at_end()) throw ParseError("empty coefficient", 0);

    Rat re(0), im(0);
    bool have_re = false, have_im = false;
    bool first = true;
    while (!cur.at_end()) {
        int sign = 1;
        if (cur.consume('-')) {
            sign = -1;
        } else if (cur.consume('+')) {
            sign = 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between parts", cur.pos);
        }
        auto [value, imaginary] = read_part(cur);
        if (sign < 0) value = -value;
        if (imaginary) {
            if (have_im) throw ParseError("duplicate imaginary part", cur.pos);
            im = value;
            have_im = true;
        } else {
            if (have_re) throw ParseError("duplicate real part", cur.pos);
            re = value;
            have_re = true;
        }
        first = false;
    }
    return {re, im};
}

mpz_class ceil_re(const GaussRat& w) {
    return w.re().ceil();
}

} // namespace weylflow
