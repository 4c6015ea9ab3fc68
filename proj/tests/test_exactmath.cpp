#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylflow/errors.hpp"
#include "weylflow/gaussian.hpp"
#include "weylflow/linalg.hpp"
#include "weylflow/rational.hpp"

using namespace weylflow;

namespace {

std::mt19937 rng(20240901);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rat(num(rng), den(rng));
}

GaussRat random_gauss() {
    return GaussRat(random_rat(), random_rat());
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(3, 6) == Rat(1, 2));
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK_THROWS_AS(Rat::parse("0.5"), ParseError);
    CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("ceilings ignore the imaginary part") {
    CHECK(Rat(3, 2).ceil() == 2);
    CHECK(Rat(2).ceil() == 2);
    CHECK(Rat(-1, 3).ceil() == 0);
    CHECK(ceil_re(GaussRat(Rat(-1, 3), Rat(5))) == 0);
    CHECK(ceil_re(GaussRat(Rat(3, 2), Rat(-7))) == 2);

    for (int i = 0; i < 200; ++i) {
        Rat r = random_rat();
        mpz_class c = r.ceil();
        CHECK(Rat(mpz_class(c - 1)) < r);
        CHECK(r <= Rat(c));
    }
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-1, 4) == 1);
    CHECK(binomial(-2, 2) == 3);
    CHECK(binomial(-3, 1) == -3);
}

TEST_CASE("gaussian rational textual form") {
    CHECK(GaussRat::parse("2/3+1/2*i") == GaussRat(Rat(2, 3), Rat(1, 2)));
    CHECK(GaussRat::parse("1/4+i/4") == GaussRat(Rat(1, 4), Rat(1, 4)));
    CHECK(GaussRat::parse("i") == GaussRat(Rat(0), Rat(1)));
    CHECK(GaussRat::parse("-i") == GaussRat(Rat(0), Rat(-1)));
    CHECK(GaussRat::parse("2i") == GaussRat(Rat(0), Rat(2)));
    CHECK(GaussRat::parse("1/4+1/2i") == GaussRat(Rat(1, 4), Rat(1, 2)));
    CHECK(GaussRat::parse(" -1 + 2*i ") == GaussRat(Rat(-1), Rat(2)));
    CHECK(GaussRat(Rat(2, 3), Rat(1, 2)).str() == "2/3+1/2*i");
    CHECK(GaussRat(Rat(0), Rat(-1)).str() == "-i");
    CHECK(GaussRat().str() == "0");
    CHECK_THROWS_AS(GaussRat::parse("1.5"), ParseError);
    CHECK_THROWS_AS(GaussRat::parse("1+2"), ParseError);
    CHECK_THROWS_AS(GaussRat::parse(""), ParseError);

    for (int i = 0; i < 200; ++i) {
        GaussRat g = random_gauss();
        CHECK(GaussRat::parse(g.str()) == g);
    }
}

TEST_CASE("field axioms hold exactly") {
    for (int i = 0; i < 200; ++i) {
        GaussRat a = random_gauss(), b = random_gauss(), c = random_gauss();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == GaussRat());
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == GaussRat(1));
            CHECK(a / a == GaussRat(1));
        }
    }
    CHECK_THROWS_AS(GaussRat().inverse(), DomainError);
}

namespace {

SparseVec vec_of(std::size_t dim, std::initializer_list<std::pair<std::size_t, GaussRat>> entries) {
    SparseVec v(dim);
    for (const auto& [i, c] : entries) v.set(i, c);
    return v;
}

} // namespace

TEST_CASE("row reduction over Q(i)") {
    const GaussRat one(1), im(Rat(0), Rat(1));

    CHECK(row_reduce({}).rank == 0);

    // Q(i)-linear dependence: {e1, i e1} has rank 1
    auto r1 = row_reduce({vec_of(3, {{0, one}}), vec_of(3, {{0, im}})});
    CHECK(r1.rank == 1);

    // elimination: {e1+e2, e2} -> pivots {e1, e2}
    auto r2 = row_reduce({vec_of(3, {{0, one}, {1, one}}), vec_of(3, {{1, one}})});
    CHECK(r2.rank == 2);
    CHECK(r2.pivot_basis[0] == vec_of(3, {{0, one}}));
    CHECK(r2.pivot_basis[1] == vec_of(3, {{1, one}}));

    // idempotence: reducing the pivot basis again returns the same basis
    auto r3 = row_reduce(r2.pivot_basis);
    CHECK(r3.rank == r2.rank);
    CHECK(r3.pivot_basis == r2.pivot_basis);
}

TEST_CASE("membership agrees with the rank test") {
    std::uniform_int_distribution<int> entry(-3, 3);
    const std::size_t dim = 6;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<SparseVec> rows;
        for (int k = 0; k < 4; ++k) {
            SparseVec v(dim);
            for (std::size_t i = 0; i < dim; ++i)
                v.set(i, GaussRat(Rat(entry(rng)), Rat(entry(rng))));
            rows.push_back(std::move(v));
        }
        auto basis = row_reduce(rows);
        SparseVec probe(dim);
        for (std::size_t i = 0; i < dim; ++i)
            probe.set(i, GaussRat(Rat(entry(rng)), Rat(entry(rng))));

        std::vector<SparseVec> extended = rows;
        extended.push_back(probe);
        bool rank_same = row_reduce(extended).rank == basis.rank;
        CHECK(membership(probe, basis.pivot_basis) == rank_same);
    }
    CHECK(membership(SparseVec(4), {}) == true);          // zero vector
    CHECK(membership(vec_of(4, {{0, GaussRat(1)}}), {}) == false);
    // scalar multiple: (1+i) e1 against {e1}
    CHECK(membership(vec_of(4, {{0, GaussRat(Rat(1), Rat(1))}}),
                     {vec_of(4, {{0, GaussRat(1)}})}) == true);
}
