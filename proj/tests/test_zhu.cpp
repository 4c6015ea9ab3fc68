#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylflow/errors.hpp"
#include "weylflow/zhu.hpp"

using namespace weylflow;

namespace {

ZhuContext ctx_third(long cap = 3) {
    return ZhuContext(GaussRat(Rat(1, 3)), TruncConfig(Rat(cap), Rat(cap - 1), -3, 3));
}

} // namespace

TEST_CASE("context refuses mu outside the strip") {
    TruncConfig cfg(Rat(3), Rat(2), -3, 3);
    CHECK_THROWS_AS(ZhuContext(GaussRat(2), cfg), DomainError);
    CHECK_THROWS_AS(ZhuContext(GaussRat(Rat(-1, 2)), cfg), DomainError);
    ZhuContext ok(GaussRat(Rat(0), Rat(1)), cfg); // mu = i is allowed (Case 3)
    CHECK(ok.ambient_capped());
}

TEST_CASE("circ products") {
    ZhuContext ctx = ctx_third();

    // |0> o v = |0>_{-2} v = 0 (Y(|0>, z) = id has only the -1 mode)
    CHECK(ctx.circ(State::vacuum(), parse_state("a*(0)|0>")).value.is_zero());

    // r != 0, ceiling 1: only i = 0 survives, u o v = u_{-1} v
    CHECK(ctx.circ(parse_state("a*(0)|0>"), parse_state("a(-1)|0>")).value ==
          parse_state("a(-1)a*(0)|0>"));

    // mu = 0, u = a(-1)|0> in V^0 of weight 1: i = 0, 1 terms
    ZhuContext zero(GaussRat(0), TruncConfig(Rat(3), Rat(2), -3, 3));
    CHECK(zero.circ(parse_state("a(-1)|0>"), parse_state("a*(0)|0>")).value ==
          parse_state("a(-2)a*(0)|0> + a(-1)a*(0)|0>"));
}

TEST_CASE("star products and the delta gate") {
    ZhuContext ctx = ctx_third();

    // |0> * v = v
    CHECK(ctx.star(State::vacuum(), parse_state("a(-1)a*(0)|0>")).value ==
          parse_state("a(-1)a*(0)|0>"));

    // non-integer weight: star vanishes identically
    CHECK(ctx.star(parse_state("a*(0)|0>"), parse_state("a(-1)|0>")).value.is_zero());
    CHECK(ctx.star(parse_state("a(-1)|0>"), State::vacuum()).value.is_zero());

    // mu = 0 Weyl relation: [a]*[a*] - [a*]*[a] = [|0>] before any quotient
    ZhuContext zero(GaussRat(0), TruncConfig(Rat(3), Rat(2), -3, 3));
    State ab = zero.star(parse_state("a(-1)|0>"), parse_state("a*(0)|0>")).value;
    State ba = zero.star(parse_state("a*(0)|0>"), parse_state("a(-1)|0>")).value;
    CHECK(ab == parse_state("a(-1)a*(0)|0> + |0>"));
    CHECK(ba == parse_state("a(-1)a*(0)|0>"));
    CHECK(ab - ba == State::vacuum());
}

TEST_CASE("captured O(V) span") {
    ZhuContext ctx = ctx_third();
    ctx.build_o_span();

    // every non-integer-weight monomial lies in the captured span
    for (const Monomial& m : ctx.ambient()) {
        if (!m.weight().evaluate(ctx.mu()).is_integer())
            CHECK(ctx.o_span().contains(ctx.to_vec(State(m))));
    }
    // the vacuum class survives
    CHECK(!ctx.o_span().contains(ctx.to_vec(State::vacuum())));
    // integer-weight monomials get trapped through o-relations
    CHECK(ctx.o_span().contains(ctx.to_vec(parse_state("a(-1)a*(0)|0>"))));
    CHECK(ctx.skipped().empty());
}

TEST_CASE("quotient certificate at mu = 1/3") {
    ZhuContext ctx = ctx_third();
    ctx.build_o_span();
    ZhuQuotient quot = zhu_quotient(ctx, Rat(1));
    CHECK(quot.dim_upper_bound == 1);
    CHECK(quot.repr_basis.size() == 1);
    CHECK(quot.repr_basis[0] == Monomial::vacuum());
    CHECK(quot.v0_dim >= 2);

    // [1] * [1] = [1]
    REQUIRE(quot.star_table.size() == 1);
    REQUIRE(quot.star_table[0].status == StarStatus::Ok);
    REQUIRE(quot.star_table[0].coeffs.size() == 1);
    CHECK(quot.star_table[0].coeffs[0].first == 0);
    CHECK(quot.star_table[0].coeffs[0].second == GaussRat(1));

    CHECK_THROWS_AS(zhu_quotient(ctx, Rat(2)), DomainError); // reportCap > degCap - 2
}

TEST_CASE("mu = 0 contrast keeps the Weyl relation visible") {
    ZhuContext ctx(GaussRat(0), TruncConfig(Rat(3), Rat(2), -3, 3));
    ctx.build_o_span();
    ZhuQuotient quot = zhu_quotient(ctx, Rat(1));
    CHECK(quot.dim_upper_bound >= 3);

    // locate [|0>], [a(-1)|0>], [a*(0)|0>] among the representatives
    auto index_of = [&](const Monomial& m) -> std::size_t {
        for (std::size_t i = 0; i < quot.repr_basis.size(); ++i)
            if (quot.repr_basis[i] == m) return i;
        REQUIRE(false);
        return 0;
    };
    std::size_t vac = index_of(Monomial::vacuum());
    std::size_t a = index_of(Monomial({0}, {}));
    std::size_t astar = index_of(Monomial({}, {0}));

    auto entry_at = [&](std::size_t l, std::size_t r) -> const StarEntry& {
        for (const StarEntry& e : quot.star_table)
            if (e.left == l && e.right == r) return e;
        REQUIRE(false);
        return quot.star_table.front();
    };
    // [a]*[a*] - [a*]*[a] = [|0>]: compare coefficient vectors
    const StarEntry& ab = entry_at(a, astar);
    const StarEntry& ba = entry_at(astar, a);
    REQUIRE(ab.status == StarStatus::Ok);
    REQUIRE(ba.status == StarStatus::Ok);
    std::map<std::size_t, GaussRat> diff;
    for (const auto& [k, c] : ab.coeffs) diff[k] += c;
    for (const auto& [k, c] : ba.coeffs) diff[k] -= c;
    for (auto it = diff.begin(); it != diff.end();)
        it = it->second.is_zero() ? diff.erase(it) : std::next(it);
    REQUIRE(diff.size() == 1);
    CHECK(diff.begin()->first == vac);
    CHECK(diff.begin()->second == GaussRat(1));
}

TEST_CASE("captured C(V) span pins the quotient to the vacuum line") {
    ZhuContext ctx = ctx_third();
    ctx.build_c_span();
    CHECK(ctx.c_quotient_dim() == 1);
    // the one surviving class is the vacuum
    CHECK(!ctx.c_span().contains(ctx.to_vec(State::vacuum())));
}

TEST_CASE("enlarging the pair budget never raises the dimension bound") {
    GaussRat mu(Rat(1, 3));
    long dims[3];
    int i = 0;
    for (long budget : {1, 2, 3}) {
        ZhuContext ctx(mu, TruncConfig(Rat(4), Rat(budget), -3, 3));
        ctx.build_o_span();
        dims[i++] = zhu_quotient(ctx, Rat(1)).dim_upper_bound;
    }
    CHECK(dims[0] >= dims[1]);
    CHECK(dims[1] >= dims[2]);
}

TEST_CASE("filtration and kernel checks pass at mu = 1/3") {
    ZhuContext ctx = ctx_third();
    ctx.build_o_span();
    ctx.build_c_span();
    for (const ZhuCheck& check : filtration_check(ctx, Rat(1))) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.passed);
    }
    for (const ZhuCheck& check : f_map_check(ctx)) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.passed);
    }
}
