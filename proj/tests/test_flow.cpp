#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylflow/errors.hpp"
#include "weylflow/flow.hpp"

using namespace weylflow;

TEST_CASE("flow isomorphism on states") {
    CHECK(flow_iso(State::vacuum()) == State::vacuum());
    CHECK(flow_iso(parse_state("a(-1)|0>")) == parse_state("a*(0)|0>"));
    CHECK(flow_iso(parse_state("a*(0)|0>")) == parse_state("-a(-1)|0>"));
    // a-derivative orders swap with a*-depths, sign (-1)^l
    CHECK(flow_iso(parse_state("a(-3)a(-1)a*(-2)|0>")) ==
          parse_state("-a(-3)a*(-2)a*(0)|0>"));

    for (const char* mu_text : {"0", "1/3", "1/2", "1/4+1/4*i", "-1/2"}) {
        GaussRat mu = GaussRat::parse(mu_text);
        CHECK(flow_iso(conformal_vector(mu)) == conformal_vector(GaussRat(1) - mu));
        CHECK(central_charge(mu) == central_charge(GaussRat(1) - mu));
    }
}

TEST_CASE("flow homomorphism checks") {
    GaussRat mu(Rat(1, 3));
    ModeEngine engine(mu, TruncConfig(Rat(10), Rat(9), -3, 3));

    CHECK(flow_hom_check(parse_state("a(-1)|0>"), parse_state("a*(0)|0>"), 0, engine));
    for (long n = -3; n <= 3; ++n)
        CHECK(flow_hom_check(State::vacuum(), State::vacuum(), n, engine));
    CHECK(flow_hom_check(conformal_vector(mu), parse_state("a(-1)|0>"), 1, engine));
}

TEST_CASE("spectral flow automorphisms on mode words") {
    // rho_1: a(-1) -> a(0)
    FlowedMode r = rho_auto(1, {GenKind::A, -1});
    CHECK(r.coeff == GaussRat(1));
    CHECK(r.mode == GenMode{GenKind::A, 0});
    CHECK(rho_auto(1, {GenKind::AStar, 0}).mode == GenMode{GenKind::AStar, -1});

    // phi_1: a*(0) -> -a(0)
    FlowedMode p = phi_auto(GaussRat(1), {GenKind::AStar, 0});
    CHECK(p.coeff == GaussRat(-1));
    CHECK(p.mode == GenMode{GenKind::A, 0});
    CHECK(phi_auto(GaussRat(2), {GenKind::A, 3}).coeff == GaussRat(2));
    CHECK_THROWS_AS(phi_auto(GaussRat(0), {GenKind::A, 0}), DomainError);

    // phi_1 . rho_1: a(-2) -> a*(-1)
    std::vector<GenMode> word{{GenKind::A, -2}, {GenKind::AStar, 0}};
    auto flowed = spectral_flow(1, GaussRat(1), word);
    REQUIRE(flowed.size() == 2);
    CHECK(flowed[0].mode == GenMode{GenKind::AStar, -1});
    CHECK(flowed[0].coeff == GaussRat(1));
    CHECK(flowed[1].mode == GenMode{GenKind::A, -1});
    CHECK(flowed[1].coeff == GaussRat(-1));
}

TEST_CASE("mode-word flow is consistent with the state isomorphism") {
    // phi_1 . rho_1 sends a(-m-1) to a*(-m) and a*(-n) to -a(-n-1), which is
    // exactly the monomial map of flow_iso on generators.
    for (int m = 0; m <= 3; ++m) {
        auto f = spectral_flow(1, GaussRat(1), std::vector<GenMode>{{GenKind::A, -m - 1}});
        CHECK(f[0].mode == GenMode{GenKind::AStar, -m});
        CHECK(f[0].coeff == GaussRat(1));
        State image = flow_iso(State(Monomial({m}, {})));
        CHECK(image == f[0].coeff * act_gen(f[0].mode, State::vacuum()));
    }
    for (int n = 0; n <= 3; ++n) {
        auto f = spectral_flow(1, GaussRat(1), std::vector<GenMode>{{GenKind::AStar, -n}});
        CHECK(f[0].mode == GenMode{GenKind::A, -n - 1});
        CHECK(f[0].coeff == GaussRat(-1));
        State image = flow_iso(State(Monomial({}, {n})));
        CHECK(image == f[0].coeff * act_gen(f[0].mode, State::vacuum()));
    }
}
