#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylflow/errors.hpp"
#include "weylflow/tensor.hpp"

using namespace weylflow;

namespace {

std::vector<GaussRat> mus(std::initializer_list<const char*> texts) {
    std::vector<GaussRat> out;
    for (const char* t : texts) out.push_back(GaussRat::parse(t));
    return out;
}

} // namespace

TEST_CASE("summed central charge") {
    CHECK(tensor_central_charge(mus({"0", "0"})) == GaussRat(4));
    CHECK(tensor_central_charge(mus({"1/2", "1/2"})) == GaussRat(-2));
    CHECK(tensor_central_charge(mus({})) == GaussRat(0));
    CHECK(tensor_central_charge(mus({"1/3", "2", "-1/2"})) ==
          central_charge(GaussRat(Rat(1, 3))) + GaussRat(26) + GaussRat(11));
}

TEST_CASE("factorwise classification") {
    CHECK(tensor_classify(mus({"1/3", "1/2"})).tag == RegionTag::OmegaVoa);
    CHECK(tensor_classify(mus({"1/3", "2"})).tag == RegionTag::NotOmegaGenerated);
    CHECK(tensor_classify(mus({"i", "1/2"})).tag == RegionTag::StripConfOmega);
    // rank one agrees with classify
    for (const char* t : {"0", "1/3", "1/2", "2", "i", "1/4+1/2*i"})
        CHECK(tensor_classify(mus({t})).tag == classify(GaussRat::parse(t)).tag);
}

TEST_CASE("vacuum tensor mode is the identity") {
    TensorEngine engine(mus({"1/3", "1/2"}), TruncConfig(Rat(8), Rat(7), -3, 3));
    TensorState w(engine.mus(), {parse_state("a(-1)|0>"), parse_state("a*(0)|0>")});
    std::vector<State> vac{State::vacuum(), State::vacuum()};
    CHECK(engine.mode_of(vac, -1, w) == w);
    CHECK(engine.mode_of(vac, 0, w).is_zero());
    CHECK(engine.mode_of(vac, -2, w).is_zero());
}

TEST_CASE("weights add across factors") {
    auto ms = mus({"1/3", "1/2"});
    TensorState pure(ms, {parse_state("a(-1)|0>"), parse_state("a*(0)|0>")});
    CHECK(pure.weight() == GaussRat(Rat(2, 3)) + GaussRat(Rat(1, 2)));

    TensorEngine engine(ms, TruncConfig(Rat(8), Rat(7), -3, 3));
    // L(0) eigenvalue on a pure tensor is the summed factor weight
    TensorState l0 = engine.virasoro_mode(0, pure);
    TensorState expect = pure;
    expect *= pure.weight();
    CHECK(l0 == expect);
}

TEST_CASE("rank-2 Virasoro bracket carries the summed central charge") {
    auto ms = mus({"1/3", "1/2"});
    TensorEngine engine(ms, TruncConfig(Rat(10), Rat(9), -2, 2));
    GaussRat c = engine.central_charge();

    std::vector<TensorState> samples;
    samples.emplace_back(ms, std::vector<State>{State::vacuum(), State::vacuum()});
    samples.emplace_back(ms, std::vector<State>{parse_state("a(-1)|0>"), State::vacuum()});
    samples.emplace_back(ms,
                         std::vector<State>{parse_state("a*(0)|0>"), parse_state("a(-1)|0>")});

    for (const TensorState& w : samples) {
        for (long m = -2; m <= 2; ++m) {
            for (long n = -2; n <= 2; ++n) {
                TensorState lhs = engine.virasoro_mode(m, engine.virasoro_mode(n, w));
                lhs -= engine.virasoro_mode(n, engine.virasoro_mode(m, w));
                TensorState rhs = engine.virasoro_mode(m + n, w);
                rhs *= GaussRat(Rat(m - n));
                if (m == -n) {
                    TensorState central = w;
                    central *= GaussRat(Rat(m * m * m - m, 12)) * c;
                    rhs += central;
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("tensor grammar") {
    auto ms = mus({"1/3", "1/2"});
    TensorState s = parse_tensor_state("a(-1)|0> (x) a*(0)|0>", ms);
    CHECK(s.terms().size() == 1);
    TensorState direct(ms, {parse_state("a(-1)|0>"), parse_state("a*(0)|0>")});
    CHECK(s == direct);

    TensorState sum = parse_tensor_state("a(-1)|0> + a*(0)|0> (x) |0>", ms);
    CHECK(sum.terms().size() == 2);

    CHECK_THROWS_AS(parse_tensor_state("|0>", ms), DomainError); // arity mismatch
}
