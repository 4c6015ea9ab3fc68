// Acceptance suite: runs every certificate the engine is required to
// produce, one line per criterion, exit code 0 iff all pass. Everything is
// exact arithmetic over Q(i); there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "weylflow/errors.hpp"
#include "weylflow/flow.hpp"
#include "weylflow/grading.hpp"
#include "weylflow/reports.hpp"
#include "weylflow/suites.hpp"
#include "weylflow/tensor.hpp"
#include "weylflow/zhu.hpp"

using namespace weylflow;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, bool passed, const std::string& what) {
    std::printf("%s criterion %2d: %s\n", passed ? "PASS" : "FAIL", criterion, what.c_str());
    if (!passed) ++failures;
}

GaussRat mu_of(const char* text) {
    return GaussRat::parse(text);
}

// 1. central-charge constants, exact, under a second
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = central_charge(GaussRat(0)) == GaussRat(2) &&
              central_charge(mu_of("1/2")) == GaussRat(-1) &&
              central_charge(mu_of("-1/2")) == GaussRat(11) &&
              central_charge(GaussRat(2)) == GaussRat(26);
    double t = seconds_since(start);
    ok = ok && t < 1.0;
    report(1, ok, "central charges c_0 = 2, c_{1/2} = -1, c_{-1/2} = 11, c_2 = 26 (" +
                      std::to_string(t) + "s)");
}

// 2. Virasoro relations at five mu, all m, n in [-3, 3], basis Re <= 3
void criterion_2() {
    bool ok = true;
    std::string times;
    for (const char* text : {"0", "1/3", "1/2", "1/4+1/4*i", "-1/2"}) {
        auto start = std::chrono::steady_clock::now();
        SuiteReport suite = run_virasoro_suite(mu_of(text), Rat(3), -3, 3);
        ok = ok && suite.all_passed();
        times += std::string(text) + ":" + std::to_string(seconds_since(start)) + "s ";
    }
    report(2, ok, "Virasoro bracket suite, 5 conformal parameters (" + times + ")");
}

// 3. mode-engine L(0) eigenvalue equals the closed weight formula, Re <= 4
void criterion_3() {
    bool ok = true;
    for (const char* text : {"1/3", "1/2", "1/4+1/4*i", "2/5+1/5*i"}) {
        GaussRat mu = mu_of(text);
        ModeEngine engine(mu, TruncConfig(Rat(8), Rat(7), -4, 4));
        TruncConfig cfg = TruncConfig::with_cap(Rat(4), -4, 4);
        for (const Monomial& m : basis_up_to(mu, Rat(4), cfg).monomials) {
            State expect = State(m);
            expect *= m.weight().evaluate(mu);
            if (!(engine.virasoro_mode(0, State(m)) == expect)) {
                ok = false;
                break;
            }
        }
    }
    report(3, ok, "L(0) eigenvalues match the weight formula to Re(weight) <= 4, 4 parameters");
}

// 4. the two mode-computation paths agree on Re <= 3, p in [-4, 4]
void criterion_4() {
    bool ok = true;
    std::string times;
    for (const char* text : {"1/3", "1/2"}) {
        auto start = std::chrono::steady_clock::now();
        GaussRat mu = mu_of(text);
        ModeEngine engine(mu, TruncConfig(Rat(12), Rat(11), -4, 4));
        TruncConfig cfg = TruncConfig::with_cap(Rat(3), -4, 4);
        std::vector<Monomial> basis = basis_up_to(mu, Rat(3), cfg).monomials;
        for (const Monomial& v : basis) {
            for (const Monomial& w : basis) {
                for (long p = -4; p <= 4 && ok; ++p)
                    ok = engine.mode_of(State(v), p, State(w)) ==
                         engine.mode_of_expansion(State(v), p, State(w));
                if (!ok) break;
            }
            if (!ok) break;
        }
        times += std::string(text) + ":" + std::to_string(seconds_since(start)) + "s ";
    }
    report(4, ok, "two-path mode agreement to Re(weight) <= 3, p in [-4, 4] (" + times + ")");
}

// 5. conformal-flow isomorphism
void criterion_5() {
    bool ok = true;
    for (const char* text : {"0", "1/3", "1/2", "1/4+1/4*i", "-1/2"}) {
        GaussRat mu = mu_of(text);
        if (!(flow_iso(conformal_vector(mu)) == conformal_vector(GaussRat(1) - mu))) ok = false;
    }
    SuiteReport suite = run_flow_suite(mu_of("1/3"), Rat(2), -3, 3);
    ok = ok && suite.all_passed();
    SuiteReport complex_suite = run_flow_suite(mu_of("1/4+1/4*i"), Rat(2), -3, 3);
    ok = ok && complex_suite.all_passed();
    report(5, ok, "flow_iso(omega_mu) = omega_{1-mu} (5 samples) and homomorphism to Re <= 2");
}

// 6. region classification witnesses and the three-region map
void criterion_6() {
    auto start = std::chrono::steady_clock::now();
    bool ok = classify(mu_of("1/2")).tag == RegionTag::OmegaVoa &&
              classify(mu_of("1/4")).tag == RegionTag::OmegaVoa &&
              classify(mu_of("3/4")).tag == RegionTag::OmegaVoa &&
              classify(mu_of("i")).subcase == RegionSubcase::Case3EdgeImag &&
              classify(mu_of("1/4+1/2*i")).subcase == RegionSubcase::Case4bStripWideIm &&
              classify(mu_of("0")).subcase == RegionSubcase::Case1Integer &&
              classify(mu_of("2")).subcase == RegionSubcase::Case5Outside &&
              classify(mu_of("-1/2")).subcase == RegionSubcase::Case5Outside;

    std::vector<GridPoint> points;
    std::set<RegionTag> tags;
    for (Rat re(-1, 2); re <= Rat(3, 2); re += Rat(1, 8)) {
        for (Rat im(-1); im <= Rat(1); im += Rat(1, 8)) {
            GaussRat mu(re, im);
            points.push_back({mu, classify(mu)});
            tags.insert(points.back().region.tag);
        }
    }
    ok = ok && tags.size() == 3;
    std::string svg = region_map_svg(Rat(-1, 2), Rat(3, 2), Rat(-1), Rat(1), points);
    ok = ok && svg.find("region-outside") != std::string::npos &&
         svg.find("region-strip") != std::string::npos &&
         svg.find("region-diamond") != std::string::npos;
    double t = seconds_since(start);
    ok = ok && t < 5.0;
    report(6, ok, "classification witness set and three-region map (" + std::to_string(t) + "s)");
}

// 7. Omega certificates at truncation
void criterion_7() {
    bool ok = true;
    TruncConfig cfg(Rat(4), Rat(3), -4, 4);

    for (const char* text : {"1/3", "1/4+1/4*i"}) {
        GaussRat mu = mu_of(text);
        TruncConfig small = TruncConfig::with_cap(Rat(3), -4, 4);
        for (const Monomial& m : basis_up_to(mu, Rat(3), small).monomials) {
            bool expect = m.is_vacuum();
            if (omega_test(mu, State(m), cfg).in_omega != expect) {
                ok = false;
                break;
            }
        }
    }

    // mu = 2: the explicit Case 5 witness on every state tried
    {
        GaussRat two(2);
        TruncConfig small = TruncConfig::with_cap(Rat(2), -3, 3);
        for (const Monomial& m : enumerate_monomials(two, Rat(2), small).monomials) {
            OmegaOutcome out = omega_test(two, State(m), cfg);
            if (out.in_omega || !out.violation || out.violation->first != Monomial({0}, {}) ||
                out.violation->second != -1) {
                ok = false;
                break;
            }
        }
    }

    // mu = 0: the a*(0)^t line passes for t <= 3
    for (int t = 0; t <= 3; ++t) {
        Monomial m({}, std::vector<int>(t, 0));
        if (!omega_test(GaussRat(0), State(m), TruncConfig(Rat(3), Rat(2), -3, 3)).in_omega)
            ok = false;
    }
    ok = ok && !omega_test(GaussRat(0), parse_state("a(-1)|0>"),
                           TruncConfig(Rat(3), Rat(2), -3, 3))
                    .in_omega;

    report(7, ok, "Omega certificates: vacuum line in the strip, Case 5 witness outside");
}

// 8. one-dimensionality certificates
void criterion_8() {
    bool ok = true;
    std::string times;
    for (const char* text : {"1/3", "1/2", "1/4+1/4*i", "2/5+1/5*i"}) {
        auto start = std::chrono::steady_clock::now();
        ZhuContext ctx(mu_of(text), TruncConfig(Rat(4), Rat(3), -4, 4));
        ctx.build_o_span();
        ctx.build_c_span();
        ZhuQuotient quot = zhu_quotient(ctx, Rat(2));
        if (quot.dim_upper_bound != 1 || ctx.c_quotient_dim() != 1) ok = false;
        times += std::string(text) + ":" + std::to_string(seconds_since(start)) + "s ";
    }
    report(8, ok, "dim A(V) upper bound 1 and dim(ambient/C(V)) = 1 at 4 parameters (" + times +
                      ")");
}

// 9. the mu = 0 contrast: the Weyl algebra stays visible
void criterion_9() {
    ZhuContext ctx(GaussRat(0), TruncConfig(Rat(3), Rat(2), -3, 3));
    ctx.build_o_span();
    ZhuQuotient quot = zhu_quotient(ctx, Rat(1));
    bool ok = quot.dim_upper_bound >= 3;

    auto index_of = [&](const Monomial& m, bool& found) -> std::size_t {
        for (std::size_t i = 0; i < quot.repr_basis.size(); ++i)
            if (quot.repr_basis[i] == m) return i;
        found = false;
        return 0;
    };
    bool found = true;
    std::size_t vac = index_of(Monomial::vacuum(), found);
    std::size_t a = index_of(Monomial({0}, {}), found);
    std::size_t astar = index_of(Monomial({}, {0}), found);
    ok = ok && found;

    if (ok) {
        auto coeffs_of = [&](std::size_t l, std::size_t r, bool& entry_ok) {
            for (const StarEntry& e : quot.star_table)
                if (e.left == l && e.right == r) {
                    entry_ok = e.status == StarStatus::Ok;
                    return e.coeffs;
                }
            entry_ok = false;
            return std::vector<std::pair<std::size_t, GaussRat>>{};
        };
        bool ok1 = false, ok2 = false;
        auto ab = coeffs_of(a, astar, ok1);
        auto ba = coeffs_of(astar, a, ok2);
        ok = ok && ok1 && ok2;
        std::map<std::size_t, GaussRat> diff;
        for (const auto& [k, c] : ab) diff[k] += c;
        for (const auto& [k, c] : ba) diff[k] -= c;
        for (auto it = diff.begin(); it != diff.end();)
            it = it->second.is_zero() ? diff.erase(it) : std::next(it);
        ok = ok && diff.size() == 1 && diff.count(vac) == 1 && diff[vac] == GaussRat(1);
    }
    report(9, ok, "mu = 0 contrast: dim bound >= 3 and [a]*[a*] - [a*]*[a] = [1]");
}

// 10. the Zhu identity suite at mu in {1/3, 0}
void criterion_10() {
    SuiteReport third = run_zhu_props_suite(mu_of("1/3"), TruncConfig(Rat(4), Rat(3), -4, 4),
                                            Rat(2));
    SuiteReport zero = run_zhu_props_suite(GaussRat(0), TruncConfig(Rat(3), Rat(2), -3, 3),
                                           Rat(1));
    bool ok = third.all_passed() && zero.all_passed();
    std::string detail;
    for (const SuiteReport* s : {&third, &zero})
        for (const CheckLine& line : s->lines)
            if (!line.passed) detail += " [" + line.name + " at mu=" + s->mu + "]";
    report(10, ok, "Zhu identity suite (filtration, gr-commutativity, kernel, residues)" + detail);
}

// 11. the degree dichotomy scan
void criterion_11() {
    bool ok = true;
    for (const char* text : {"1/3", "1/2"}) {
        GradingScanReport scan =
            degree_dichotomy_scan(mu_of(text), TruncConfig(Rat(3), Rat(2), -3, 3), 3);
        if (!scan.passed() || scan.nonzero_words == 0) ok = false;
    }
    report(11, ok, "degree dichotomy scan, words of length <= 3, indices in [-3, 3]");
}

// 12. rank-n tensor products
void criterion_12() {
    bool ok = true;
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<long> num(-4, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> rank(2, 3);

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<GaussRat> mus;
        int n = rank(rng);
        for (int i = 0; i < n; ++i)
            mus.emplace_back(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));

        // factorwise oracles
        GaussRat total;
        int weakest = 2;
        auto strength = [](RegionTag t) {
            return t == RegionTag::OmegaVoa ? 2 : (t == RegionTag::StripConfOmega ? 1 : 0);
        };
        RegionClass weakest_class{};
        bool have = false;
        for (const GaussRat& mu : mus) {
            total += central_charge(mu);
            RegionClass c = classify(mu);
            if (!have || strength(c.tag) < weakest) {
                weakest = strength(c.tag);
                weakest_class = c;
                have = true;
            }
        }
        if (!(tensor_central_charge(mus) == total)) ok = false;
        if (tensor_classify(mus).tag != weakest_class.tag) ok = false;
    }

    // rank-2 Virasoro bracket with summed central charge on Re <= 2 states
    std::vector<GaussRat> ms{mu_of("1/3"), mu_of("1/2")};
    TensorEngine engine(ms, TruncConfig(Rat(10), Rat(9), -2, 2));
    GaussRat c = engine.central_charge();
    TruncConfig cfg = TruncConfig::with_cap(Rat(2), -2, 2);
    std::vector<Monomial> left = basis_up_to(ms[0], Rat(1), cfg).monomials;
    std::vector<Monomial> right = basis_up_to(ms[1], Rat(1), cfg).monomials;
    for (const Monomial& l : left) {
        for (const Monomial& r : right) {
            if ((l.weight().evaluate(ms[0]) + r.weight().evaluate(ms[1])).re() > Rat(2)) continue;
            TensorState w(ms, {State(l), State(r)});
            for (long m = -2; m <= 2 && ok; ++m) {
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
                    if (!(lhs == rhs)) {
                        ok = false;
                        break;
                    }
                }
            }
        }
    }
    report(12, ok, "rank-n central charge, classification, and rank-2 Virasoro bracket");
}

} // namespace

int main() {
    std::printf("acceptance suite: exact-arithmetic certificates (no tolerances)\n");
    auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%d of 12 criteria passed in %.1fs\n", 12 - failures,
                seconds_since(start));
    return failures == 0 ? 0 : 1;
}
