#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "weylflow/errors.hpp"
#include "weylflow/flow.hpp"
#include "weylflow/grading.hpp"
#include "weylflow/reports.hpp"
#include "weylflow/suites.hpp"
#include "weylflow/tensor.hpp"
#include "weylflow/zhu.hpp"

namespace py = pybind11;
using namespace weylflow;

namespace {

std::vector<GaussRat> parse_mus(const std::vector<std::string>& texts) {
    std::vector<GaussRat> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(GaussRat::parse(t));
    return out;
}

py::dict region_dict(const GaussRat& mu, const RegionClass& region) {
    py::dict d;
    d["mu"] = mu.str();
    d["tag"] = to_string(region.tag);
    d["subcase"] = to_string(region.subcase);
    d["omega"] = to_string(region.omega);
    d["centralCharge"] = central_charge(mu).str();
    return d;
}

std::string run_suite_json(const std::string& name, const std::string& mu_text,
                           const std::string& degcap, int wlo, int whi, int scan_len,
                           const std::string& reportcap) {
    GaussRat mu = GaussRat::parse(mu_text);
    Rat cap = Rat::parse(degcap);
    SuiteReport report;
    if (name == "virasoro") {
        report = run_virasoro_suite(mu, cap, wlo, whi);
    } else if (name == "modes") {
        report = run_modes_suite(mu, cap, wlo, whi);
    } else if (name == "flow") {
        report = run_flow_suite(mu, cap, wlo, whi);
    } else if (name == "grading") {
        report = run_grading_suite(mu, cap, wlo, whi, scan_len);
    } else if (name == "zhu-props") {
        TruncConfig cfg(cap, cap - Rat(1), wlo, whi);
        Rat rcap = reportcap.empty() ? cap - Rat(2) : Rat::parse(reportcap);
        report = run_zhu_props_suite(mu, cfg, rcap);
    } else {
        throw DomainError("unknown suite: " + name);
    }
    return suite_to_json(report).dump();
}

std::string zhu_certificate_json(const std::string& mu_text, const std::string& degcap,
                                 const std::string& reportcap, const std::string& pairbudget,
                                 int wlo, int whi, bool checks) {
    GaussRat mu = GaussRat::parse(mu_text);
    Rat cap = Rat::parse(degcap);
    Rat rcap = Rat::parse(reportcap);
    Rat budget = pairbudget.empty() ? cap - Rat(1) : Rat::parse(pairbudget);
    ZhuContext ctx(mu, TruncConfig(cap, budget, wlo, whi));
    ctx.build_o_span();
    ctx.build_c_span();
    ZhuQuotient quotient = zhu_quotient(ctx, rcap);
    std::vector<ZhuCheck> check_list;
    if (checks) {
        for (auto& c : filtration_check(ctx, rcap)) check_list.push_back(c);
        for (auto& c : f_map_check(ctx)) check_list.push_back(c);
    }
    return zhu_report_json(ctx, quotient, rcap, check_list).dump();
}

std::string apply_modes(const std::string& expr, const std::string& modes,
                        const std::string& mu_text, const std::string& degcap) {
    GaussRat mu = GaussRat::parse(mu_text);
    Rat cap = Rat::parse(degcap);
    ModeEngine engine(mu, TruncConfig(cap, cap - Rat(1), -4, 4));
    State state = parse_state(expr);

    // same mode-spec grammar as the CLI: a(n), a*(n), L(n), beta(n), D
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < modes.size() && (modes[pos] == ' ' || modes[pos] == ',')) ++pos;
    };
    auto read_index = [&] {
        if (pos >= modes.size() || modes[pos] != '(') throw ParseError("expected '('", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < modes.size() && modes[pos] != ')') ++pos;
        if (pos >= modes.size()) throw ParseError("expected ')'", start);
        long v = std::stol(modes.substr(start, pos - start));
        ++pos;
        return v;
    };
    skip();
    while (pos < modes.size()) {
        if (modes.compare(pos, 4, "beta") == 0) {
            pos += 4;
            state = engine.mode_of(parse_state("a(-1)a*(0)|0>"), read_index(), state);
        } else if (modes[pos] == 'L') {
            ++pos;
            state = engine.virasoro_mode(read_index(), state);
        } else if (modes[pos] == 'D') {
            ++pos;
            state = engine.d_op(state);
        } else if (modes[pos] == 'a') {
            ++pos;
            bool astar = pos < modes.size() && modes[pos] == '*';
            if (astar) ++pos;
            long idx = read_index();
            state = act_gen({astar ? GenKind::AStar : GenKind::A, static_cast<int>(idx)}, state);
        } else {
            throw ParseError("unknown mode", pos);
        }
        skip();
    }
    return print_state(state);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact engine for the rank-one Weyl vertex algebra under conformal flow";

    py::register_exception<ParseError>(m, "StateParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<TruncationOverflow>(m, "TruncationOverflowError", PyExc_OverflowError);

    m.def("central_charge",
          [](const std::string& mu) { return central_charge(GaussRat::parse(mu)).str(); },
          py::arg("mu"), "c_mu = 2(6 mu (mu - 1) + 1), exact rational string");

    m.def("classify",
          [](const std::string& mu_text) {
              GaussRat mu = GaussRat::parse(mu_text);
              return region_dict(mu, classify(mu));
          },
          py::arg("mu"), "Exact classification of the conformal structure at mu");

    m.def("tensor_central_charge",
          [](const std::vector<std::string>& mus) {
              auto parsed = parse_mus(mus);
              return tensor_central_charge(parsed).str();
          },
          py::arg("mus"));

    m.def("tensor_classify",
          [](const std::vector<std::string>& mus) {
              auto parsed = parse_mus(mus);
              RegionClass region = tensor_classify(parsed);
              py::dict d;
              d["tag"] = to_string(region.tag);
              d["subcase"] = to_string(region.subcase);
              d["omega"] = to_string(region.omega);
              return d;
          },
          py::arg("mus"));

    m.def("canonical_state",
          [](const std::string& expr) { return print_state(parse_state(expr)); },
          py::arg("expr"), "Parse a state and print its canonical form");

    m.def("state_weight",
          [](const std::string& expr, const std::string& mu) {
              return parse_state(expr).weight_at(GaussRat::parse(mu)).str();
          },
          py::arg("expr"), py::arg("mu"));

    m.def("apply_modes", &apply_modes, py::arg("expr"), py::arg("modes"), py::arg("mu") = "0",
          py::arg("degcap") = "16",
          "Apply a(n), a*(n), L(n), beta(n), D to a state, in listed order");

    m.def("basis",
          [](const std::string& mu, const std::string& cap, int wlo, int whi) {
              Rat cap_rat = Rat::parse(cap);
              TruncConfig cfg = TruncConfig::with_cap(cap_rat < Rat(1) ? Rat(1) : cap_rat,
                                                      wlo, whi);
              std::vector<std::string> out;
              for (const Monomial& m :
                   basis_up_to(GaussRat::parse(mu), cap_rat, cfg).monomials)
                  out.push_back(m.str());
              return out;
          },
          py::arg("mu"), py::arg("cap"), py::arg("window_lo") = -4, py::arg("window_hi") = 4,
          "Monomials of Re(weight) <= cap in graded canonical order");

    m.def("flow_image",
          [](const std::string& expr) { return print_state(flow_iso(parse_state(expr))); },
          py::arg("expr"), "Image under the conformal-flow isomorphism");

    m.def("omega_check",
          [](const std::string& mu_text, const std::string& expr, const std::string& degcap,
             int wlo, int whi) {
              GaussRat mu = GaussRat::parse(mu_text);
              Rat cap = Rat::parse(degcap);
              OmegaOutcome out =
                  omega_test(mu, parse_state(expr), TruncConfig(cap, cap - Rat(1), wlo, whi));
              py::dict d;
              d["in_omega_up_to_truncation"] = out.in_omega;
              if (out.violation) {
                  d["witness_u"] = out.violation->first.str();
                  d["witness_n"] = out.violation->second;
              }
              return d;
          },
          py::arg("mu"), py::arg("expr"), py::arg("degcap") = "3", py::arg("window_lo") = -3,
          py::arg("window_hi") = 3);

    m.def("zhu_certificate_json", &zhu_certificate_json, py::arg("mu"), py::arg("degcap") = "4",
          py::arg("reportcap") = "2", py::arg("pairbudget") = "", py::arg("window_lo") = -4,
          py::arg("window_hi") = 4, py::arg("checks") = false,
          "Truncated Zhu-quotient certificate as a JSON string");

    m.def("run_suite_json", &run_suite_json, py::arg("suite"), py::arg("mu"),
          py::arg("degcap") = "3", py::arg("window_lo") = -3, py::arg("window_hi") = 3,
          py::arg("scan_len") = 3, py::arg("reportcap") = "",
          "Run a verification suite, returning its JSON report");

    m.def("canonical_tensor_state",
          [](const std::string& expr, const std::vector<std::string>& mus) {
              return print_tensor_state(parse_tensor_state(expr, parse_mus(mus)));
          },
          py::arg("expr"), py::arg("mus"),
          "Parse a tensor state (factors joined by '(x)') and print it");

    m.def("region_map_svg",
          [](const std::string& re_lo, const std::string& re_hi, const std::string& im_lo,
             const std::string& im_hi, const std::string& step) {
              Rat lo = Rat::parse(re_lo), hi = Rat::parse(re_hi);
              Rat ilo = Rat::parse(im_lo), ihi = Rat::parse(im_hi);
              Rat s = Rat::parse(step);
              if (s <= Rat(0)) throw DomainError("step must be positive");
              std::vector<GridPoint> points;
              for (Rat re = lo; re <= hi; re += s)
                  for (Rat im = ilo; im <= ihi; im += s) {
                      GaussRat mu(re, im);
                      points.push_back({mu, weylflow::classify(mu)});
                  }
              return weylflow::region_map_svg(lo, hi, ilo, ihi, points);
          },
          py::arg("re_lo") = "-1/2", py::arg("re_hi") = "3/2", py::arg("im_lo") = "-1",
          py::arg("im_hi") = "1", py::arg("step") = "1/8");
}
