#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
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

// exit-code contract: 0 all checks pass, 1 check failure, 2 usage/parse
// error, 3 truncation overflow
constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;
constexpr int kOverflow = 3;

struct GridSpec {
    Rat re_lo, re_hi, re_step;
    Rat im_lo, im_hi, im_step;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, at - start));
        start = at + 1;
    }
    return parts;
}

// "reLo:reHi:step,imLo:imHi:step", rational entries
GridSpec parse_grid(const std::string& text) {
    auto halves = split(text, ',');
    if (halves.size() != 2) throw ParseError("grid needs a re-range and an im-range", 0);
    auto re = split(halves[0], ':');
    auto im = split(halves[1], ':');
    if (re.size() != 3 || im.size() != 3)
        throw ParseError("each grid range is lo:hi:step", 0);
    GridSpec g{Rat::parse(re[0]), Rat::parse(re[1]), Rat::parse(re[2]),
               Rat::parse(im[0]), Rat::parse(im[1]), Rat::parse(im[2])};
    if (g.re_step <= Rat(0) || g.im_step <= Rat(0))
        throw ParseError("grid steps must be positive rationals", 0);
    return g;
}

std::vector<GaussRat> grid_points(const GridSpec& g) {
    std::vector<GaussRat> points;
    for (Rat re = g.re_lo; re <= g.re_hi; re += g.re_step)
        for (Rat im = g.im_lo; im <= g.im_hi; im += g.im_step)
            points.emplace_back(re, im);
    return points;
}

// grid points classify concurrently; assembly is a sequential merge in
// grid order, so reports stay byte-identical
std::vector<GridPoint> classify_grid(const std::vector<GaussRat>& mus) {
    std::vector<GridPoint> points(mus.size());
    std::vector<std::future<void>> tasks;
    const std::size_t chunks = std::min<std::size_t>(mus.size(), 8);
    for (std::size_t c = 0; c < chunks; ++c) {
        tasks.push_back(std::async(std::launch::async, [&, c] {
            for (std::size_t i = c; i < mus.size(); i += chunks)
                points[i] = {mus[i], classify(mus[i])};
        }));
    }
    for (auto& t : tasks) t.get();
    return points;
}

std::pair<int, int> parse_window(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() != 2) throw ParseError("mode window is lo:hi", 0);
    return {static_cast<int>(std::stol(parts[0])), static_cast<int>(std::stol(parts[1]))};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    out << content;
}

// mode-spec grammar for `eval --apply`: whitespace/comma separated list of
// a(n), a*(n), L(n), beta(n), D; applied in listed order.
struct ModeOp {
    enum Kind { Gen, Virasoro, Beta, DOp } kind;
    GenMode gen{GenKind::A, 0};
    long index = 0;
};

std::vector<ModeOp> parse_mode_spec(const std::string& text) {
    std::vector<ModeOp> ops;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t'))
            ++pos;
    };
    auto read_index = [&](const char* what) {
        if (pos >= text.size() || text[pos] != '(')
            throw ParseError(std::string("expected '(' after ") + what, pos);
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ')') ++pos;
        if (pos >= text.size()) throw ParseError("expected ')'", start);
        long value = std::stol(text.substr(start, pos - start));
        ++pos;
        return value;
    };
    skip();
    while (pos < text.size()) {
        if (text.compare(pos, 4, "beta") == 0) {
            pos += 4;
            ops.push_back({ModeOp::Beta, {}, read_index("beta")});
        } else if (text[pos] == 'L') {
            ++pos;
            ops.push_back({ModeOp::Virasoro, {}, read_index("L")});
        } else if (text[pos] == 'D') {
            ++pos;
            ops.push_back({ModeOp::DOp, {}, 0});
        } else if (text[pos] == 'a') {
            ++pos;
            bool astar = pos < text.size() && text[pos] == '*';
            if (astar) ++pos;
            long idx = read_index(astar ? "a*" : "a");
            ops.push_back({ModeOp::Gen,
                           {astar ? GenKind::AStar : GenKind::A, static_cast<int>(idx)},
                           idx});
        } else {
            throw ParseError("unknown mode in --apply", pos);
        }
        skip();
    }
    return ops;
}

int cmd_classify(const std::optional<std::string>& mu_text,
                 const std::optional<std::string>& grid_text, bool as_json,
                 const std::string& csv_path, const std::string& svg_path) {
    if (mu_text) {
        GaussRat mu = GaussRat::parse(*mu_text);
        RegionClass region = classify(mu);
        if (as_json) {
            std::cout << region_to_json(mu, region).dump(2) << "\n";
        } else {
            std::cout << "mu = " << mu.str() << "\n"
                      << "tag = " << to_string(region.tag) << "\n"
                      << "subcase = " << to_string(region.subcase) << "\n"
                      << "Omega = " << to_string(region.omega) << "\n"
                      << "central charge = " << central_charge(mu).str() << "\n";
        }
        return kOk;
    }
    if (!grid_text) throw ParseError("classify needs --mu or --grid", 0);
    GridSpec grid = parse_grid(*grid_text);
    std::vector<GridPoint> points = classify_grid(grid_points(grid));
    if (!csv_path.empty()) write_file(csv_path, classification_csv(points));
    if (!svg_path.empty())
        write_file(svg_path, region_map_svg(grid.re_lo, grid.re_hi, grid.im_lo, grid.im_hi,
                                            points));
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const GridPoint& p : points) out.push_back(region_to_json(p.mu, p.region));
        std::cout << out.dump(2) << "\n";
    } else if (csv_path.empty() && svg_path.empty()) {
        std::cout << classification_csv(points);
    } else {
        std::cout << points.size() << " grid points classified\n";
    }
    return kOk;
}

int cmd_central_charge(const std::optional<std::string>& mu_text,
                       const std::optional<std::string>& grid_text,
                       const std::string& csv_path) {
    std::vector<GaussRat> mus;
    if (mu_text) {
        mus.push_back(GaussRat::parse(*mu_text));
    } else if (grid_text) {
        mus = grid_points(parse_grid(*grid_text));
    } else {
        throw ParseError("central-charge needs --mu or --grid", 0);
    }
    std::string csv = central_charge_csv(mus);
    if (!csv_path.empty()) {
        write_file(csv_path, csv);
        std::cout << mus.size() << " rows written\n";
    } else {
        std::cout << csv;
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const std::string& mu_text, const std::string& degcap,
               const std::string& window, int scan_len, const std::string& reportcap,
               bool as_json) {
    GaussRat mu = GaussRat::parse(mu_text);
    Rat cap = Rat::parse(degcap);
    auto [wlo, whi] = parse_window(window);

    SuiteReport report;
    if (suite == "virasoro") {
        report = run_virasoro_suite(mu, cap, wlo, whi);
    } else if (suite == "modes") {
        report = run_modes_suite(mu, cap, wlo, whi);
    } else if (suite == "flow") {
        report = run_flow_suite(mu, cap, wlo, whi);
    } else if (suite == "grading") {
        report = run_grading_suite(mu, cap, wlo, whi, scan_len);
    } else if (suite == "zhu-props") {
        TruncConfig cfg(cap, cap - Rat(1), wlo, whi);
        Rat rcap = reportcap.empty() ? cap - Rat(2) : Rat::parse(reportcap);
        report = run_zhu_props_suite(mu, cfg, rcap);
    } else {
        throw ParseError("unknown suite: " + suite, 0);
    }

    if (as_json) {
        std::cout << suite_to_json(report).dump(2) << "\n";
    } else {
        for (const CheckLine& line : report.lines)
            std::cout << (line.passed ? "PASS" : "FAIL") << " " << line.name
                      << (line.detail.empty() ? "" : " [" + line.detail + "]") << "\n";
    }
    return report.all_passed() ? kOk : kCheckFailure;
}

int cmd_zhu(const std::string& mu_text, const std::string& degcap, const std::string& reportcap,
            const std::string& pairbudget, const std::string& window, bool as_json,
            const std::string& json_path, bool run_checks) {
    GaussRat mu = GaussRat::parse(mu_text);
    Rat cap = Rat::parse(degcap);
    Rat rcap = Rat::parse(reportcap);
    Rat budget = pairbudget.empty() ? cap - Rat(1) : Rat::parse(pairbudget);
    auto [wlo, whi] = parse_window(window);

    ZhuContext ctx(mu, TruncConfig(cap, budget, wlo, whi));
    ctx.build_o_span();
    ctx.build_c_span();
    ZhuQuotient quotient = zhu_quotient(ctx, rcap);

    std::vector<ZhuCheck> checks;
    if (run_checks) {
        for (auto& c : filtration_check(ctx, rcap)) checks.push_back(c);
        for (auto& c : f_map_check(ctx)) checks.push_back(c);
    }

    nlohmann::json report = zhu_report_json(ctx, quotient, rcap, checks);
    if (!json_path.empty()) write_file(json_path, report.dump(2) + "\n");
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "mu = " << mu.str() << ", degCap = " << cap.str()
                  << ", pairBudget = " << budget.str() << ", reportCap = " << rcap.str() << "\n"
                  << "dimUpperBound = " << quotient.dim_upper_bound << "\n"
                  << "V^0 window dim = " << quotient.v0_dim << "\n"
                  << "dim(ambient/C(V)) = " << ctx.c_quotient_dim() << "\n";
        for (const ZhuCheck& c : checks)
            std::cout << (c.passed ? "PASS" : "FAIL") << " " << c.name
                      << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    }
    for (const ZhuCheck& c : checks)
        if (!c.passed) return kCheckFailure;
    return kOk;
}

int cmd_eval(const std::string& expr, const std::string& apply, const std::string& mu_text,
             const std::string& degcap, bool as_json) {
    GaussRat mu = GaussRat::parse(mu_text);
    Rat cap = Rat::parse(degcap);
    ModeEngine engine(mu, TruncConfig(cap, cap - Rat(1), -4, 4));
    State state = parse_state(expr);
    for (const ModeOp& op : parse_mode_spec(apply)) {
        switch (op.kind) {
            case ModeOp::Gen: state = act_gen(op.gen, state); break;
            case ModeOp::Virasoro: state = engine.virasoro_mode(op.index, state); break;
            case ModeOp::Beta:
                state = engine.mode_of(parse_state("a(-1)a*(0)|0>"), op.index, state);
                break;
            case ModeOp::DOp: state = engine.d_op(state); break;
        }
    }
    if (as_json)
        std::cout << state_to_json(state).dump(2) << "\n";
    else
        std::cout << print_state(state) << "\n";
    return kOk;
}

int cmd_region_map(const std::string& rect, const std::string& step, const std::string& svg_path,
                   const std::string& csv_path) {
    auto halves = split(rect, ',');
    if (halves.size() != 2) throw ParseError("rect is reLo:reHi,imLo:imHi", 0);
    auto re = split(halves[0], ':');
    auto im = split(halves[1], ':');
    if (re.size() != 2 || im.size() != 2) throw ParseError("rect is reLo:reHi,imLo:imHi", 0);
    Rat s = Rat::parse(step);
    if (s <= Rat(0)) throw ParseError("step must be positive", 0);
    GridSpec grid{Rat::parse(re[0]), Rat::parse(re[1]), s,
                  Rat::parse(im[0]), Rat::parse(im[1]), s};
    std::vector<GridPoint> points = classify_grid(grid_points(grid));
    if (!svg_path.empty())
        write_file(svg_path, region_map_svg(grid.re_lo, grid.re_hi, grid.im_lo, grid.im_hi,
                                            points));
    if (!csv_path.empty()) write_file(csv_path, classification_csv(points));
    if (svg_path.empty() && csv_path.empty()) {
        std::cout << classification_csv(points);
    } else {
        std::cout << points.size() << " points mapped\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for the rank-one Weyl vertex algebra under conformal flow"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Classify the conformal structure at mu");
    std::optional<std::string> cls_mu, cls_grid;
    bool cls_json = false;
    std::string cls_csv, cls_svg;
    classify_cmd->add_option("--mu", cls_mu, "conformal parameter, exact rational (e.g. 1/4+1/2i)");
    classify_cmd->add_option("--grid", cls_grid, "reLo:reHi:step,imLo:imHi:step");
    classify_cmd->add_flag("--json", cls_json, "emit JSON");
    classify_cmd->add_option("--csv", cls_csv, "write grid CSV to this path");
    classify_cmd->add_option("--svg", cls_svg, "write region-map SVG to this path");

    // central-charge
    auto* cc_cmd = app.add_subcommand("central-charge", "Central charge table c_mu = 2(6mu(mu-1)+1)");
    std::optional<std::string> cc_mu, cc_grid;
    std::string cc_csv;
    cc_cmd->add_option("--mu", cc_mu, "conformal parameter");
    cc_cmd->add_option("--grid", cc_grid, "reLo:reHi:step,imLo:imHi:step");
    cc_cmd->add_option("--csv", cc_csv, "write CSV to this path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an exact-equality verification suite");
    std::string v_suite, v_mu = "1/3", v_degcap = "3", v_window = "-3:3", v_reportcap;
    int v_scanlen = 3;
    bool v_json = false;
    verify_cmd->add_option("--suite", v_suite, "virasoro|modes|flow|grading|zhu-props")
        ->required();
    verify_cmd->add_option("--mu", v_mu, "conformal parameter");
    verify_cmd->add_option("--degcap", v_degcap, "Re(weight) cap for test states");
    verify_cmd->add_option("--modewindow", v_window, "mode index window lo:hi");
    verify_cmd->add_option("--scanlen", v_scanlen, "max word length for the grading scan");
    verify_cmd->add_option("--reportcap", v_reportcap, "report cap for zhu-props");
    verify_cmd->add_flag("--json", v_json, "emit JSON");

    // zhu
    auto* zhu_cmd = app.add_subcommand("zhu", "Truncated Zhu-quotient certificate");
    std::string z_mu, z_degcap = "4", z_reportcap = "2", z_budget, z_window = "-4:4", z_json_path;
    bool z_json = false, z_checks = false;
    zhu_cmd->add_option("--mu", z_mu, "conformal parameter")->required();
    zhu_cmd->add_option("--degcap", z_degcap, "ambient Re(weight) cap");
    zhu_cmd->add_option("--reportcap", z_reportcap, "reported degree cap (<= degcap - 2)");
    zhu_cmd->add_option("--pairbudget", z_budget, "generator pair budget (default degcap - 1)");
    zhu_cmd->add_option("--modewindow", z_window, "mode index window lo:hi");
    zhu_cmd->add_flag("--json", z_json, "emit the JSON report to stdout");
    zhu_cmd->add_option("--out", z_json_path, "write the JSON report to this path");
    zhu_cmd->add_flag("--checks", z_checks, "also run the filtration/kernel checks");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Parse a state and apply modes");
    std::string e_expr, e_apply, e_mu = "0", e_degcap = "16";
    bool e_json = false;
    eval_cmd->add_option("--expr", e_expr, "state in the textual grammar")->required();
    eval_cmd->add_option("--apply", e_apply, "modes a(n), a*(n), L(n), beta(n), D; applied in order");
    eval_cmd->add_option("--mu", e_mu, "conformal parameter (used by L and weights)");
    eval_cmd->add_option("--degcap", e_degcap, "overflow guard cap");
    eval_cmd->add_flag("--json", e_json, "emit JSON");

    // region-map
    auto* map_cmd = app.add_subcommand("region-map", "Export the mu-plane region map");
    std::string m_rect = "-1/2:3/2,-1:1", m_step = "1/8", m_svg, m_csv;
    map_cmd->add_option("--rect", m_rect, "reLo:reHi,imLo:imHi");
    map_cmd->add_option("--step", m_step, "grid step (rational)");
    map_cmd->add_option("--svg", m_svg, "write SVG to this path");
    map_cmd->add_option("--csv", m_csv, "write CSV to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(cls_mu, cls_grid, cls_json, cls_csv, cls_svg);
        if (cc_cmd->parsed()) return cmd_central_charge(cc_mu, cc_grid, cc_csv);
        if (verify_cmd->parsed())
            return cmd_verify(v_suite, v_mu, v_degcap, v_window, v_scanlen, v_reportcap, v_json);
        if (zhu_cmd->parsed())
            return cmd_zhu(z_mu, z_degcap, z_reportcap, z_budget, z_window, z_json, z_json_path,
                           z_checks);
        if (eval_cmd->parsed()) return cmd_eval(e_expr, e_apply, e_mu, e_degcap, e_json);
        if (map_cmd->parsed()) return cmd_region_map(m_rect, m_step, m_svg, m_csv);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const TruncationOverflow& e) {
        std::cerr << "truncation overflow: " << e.what() << " (term " << e.term() << ")\n";
        return kOverflow;
    } catch (const DomainError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
