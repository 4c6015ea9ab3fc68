#include "weylflow/reports.hpp"

#include <cmath>
#include <cstdio>

namespace weylflow {

using nlohmann::json;

json state_to_json(const State& s) {
    json out = json::array();
    for (const auto& [mono, coeff] : s.terms())
        out.push_back({{"monomial", mono.str()}, {"coeff", coeff.str()}});
    return out;
}

State state_from_json(const json& j) {
    State s;
    for (const auto& term : j) {
        State mono = parse_state(term.at("monomial").get<std::string>());
        GaussRat c = GaussRat::parse(term.at("coeff").get<std::string>());
        mono *= c;
        s += mono;
    }
    return s;
}

json region_to_json(const GaussRat& mu, const RegionClass& region) {
    return {{"mu", mu.str()},
            {"reMu", mu.re().str()},
            {"imMu", mu.im().str()},
            {"tag", to_string(region.tag)},
            {"subcase", to_string(region.subcase)},
            {"omega", to_string(region.omega)},
            {"centralCharge", central_charge(mu).str()}};
}

json suite_to_json(const SuiteReport& report) {
    json checks = json::array();
    for (const auto& line : report.lines)
        checks.push_back({{"name", line.name}, {"passed", line.passed}, {"detail", line.detail}});
    return {{"suite", report.suite},
            {"mu", report.mu},
            {"passed", report.all_passed()},
            {"checks", checks}};
}

json zhu_report_json(const ZhuContext& ctx, const ZhuQuotient& quotient, const Rat& report_cap,
                     const std::vector<ZhuCheck>& checks) {
    json repr = json::array();
    for (const Monomial& m : quotient.repr_basis) repr.push_back(m.str());

    json table = json::array();
    for (const StarEntry& e : quotient.star_table) {
        json entry = {{"left", e.left}, {"right", e.right}};
        switch (e.status) {
            case StarStatus::Ok: {
                json coeffs = json::array();
                for (const auto& [k, c] : e.coeffs)
                    coeffs.push_back({{"basis", k}, {"coeff", c.str()}});
                entry["product"] = coeffs;
                entry["status"] = "ok";
                break;
            }
            case StarStatus::OutsideWindow:
                entry["status"] = "outside-reported-window";
                break;
            case StarStatus::Overflow:
                entry["status"] = "overflow";
                break;
        }
        table.push_back(std::move(entry));
    }

    json check_list = json::array();
    for (const ZhuCheck& c : checks)
        check_list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});

    json skipped = json::array();
    for (const SkippedGenerator& s : ctx.skipped())
        skipped.push_back({{"left", s.left}, {"right", s.right}, {"reason", s.reason}});

    return {{"mu", ctx.mu().str()},
            {"degCap", ctx.config().deg_cap.str()},
            {"pairBudget", ctx.config().pair_budget.str()},
            {"reportCap", report_cap.str()},
            {"dimUpperBound", quotient.dim_upper_bound},
            {"v0Dim", quotient.v0_dim},
            {"cQuotientDim", ctx.c_built() ? json(ctx.c_quotient_dim()) : json(nullptr)},
            {"ambientDim", ctx.ambient().size()},
            {"ambientCapped", ctx.ambient_capped()},
            {"reprBasis", repr},
            {"starTable", table},
            {"checks", check_list},
            {"skippedGenerators", skipped},
            {"maxTruncationIndex", ctx.max_truncation_index()}};
}

std::string classification_csv(const std::vector<GridPoint>& points) {
    std::string out = "reMu,imMu,tag,subcase\n";
    for (const GridPoint& p : points) {
        out += p.mu.re().str() + "," + p.mu.im().str() + "," + to_string(p.region.tag) + "," +
               to_string(p.region.subcase) + "\n";
    }
    return out;
}

std::string central_charge_csv(const std::vector<GaussRat>& mus) {
    std::string out = "reMu,imMu,centralCharge\n";
    for (const GaussRat& mu : mus)
        out += mu.re().str() + "," + mu.im().str() + "," + central_charge(mu).str() + "\n";
    return out;
}

namespace {

double to_double(const Rat& r) {
    return mpq_class(r.numerator(), r.denominator()).get_d();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

const char* fill_for(RegionTag tag) {
    switch (tag) {
        case RegionTag::OmegaVoa: return "#2c7fb8";
        case RegionTag::StripConfOmega: return "#7fcdbb";
        case RegionTag::NotOmegaGenerated: return "#edf8b1";
    }
    return "#000000";
}

} // namespace

std::string region_map_svg(const Rat& re_lo, const Rat& re_hi, const Rat& im_lo,
                           const Rat& im_hi, const std::vector<GridPoint>& points) {
    const double W = 640, H = 480, margin = 40;
    double xlo = to_double(re_lo), xhi = to_double(re_hi);
    double ylo = to_double(im_lo), yhi = to_double(im_hi);
    auto X = [&](double re) { return margin + (re - xlo) / (xhi - xlo) * (W - 2 * margin); };
    auto Y = [&](double im) { return H - margin - (im - ylo) / (yhi - ylo) * (H - 2 * margin); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    // exterior: everything drawn first in the outside class color
    svg += "<rect x=\"" + fmt(X(xlo)) + "\" y=\"" + fmt(Y(yhi)) + "\" width=\"" +
           fmt(X(xhi) - X(xlo)) + "\" height=\"" + fmt(Y(ylo) - Y(yhi)) + "\" fill=\"" +
           fill_for(RegionTag::NotOmegaGenerated) + "\" id=\"region-outside\"/>\n";
    // strip 0 <= Re(mu) <= 1
    double sx0 = std::max(0.0, xlo), sx1 = std::min(1.0, xhi);
    if (sx1 > sx0) {
        svg += "<rect x=\"" + fmt(X(sx0)) + "\" y=\"" + fmt(Y(yhi)) + "\" width=\"" +
               fmt(X(sx1) - X(sx0)) + "\" height=\"" + fmt(Y(ylo) - Y(yhi)) + "\" fill=\"" +
               fill_for(RegionTag::StripConfOmega) + "\" id=\"region-strip\"/>\n";
    }
    // the closed diamond with vertices 0, 1/2 + i/2, 1, 1/2 - i/2
    svg += "<polygon points=\"" + fmt(X(0)) + "," + fmt(Y(0)) + " " + fmt(X(0.5)) + "," +
           fmt(Y(0.5)) + " " + fmt(X(1)) + "," + fmt(Y(0)) + " " + fmt(X(0.5)) + "," +
           fmt(Y(-0.5)) + "\" fill=\"" + fill_for(RegionTag::OmegaVoa) +
           "\" id=\"region-diamond\"/>\n";
    // axes
    svg += "<line x1=\"" + fmt(X(xlo)) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(X(xhi)) +
           "\" y2=\"" + fmt(Y(0)) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    if (xlo <= 0 && xhi >= 0)
        svg += "<line x1=\"" + fmt(X(0)) + "\" y1=\"" + fmt(Y(ylo)) + "\" x2=\"" + fmt(X(0)) +
               "\" y2=\"" + fmt(Y(yhi)) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    // sampled points, colored by the computed class
    for (const GridPoint& p : points) {
        svg += "<circle cx=\"" + fmt(X(to_double(p.mu.re()))) + "\" cy=\"" +
               fmt(Y(to_double(p.mu.im()))) + "\" r=\"2.5\" fill=\"" + fill_for(p.region.tag) +
               "\" stroke=\"#333\" stroke-width=\"0.4\"/>\n";
    }
    svg += "<text x=\"" + fmt(X(xhi) - 60) + "\" y=\"" + fmt(Y(0) - 6) +
           "\" font-size=\"12\">Re(mu)</text>\n";
    if (xlo <= 0 && xhi >= 0)
        svg += "<text x=\"" + fmt(X(0) + 6) + "\" y=\"" + fmt(Y(yhi) + 14) +
               "\" font-size=\"12\">Im(mu)</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace weylflow
