// planemap: command-line front end. JSON report on stdout, summary on stderr.
// Exit status: 0 clean, 3 violations or unconfirmed points, 1 errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planemap/algebra.hpp"
#include "planemap/parse.hpp"
#include "planemap/report.hpp"

using namespace planemap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 3;

struct Outcome {
    Json result;
    std::string summary;
    int status = kExitOk;
};

GaussianInt parse_gaussian(const std::string& text, const char* what) {
    const Poly c = parse_expression(text, kSourceVariables);
    if (!c.is_constant() || !c.constant_term().is_integral())
        throw std::invalid_argument(std::string(what) + " must be a Gaussian integer, got \"" + text + "\"");
    return c.constant_term().num();
}

ExceptionalOptions exceptional_options(const RunConfig& cfg) {
    return {cfg.tolerance, cfg.samples, cfg.trials, cfg.seed};
}

struct CurveChoice {
    PlaneCurveSet curve;
    std::string source;
};

CurveChoice choose_curve(const MapFile& mf, const std::string& source, const RunConfig& cfg,
                         std::optional<ExceptionalAnalysis>& analysis) {
    const bool use_file = source == "file" || (source == "auto" && mf.supplied_curve);
    if (use_file) {
        if (!mf.supplied_curve) throw std::invalid_argument("map file supplies no \"exceptional\" curve");
        return {*mf.supplied_curve, "supplied"};
    }
    if (!analysis) analysis = analyze_exceptional(mf.map, exceptional_options(cfg));
    return {analysis->set, "computed"};
}

Json curve_header(const CurveChoice& c) {
    return {{"source", c.source}, {"defining", c.curve.empty() ? std::string("1") : c.curve.defining().to_string()},
            {"degree", c.curve.empty() ? 0 : c.curve.degree()}};
}

Outcome cmd_check(const MapFile& mf) {
    const Poly j = jacobian(mf.map);
    Outcome o;
    o.result = {{"jacobian", j.to_string()},
                {"is_unit", j == Poly(1)},
                {"is_constant", j.is_constant() && !j.is_zero()},
                {"deg_p", mf.map.deg_p()},
                {"deg_q", mf.map.deg_q()},
                {"degree_gcd", mf.map.degree_gcd()},
                {"integral", mf.map.integral()}};
    o.summary = "JF = " + j.to_string() + (j == Poly(1) ? " (unit)" : "");
    return o;
}

Outcome cmd_invert(const MapFile& mf, const RunConfig& cfg, const std::vector<std::string>& translate) {
    PolyMap f = mf.map;
    Json shift = nullptr;
    if (!translate.empty()) {
        const GaussianInt a = parse_gaussian(translate[0], "translate a"), b = parse_gaussian(translate[1], "translate b");
        f = translate_map(f, a, b);
        shift = {a.to_string(), b.to_string()};
    }
    const SeriesMap g = local_inverse(f, cfg.order);
    const RoundTrip rt = round_trip(f, g);
    Json axes = Json::object();
    for (const auto& [name, axis] : {std::pair{"u", Axis::U}, std::pair{"v", Axis::V}}) {
        const auto [s1, s2] = restrict_to_axis(g, axis);
        const int w = std::min(cfg.window, cfg.order);
        axes[name] = {{"g1", to_json(s1)},
                      {"g2", to_json(s2)},
                      {"tail_g1", to_json(detect_polynomial_tail(s1, w))},
                      {"tail_g2", to_json(detect_polynomial_tail(s2, w))}};
    }
    const std::string residual =
        rt.identity() ? "0 mod deg " + std::to_string(cfg.order + 1) : "nonzero below degree " + std::to_string(cfg.order + 1);
    Outcome o;
    o.result = {{"translate", shift},
                {"map", {{"p", f.p().to_string()}, {"q", f.q().to_string()}}},
                {"inverse", {{"g1", to_json(g.g1)}, {"g2", to_json(g.g2)}}},
                {"round_trip", {{"identity", rt.identity()}, {"residual", residual}}},
                {"axes", axes}};
    o.summary = "local inverse to order " + std::to_string(cfg.order) + ", round trip " + residual;
    if (!rt.identity()) o.status = kExitError;
    return o;
}

Outcome cmd_exceptional(const MapFile& mf, const RunConfig& cfg) {
    const ExceptionalAnalysis a = analyze_exceptional(mf.map, exceptional_options(cfg));
    Outcome o;
    o.result = to_json(a);
    if (mf.supplied_curve) {
        const Poly& s = mf.supplied_curve->defining();
        const Poly& c = a.set.defining();
        o.result["supplied"] = {{"defining", s.to_string()},
                                {"supplied_divides_computed", divides(s, c)},
                                {"computed_divides_supplied_times_critical", divides(c, s * a.critical.defining())}};
    }
    o.summary = "exceptional set: " + (a.set.empty() ? std::string("empty") : a.set.defining().to_string()) +
                ", deg_geo = " + std::to_string(a.degree.deg_geo);
    return o;
}

std::optional<CountBounds> bounds_for(const MapFile& mf, const CurveChoice& curve, const ExceptionalAnalysis& a) {
    if (!a.degree.agreed || mf.map.degree_gcd() == 0) return std::nullopt;
    return fiber_count_bounds(mf.map, a.degree.deg_geo, curve.curve);
}

Outcome cmd_fibers(const MapFile& mf, const RunConfig& cfg, const std::string& k_text, const std::string& source) {
    const GaussianInt k = parse_gaussian(k_text, "k");
    const LatticeBox box{cfg.box, cfg.ring_m};
    const FiberPointSet fp = enumerate_fiber_points(mf.map.p(), k, box);
    Outcome o;
    o.result = to_json(fp);
    std::optional<ExceptionalAnalysis> analysis;
    try {
        const CurveChoice curve = choose_curve(mf, source, cfg, analysis);
        if (!analysis) analysis = analyze_exceptional(mf.map, exceptional_options(cfg));
        const auto b = bounds_for(mf, curve, *analysis);
        o.result["curve"] = curve_header(curve);
        o.result["deg_geo"] = analysis->degree.deg_geo;
        o.result["bound4"] = b ? Json(b->bound4) : Json(nullptr);
        o.result["bound5"] = b ? Json(b->bound5) : Json(nullptr);
    } catch (const std::exception& e) {
        o.result["bound4"] = nullptr;
        o.result["bound5"] = nullptr;
        o.result["bounds_error"] = e.what();
    }
    o.summary = "#I(P," + k.to_string() + ") in box B=" + std::to_string(cfg.box) + ": " + std::to_string(fp.count());
    return o;
}

Outcome cmd_verify(const MapFile& mf, const RunConfig& cfg, const std::string& which, const std::string& source,
                   const std::vector<std::string>& ks) {
    std::optional<ExceptionalAnalysis> analysis;
    const CurveChoice curve = choose_curve(mf, source, cfg, analysis);
    const LatticeBox box{cfg.box, cfg.ring_m};
    Outcome o;
    if (which == "dist" || which == "dhat") {
        const InequalityReport r = which == "dist" ? verify_dist_inequality(mf.map, curve.curve, box, cfg.tolerance)
                                                   : verify_dhat_inequality(mf.map, curve.curve, box, cfg.tolerance);
        o.result = to_json(r);
        o.result["curve"] = curve_header(curve);
        const std::size_t bad = which == "dist" ? r.unconfirmed.size() : r.violations.size();
        o.status = bad ? kExitViolations : kExitOk;
        o.summary = which + ": checked " + std::to_string(r.checked) + ", " +
                    (which == "dist" ? "unconfirmed " : "violations ") + std::to_string(bad) +
                    (r.vacuous ? " (" + r.note + ")" : "");
        return o;
    }
    if (!analysis) analysis = analyze_exceptional(mf.map, exceptional_options(cfg));
    const auto b = bounds_for(mf, curve, *analysis);
    if (!b) throw std::runtime_error("count bounds unavailable: topological degree not agreed or constant component");
    Json rows = Json::array();
    bool exceeded = false;
    for (const std::string& kt : ks) {
        const GaussianInt k = parse_gaussian(kt, "k");
        const std::size_t n = enumerate_fiber_points(mf.map.p(), k, box).count();
        const bool over4 = static_cast<double>(n) > static_cast<double>(b->bound4);
        const bool over5 = static_cast<double>(n) > b->bound5;
        // The bounds exclude levels whose line u = k lies inside the curve.
        const bool excluded =
            !curve.curve.empty() && divides(Poly::variable(Var::U) - Poly(k), curve.curve.defining());
        exceeded = exceeded || (!excluded && (over4 || over5));
        rows.push_back({{"k", lattice_json(k)},
                        {"count", n},
                        {"line_in_curve", excluded},
                        {"exceeds_bound4", over4},
                        {"exceeds_bound5", over5}});
    }
    o.result = {{"curve", curve_header(curve)},
                {"deg_geo", analysis->degree.deg_geo},
                {"bound4", b->bound4},
                {"bound5", b->bound5},
                {"fibers", rows}};
    o.status = exceeded ? kExitViolations : kExitOk;
    o.summary = "bounds: (4) = " + std::to_string(b->bound4) + ", (5) = " + std::to_string(b->bound5) +
                (exceeded ? ", exceeded" : ", respected");
    return o;
}

Json error_json(const std::string& kind, const std::string& message, const std::string& field = "",
                std::optional<std::size_t> position = std::nullopt) {
    Json e = {{"kind", kind}, {"message", message}};
    if (!field.empty()) e["field"] = field;
    if (position) e["position"] = *position;
    return {{"error", e}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of plane polynomial maps F = (P, Q)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    bool pretty = false;
    app.add_option("--seed", cfg.seed, "random seed for every sampling step")->capture_default_str();
    app.add_option("--order", cfg.order, "series truncation order N")->capture_default_str();
    app.add_option("--window", cfg.window, "tail detection window W")->capture_default_str();
    app.add_option("--box", cfg.box, "lattice box bound B")->capture_default_str();
    app.add_option("--ring-m", cfg.ring_m, "lattice ring Z[i sqrt(m)]")->capture_default_str();
    app.add_option("--trials", cfg.trials, "targets for the topological degree")->capture_default_str();
    app.add_option("--samples", cfg.samples, "samples per non-proper candidate")->capture_default_str();
    app.add_option("--tol", cfg.tolerance, "numeric tolerance")->capture_default_str();
    app.add_flag("--json", "compact JSON output (default)");
    app.add_flag("--pretty", pretty, "indented JSON output");

    std::string path, which, k_text = "0", source = "auto";
    std::vector<std::string> translate;
    std::vector<std::string> ks{"0", "1", "-1", "2", "-2", "i", "-i"};

    auto* check = app.add_subcommand("check", "Jacobian and degree data");
    check->add_option("map", path, "map file")->required();
    auto* invert = app.add_subcommand("invert", "truncated local inverse at the origin");
    invert->add_option("map", path, "map file")->required();
    invert->add_option("--translate", translate, "translate by (a, b) first: F(x+a, y+b) - F(a, b)")->expected(2);
    auto* exceptional = app.add_subcommand("exceptional", "non-proper and critical value curves");
    exceptional->add_option("map", path, "map file")->required();
    auto* fibers = app.add_subcommand("fibers", "lattice points on P = k");
    fibers->add_option("map", path, "map file")->required();
    fibers->add_option("--k", k_text, "fiber label (Gaussian integer)")->capture_default_str();
    fibers->add_option("--curve-source", source, "auto, file or computed")
        ->check(CLI::IsMember({"auto", "file", "computed"}))
        ->capture_default_str();
    auto* verify = app.add_subcommand("verify", "check the lattice inequalities or count bounds");
    verify->add_option("map", path, "map file")->required();
    verify->add_option("which", which, "dist, dhat or bounds")->required()->check(CLI::IsMember({"dist", "dhat", "bounds"}));
    verify->add_option("--curve-source", source, "auto, file or computed")
        ->check(CLI::IsMember({"auto", "file", "computed"}))
        ->capture_default_str();
    verify->add_option("--k", ks, "fiber labels for bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    Json report = {{"command", app.get_subcommands().front()->get_name()}, {"config", to_json(cfg)}};
    Outcome outcome;
    try {
        cfg.validate();
        const MapFile mf = load_map_file(path);
        report["map"] = {{"name", mf.name}, {"p", mf.map.p().to_string()}, {"q", mf.map.q().to_string()}};
        if (*check) outcome = cmd_check(mf);
        else if (*invert) outcome = cmd_invert(mf, cfg, translate);
        else if (*exceptional) outcome = cmd_exceptional(mf, cfg);
        else if (*fibers) outcome = cmd_fibers(mf, cfg, k_text, source);
        else outcome = cmd_verify(mf, cfg, which, source, ks);
        report["result"] = outcome.result;
        report["exit_status"] = outcome.status;
    } catch (const MapFileError& e) {
        report.update(error_json("map-file", e.what(), e.field(), e.position()));
        outcome.status = kExitError;
        outcome.summary = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
        report.update(error_json("runtime", e.what()));
        outcome.status = kExitError;
        outcome.summary = std::string("error: ") + e.what();
    }
    std::cout << report.dump(pretty ? 2 : -1) << '\n';
    std::cerr << outcome.summary << '\n';
    return outcome.status;
}
