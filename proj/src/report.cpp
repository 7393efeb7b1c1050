#include "planemap/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "planemap/parse.hpp"

namespace planemap {

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

std::string required_string(const Json& obj, const char* key) {
    if (!obj.contains(key)) throw MapFileError(std::string("map file is missing \"") + key + "\"", key);
    if (!obj[key].is_string()) throw MapFileError(std::string("\"") + key + "\" must be a string", key);
    return obj[key].get<std::string>();
}

Poly parse_field(const std::string& text, const Variables& vars, const char* field) {
    try {
        return parse_expression(text, vars);
    } catch (const ParseError& e) {
        throw MapFileError(std::string(field) + ": " + e.what(), field, e.position());
    }
}

Json sample_json(const SampleCount& s) {
    return {{"u", complex_json(s.u)}, {"v", complex_json(s.v)}, {"count", s.count}};
}

Json point_json(const std::optional<CurvePoint>& p) {
    if (!p) return nullptr;
    return {complex_json(p->u), complex_json(p->v)};
}

}  // namespace

void RunConfig::validate() const {
    auto positive = [](long long v, const char* name) {
        if (v <= 0) throw std::invalid_argument(std::string(name) + " must be positive");
    };
    positive(order, "order");
    positive(window, "window");
    positive(box, "box");
    positive(ring_m, "ring-m");
    positive(trials, "trials");
    positive(samples, "samples");
    if (!(tolerance > 0)) throw std::invalid_argument("tol must be positive");
}

MapFile parse_map_file(const std::string& text, const std::string& fallback_name) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MapFileError(std::string("map file is not valid JSON: ") + e.what(), "", e.byte);
    }
    if (!j.is_object()) throw MapFileError("map file must be a JSON object", "");
    MapFile m;
    m.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : fallback_name;
    m.p_text = required_string(j, "p");
    m.q_text = required_string(j, "q");
    if (j.contains("variables")) {
        const Json& v = j["variables"];
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
            throw MapFileError("\"variables\" must be a list of two names", "variables");
        m.first = v[0].get<std::string>();
        m.second = v[1].get<std::string>();
    }
    if (j.contains("integral")) {
        if (!j["integral"].is_boolean()) throw MapFileError("\"integral\" must be true or false", "integral");
        m.integral = j["integral"].get<bool>();
    }
    if (j.contains("metadata")) m.metadata = j["metadata"];
    const Variables vars{m.first, m.second, Var::X, Var::Y};
    const Poly p = parse_field(m.p_text, vars, "p");
    const Poly q = parse_field(m.q_text, vars, "q");
    m.map = PolyMap(p, q);
    if (m.integral && !m.map.integral())
        throw MapFileError("map is flagged integral but has non-Gaussian-integer coefficients", "integral");
    if (j.contains("exceptional")) {
        m.exceptional_text = required_string(j, "exceptional");
        m.supplied_curve =
            PlaneCurveSet::from_polynomial(parse_field(*m.exceptional_text, kTargetVariables, "exceptional"));
    }
    return m;
}

MapFile load_map_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MapFileError("cannot open map file " + path.string(), "");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map_file(buf.str(), path.stem().string());
}

Json to_json(const RunConfig& c) {
    return {{"seed", c.seed},       {"order", c.order},     {"window", c.window},   {"box", c.box},
            {"ring_m", c.ring_m},   {"trials", c.trials},   {"samples", c.samples}, {"tol", c.tolerance}};
}

Json complex_json(Complex z) { return {z.real(), z.imag()}; }

Json lattice_json(const GaussianInt& z) { return {integer_json(z.re()), integer_json(z.im())}; }

Json real_json(double x) {
    if (std::isinf(x) && x > 0) return "inf";
    return x;
}

Json to_json(const TruncSeries2& s) {
    const bool target = s.terms().involves(Var::U) || s.terms().involves(Var::V) || s.terms().is_constant();
    const Var a = target ? Var::U : Var::X, b = target ? Var::V : Var::Y;
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms().terms())
        terms.push_back({{"eu", e[slot(a)]},
                         {"ev", e[slot(b)]},
                         {"re_num", integer_json(c.num().re())},
                         {"im_num", integer_json(c.num().im())},
                         {"den", integer_json(c.den())}});
    return {{"order", s.order()}, {"terms", terms}, {"text", s.to_string()}};
}

Json to_json(const UniSeries& s) {
    Json coeffs = Json::array();
    for (const GaussianRational& c : s.coeffs) coeffs.push_back(c.to_string());
    return {{"order", s.order}, {"coefficients", coeffs}};
}

Json to_json(const TailReport& t) {
    return {{"verdict", to_string(t.verdict)},
            {"order", t.order},
            {"window", t.window},
            {"nonzero_degrees", t.nonzero_degrees},
            {"method", "heuristic: inspects coefficients of degrees " + std::to_string(t.order - t.window + 1) +
                           ".." + std::to_string(t.order) + " only"}};
}

Json to_json(const PlaneCurveSet& c) {
    Json comps = Json::array();
    for (const CurveComponent& comp : c.components()) {
        Json samples = Json::array();
        for (const SampleCount& s : comp.samples) samples.push_back(sample_json(s));
        comps.push_back({{"tag", to_string(comp.tag)},
                         {"poly", comp.poly.to_string()},
                         {"confirmed", comp.confirmed},
                         {"samples", samples}});
    }
    return {{"defining", c.empty() ? std::string("1") : c.defining().to_string()},
            {"degree", c.empty() ? 0 : c.degree()},
            {"empty", c.empty()},
            {"components", comps}};
}

Json to_json(const DegreeReport& d) {
    Json trials = Json::array();
    for (const DegreeSample& s : d.samples)
        trials.push_back({{"u", s.u.to_string()}, {"v", s.v.to_string()}, {"count", s.count}});
    return {{"value", d.deg_geo}, {"agreed", d.agreed}, {"trials", trials}};
}

Json to_json(const ExceptionalAnalysis& a) {
    Json out = to_json(a.set);
    out["deg_geo"] = to_json(a.degree);
    out["nonproper_candidates"] = to_json(a.candidates);
    out["critical_values"] = to_json(a.critical);
    out["certification"] = "non-properness certified by sampling, not proved";
    return out;
}

Json to_json(const MetricValue& m) {
    return {{"kind", to_string(m.kind)},
            {"value", real_json(m.value)},
            {"witness", point_json(m.witness)},
            {"u_slice", real_json(m.u_slice)},
            {"v_slice", real_json(m.v_slice)}};
}

Json to_json(const FiberPointSet& f) {
    Json pts = Json::array();
    for (const auto& [x, y] : f.points)
        pts.push_back({integer_json(x.re()), integer_json(x.im()), integer_json(y.re()), integer_json(y.im())});
    Json lines = Json::array();
    for (const GaussianInt& x : f.line_fibers) lines.push_back(lattice_json(x));
    return {{"k", lattice_json(f.k)},
            {"box", {{"B", f.box.bound}, {"m", f.box.ring_m}}},
            {"count", f.count()},
            {"points", pts},
            {"line_fiber", {{"present", !f.line_fibers.empty()}, {"x", lines}, {"count", f.line_count()}}}};
}

Json to_json(const InequalityEntry& e) {
    return {{"p", {lattice_json(e.p.first), lattice_json(e.p.second)}},
            {"image", {complex_json(e.image.u), complex_json(e.image.v)}},
            {"value", real_json(e.value)},
            {"witness", point_json(e.witness)}};
}

Json to_json(const InequalityReport& r) {
    auto list = [](const std::vector<InequalityEntry>& v) {
        Json a = Json::array();
        for (const InequalityEntry& e : v) a.push_back(to_json(e));
        return a;
    };
    return {{"checked", r.checked},
            {"confirmed", r.confirmed},
            {"tolerance", r.tolerance},
            {"max_value", real_json(r.max_value)},
            {"vacuous", r.vacuous},
            {"note", r.note},
            {"unconfirmed", list(r.unconfirmed)},
            {"violations", list(r.violations)},
            {"near_threshold", list(r.near_threshold)}};
}

}  // namespace planemap
