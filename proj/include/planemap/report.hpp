#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "planemap/exceptional.hpp"
#include "planemap/lattice.hpp"
#include "planemap/series.hpp"

namespace planemap {

using Json = nlohmann::json;

struct RunConfig {
    std::uint64_t seed = 1;
    int order = kDefaultOrder;
    int window = kDefaultWindow;
    int box = 4;
    int ring_m = 1;
    int trials = 3;
    int samples = 5;
    double tolerance = 1e-9;

    /// Throws std::invalid_argument naming the first non-positive field.
    void validate() const;
};

class MapFileError : public std::runtime_error {
public:
    MapFileError(const std::string& what, std::string field, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), field_(std::move(field)), position_(position) {}
    const std::string& field() const { return field_; }
    std::optional<std::size_t> position() const { return position_; }

private:
    std::string field_;
    std::optional<std::size_t> position_;
};

/// A map definition: JSON object with "p", "q" and optional "name",
/// "variables" (two names, default ["x","y"]), "integral" (require Z[i]
/// coefficients), "exceptional" (a supplied curve in u, v) and "metadata".
struct MapFile {
    std::string name;
    std::string p_text, q_text;
    std::string first = "x", second = "y";
    bool integral = false;
    std::optional<std::string> exceptional_text;
    Json metadata = Json::object();

    PolyMap map;
    std::optional<PlaneCurveSet> supplied_curve;
};

MapFile parse_map_file(const std::string& text, const std::string& fallback_name = "map");
MapFile load_map_file(const std::filesystem::path& path);

Json to_json(const RunConfig& c);
Json complex_json(Complex z);
Json lattice_json(const GaussianInt& z);
/// Real numbers, with +infinity written as the string "inf".
Json real_json(double x);
Json to_json(const TruncSeries2& s);
Json to_json(const UniSeries& s);
Json to_json(const TailReport& t);
Json to_json(const PlaneCurveSet& c);
Json to_json(const DegreeReport& d);
Json to_json(const ExceptionalAnalysis& a);
Json to_json(const MetricValue& m);
Json to_json(const FiberPointSet& f);
Json to_json(const InequalityEntry& e);
Json to_json(const InequalityReport& r);

}  // namespace planemap
