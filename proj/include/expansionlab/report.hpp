#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "expansionlab/bounds.hpp"
#include "expansionlab/config.hpp"
#include "expansionlab/expansion.hpp"
#include "expansionlab/geometry.hpp"
#include "expansionlab/polynomial.hpp"
#include "expansionlab/runners.hpp"
#include "expansionlab/tuple_calculus.hpp"

namespace explab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "0.1.0";

/// A finite double rounded to 9 significant digits. Throws std::domain_error
/// for NaN or infinity, which never belong in a report.
Json number(double v);
Json numbers(const std::vector<double>& v);

Json to_json(const Polynomial& p);
Json to_json(const PolyTuple& s);
Json to_json(const PointTuple& p);
Json to_json(const std::vector<PointTuple>& points);
Json to_json(const LabConfig& cfg);
Json to_json(const BoundarySet& b);
Json to_json(const BoundaryIntegral& bi);
Json to_json(const BoundCertificate& c);
Json to_json(const ReverseReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const StabilityCheck& s);
Json to_json(const RunnerSnapshot& s, Metric metric);
Json to_json(const BoundCheck& b);
Json to_json(const LonelyResult& r);

/// The document every CLI command prints.
struct RunReport {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Json config = Json::object();
    std::string version = kVersion;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json serialize(const RunReport& r);
/// Throws ParseError when the document is not a schema-1 report.
RunReport parse_report(const Json& doc);
std::string dump(const Json& doc);

}  // namespace explab
