#include "expansionlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "expansionlab/error.hpp"

namespace explab {

Json number(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite value in report");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    double r = std::strtod(buf, nullptr);
    if (r == 0.0) r = 0.0;  // drop the sign of -0
    return r;
}

Json numbers(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

Json to_json(const Polynomial& p) {
    return Json{{"coeffs", numbers(p.coeffs())}, {"text", to_string(p)}};
}

Json to_json(const PolyTuple& s) {
    Json comps = Json::array();
    for (const auto& f : s) comps.push_back(numbers(f.coeffs()));
    return Json{{"components", comps}, {"text", to_string(s)}};
}

Json to_json(const PointTuple& p) { return numbers(p.coords()); }

Json to_json(const std::vector<PointTuple>& points) {
    Json a = Json::array();
    for (const auto& p : points) a.push_back(to_json(p));
    return a;
}

Json to_json(const LabConfig& cfg) {
    return Json{{"tau_root", number(cfg.expansion.tau_root)},
                {"tau_eval", number(cfg.expansion.tau_eval)},
                {"tau_norm", number(cfg.expansion.tau_norm)},
                {"max_boundary_size", cfg.expansion.max_boundary_size},
                {"include_tied_pairs", cfg.expansion.include_tied_pairs},
                {"eps_stab", number(cfg.eps_stab)},
                {"oracle_grid", cfg.oracle_grid},
                {"equal_gap_grid", cfg.equal_gap_grid},
                {"refine_tol", number(cfg.refine_tol)},
                {"gap_tol", number(cfg.gap_tol)}};
}

Json to_json(const BoundarySet& b) {
    Json roots = Json::array();
    for (const auto& comp : b.component_roots) {
        Json r = Json::array();
        for (const auto& root : comp) r.push_back(Json{{"value", number(root.value)}, {"multiplicity", root.multiplicity}});
        roots.push_back(r);
    }
    std::vector<double> norms;
    for (const auto& p : b.points) norms.push_back(p.norm());
    Json out{{"phase", b.phase},
             {"expansion", to_json(b.source)},
             {"component_roots", roots},
             {"count", b.size()},
             {"boundary", to_json(b.points)},
             {"norms", numbers(norms)}};
    if (b.size() >= 2) out["gaps"] = numbers(consecutive_gaps(b));
    return out;
}

Json to_json(const BoundaryIntegral& bi) {
    Json pairs = Json::array();
    for (const auto& p : bi.breakdown.pairs)
        pairs.push_back(Json{{"index", p.index},
                             {"delta", to_json(p.delta)},
                             {"value", number(p.value)},
                             {"gap", number(p.gap)},
                             {"tied", p.tied}});
    std::vector<double> norms;
    for (const auto& p : bi.boundary.points) norms.push_back(p.norm());
    return Json{{"input", to_json(bi.f)},
                {"representation", to_json(bi.representation)},
                {"phase", bi.boundary.phase},
                {"expansion", to_json(bi.boundary.source)},
                {"boundary", to_json(bi.boundary.points)},
                {"norms", numbers(norms)},
                {"gaps", numbers(consecutive_gaps(bi.boundary))},
                {"pair_integrals", pairs},
                {"skipped_tied_pairs", bi.breakdown.skipped_tied},
                {"total", number(bi.total())},
                {"total_abs", number(std::abs(bi.total()))}};
}

Json to_json(const BoundCertificate& c) {
    return Json{{"integral", number(c.integral)},
                {"integral_abs", number(c.integral_abs)},
                {"boundary_count", c.boundary_count},
                {"tuple_dim", c.tuple_dim},
                {"M_global", number(c.M_global)},
                {"M_per_pair", numbers(c.M_per_pair)},
                {"R_per_pair", numbers(c.R_per_pair)},
                {"gaps", numbers(c.gaps)},
                {"max_gap", number(c.max_gap)},
                {"min_gap", number(c.min_gap)},
                {"chain_bound", number(c.chain_bound)},
                {"implied_delta", number(c.implied_delta)},
                {"C_emp", number(empirical_constant(c, ConstantTarget::delta))},
                {"holds", c.holds},
                {"measured_only", Json{{"closest_pair_exceeds_delta", c.closest_pair_exceeds_delta}}}};
}

Json to_json(const ReverseReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"index", p.index},
                             {"R_pair", number(p.R_pair)},
                             {"M_pair", number(p.M_pair)},
                             {"gap", number(p.gap)},
                             {"delta_norm", number(p.delta_norm)},
                             {"lower", number(p.lower)},
                             {"upper", number(p.upper)},
                             {"cos_alpha", number(p.cos_alpha)},
                             {"holds", p.holds}});
    return Json{{"pairs", pairs},
                {"all_hold", r.all_hold},
                {"cos_sign_uniform", r.cos_sign_uniform},
                {"aggregate_certified", r.aggregate_certified}};
}

Json to_json(const StabilityReport& r) {
    return Json{{"integral_abs", number(r.integral_abs)},
                {"hypothesis_met", r.hypothesis_met},
                {"norm_spread", number(r.norm_spread)},
                {"norm_range", number(r.norm_range)},
                {"every_rotation_stable_at_spread", r.every_rotation_stable_at_spread},
                {"identity_stable", r.identity_stable},
                {"cyclic_shift_deviation", number(r.cyclic_shift_deviation)},
                {"cyclic_shift_stable", r.cyclic_shift_stable},
                {"eps_stab", number(r.eps_stab)},
                {"asserted", false}};
}

Json to_json(const StabilityCheck& s) {
    return Json{{"stable", s.stable}, {"max_deviation", number(s.max_deviation)}, {"eps_stab", number(s.eps_stab)}};
}

Json to_json(const RunnerSnapshot& s, Metric metric) {
    return Json{{"time", number(s.time)},
                {"metric", metric_name(metric)},
                {"angles", numbers(s.angles)},
                {"order", s.order},
                {"gaps", numbers(s.gaps)},
                {"equal_gap_residual", number(equal_gap_residual(s))}};
}

Json to_json(const BoundCheck& b) {
    Json out{{"time", number(b.time)},
             {"k", b.k},
             {"metric", metric_name(b.metric)},
             {"gaps", numbers(b.gaps)},
             {"min_gap", number(b.min_gap)},
             {"equal_gap_residual", number(b.residual)},
             {"D", number(b.D)},
             {"general", Json{{"bound", number(b.general_bound)},
                              {"pass", b.general_pass},
                              {"D_min", number(b.D_min_general)}}}};
    Json eight{{"applicable", b.eight_runner_form},
               {"bound", number(b.eight_runner_bound)},
               {"pass", b.eight_runner_pass},
               {"D_min", b.D_min_eight ? number(*b.D_min_eight) : Json(nullptr)}};
    out["eight_runner"] = eight;
    out["counts"] = Json{{"runners", b.k},
                         {"n_poly", b.n_poly},
                         {"generic_phase1_boundary", b.generic_boundary_count},
                         {"match", b.k == b.generic_boundary_count}};
    return out;
}

Json to_json(const LonelyResult& r) {
    return Json{{"t_star", number(r.t_star)},
                {"max_min", number(r.max_min_distance)},
                {"stationary_index", r.stationary},
                {"metric", "normalized"}};
}

Json serialize(const RunReport& r) {
    return Json{{"schema", kReportSchema},
                {"version", r.version},
                {"command", r.command},
                {"inputs", r.inputs},
                {"config", r.config},
                {"results", r.results}};
}

RunReport parse_report(const Json& doc) {
    if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kReportSchema)
        throw Error(ErrorCode::ParseError, "not a schema-1 report");
    RunReport r;
    try {
        r.version = doc.at("version").get<std::string>();
        r.command = doc.at("command").get<std::string>();
        r.inputs = doc.at("inputs");
        r.config = doc.at("config");
        r.results = doc.at("results");
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string dump(const Json& doc) { return doc.dump(2); }

}  // namespace explab
