#include "expansionlab/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "expansionlab/error.hpp"

namespace explab {

namespace {

using json = nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double positive(const json& v, const std::string& key) {
    if (!v.is_number()) throw Error(ErrorCode::ParseError, "config key '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!(d > 0)) throw Error(ErrorCode::ParseError, "config key '" + key + "' must be positive");
    return d;
}

std::size_t count(const json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw Error(ErrorCode::ParseError, "config key '" + key + "' must be a positive integer");
    return v.get<std::size_t>();
}

}  // namespace

void LabConfig::validate() const {
    expansion.validate();
    if (!(eps_stab > 0) || !(refine_tol > 0) || !(gap_tol > 0))
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
    if (oracle_grid < 2 || equal_gap_grid < 2) throw Error(ErrorCode::InvalidArgument, "grids must be >= 2");
}

void apply_config_json(LabConfig& cfg, std::string_view json_text) {
    if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        cfg.validate();
        return;
    }
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "config " + line_column(json_text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");

    for (const auto& [key, v] : doc.items()) {
        if (key == "tau_root") cfg.expansion.tau_root = positive(v, key);
        else if (key == "tau_eval") cfg.expansion.tau_eval = positive(v, key);
        else if (key == "tau_norm") cfg.expansion.tau_norm = positive(v, key);
        else if (key == "max_boundary_size") cfg.expansion.max_boundary_size = count(v, key);
        else if (key == "include_tied_pairs") {
            if (!v.is_boolean()) throw Error(ErrorCode::ParseError, "config key 'include_tied_pairs' must be a boolean");
            cfg.expansion.include_tied_pairs = v.get<bool>();
        }
        else if (key == "eps_stab") cfg.eps_stab = positive(v, key);
        else if (key == "oracle_grid") cfg.oracle_grid = count(v, key);
        else if (key == "equal_gap_grid") cfg.equal_gap_grid = count(v, key);
        else if (key == "refine_tol") cfg.refine_tol = positive(v, key);
        else if (key == "gap_tol") cfg.gap_tol = positive(v, key);
        else throw Error(ErrorCode::UnknownKey, "unknown config key '" + key + "'");
    }
    cfg.validate();
}

LabConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    LabConfig cfg;
    apply_config_json(cfg, buf.str());
    return cfg;
}

}  // namespace explab
