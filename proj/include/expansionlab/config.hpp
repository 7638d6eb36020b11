#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "expansionlab/expansion.hpp"

namespace explab {

inline constexpr const char* kConfigEnvVar = "EXPANSIONLAB_CONFIG";

/// Every tunable the CLI exposes. Defaults apply unless a config file or a
/// command-line flag overrides them, in that order.
struct LabConfig {
    ExpansionConfig expansion{};
    double eps_stab = 1e-6;
    std::size_t oracle_grid = 1000000;
    std::size_t equal_gap_grid = 10000;
    double refine_tol = 1e-9;
    double gap_tol = 1e-6;

    void validate() const;
};

/// Applies the keys of a JSON object to cfg. Throws UnknownKey for keys not
/// listed in LabConfig and ParseError for wrongly typed values.
void apply_config_json(LabConfig& cfg, std::string_view json_text);

/// Reads and applies a config file over the defaults. ParseError messages
/// carry the line and column of malformed input.
LabConfig load_config(const std::string& path);

}  // namespace explab
