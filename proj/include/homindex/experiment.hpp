#ifndef HOMINDEX_EXPERIMENT_HPP
#define HOMINDEX_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace homindex {

struct ExperimentConfig {
    std::string name;
    std::string kind;
    std::uint64_t seed = 0;
    nlohmann::json parameters;                 // kind-specific
    std::map<std::string, double> tolerances;  // strictly positive

    double tolerance(const std::string& key, double fallback) const;
};

/// Validates the schema: known kind, positive tolerances, name present.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

/// One config file holds a single experiment object or an array of them.
std::vector<ExperimentConfig> parse_config_file(const std::string& path);

struct CheckRecord {
    std::string check_id;
    std::string paper_anchor; // the identity the record certifies
    double value = 0.0;
    double bound = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RunReport {
    std::string name;
    std::string kind;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;
    bool overall_pass = true;
    double wall_ms = 0.0;

    void add(CheckRecord r);
};

/// Deterministic given (config, seed). Contract violations surface as
/// std::invalid_argument; check failures only clear overall_pass.
RunReport run_experiment(const ExperimentConfig& config);

/// CSV rows: check_id, paper_anchor, value, bound, tolerance, pass.
std::string render_csv(const RunReport& report);
std::string render_json(const RunReport& report);

/// Known experiment kinds.
const std::vector<std::string>& experiment_kinds();

/// Weight rules, rule families, potentials, decay symbols and path families,
/// each with a parameter sketch.
nlohmann::json registry_catalog();

} // namespace homindex

#endif
