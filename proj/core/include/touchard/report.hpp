#pragma once

// Grid configuration (JSON file + programmatic overrides) and machine-
// readable report assembly. JSON is the primary format; big integers are
// serialized as decimal strings so readers never overflow. Reports are
// byte-identical across runs for the same config and version; wall-clock
// data is opt-in and lives in a separate envelope field outside that
// guarantee.

#include <touchard/congruences.hpp>
#include <touchard/periods.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace touchard {

class config_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GridConfig {
    std::vector<CheckKind> kinds = all_check_kinds();
    std::optional<std::vector<long>> ps;
    std::optional<std::pair<long, long>> n_range;
    std::optional<std::pair<long, long>> m_range;
    std::optional<std::pair<long, long>> r_range;
    std::optional<std::pair<long, long>> a_range;
    std::optional<std::pair<long, long>> N_range;
    std::optional<long> horizon;
    long minimal_budget = 300000;
    std::string format = "json";  // json | csv
    bool record_all = false;
    bool timing = false;
    bool probe = false;

    // Throws config_error on malformed input (unknown keys, composite p,
    // empty ranges, wrong types).
    static GridConfig from_json(const nlohmann::json& j);
    static GridConfig from_file(const std::string& path);

    // Deterministic echo of the effective configuration.
    nlohmann::ordered_json echo() const;

    // The kind's canonical grid with any configured overrides applied.
    Grid grid_for(CheckKind kind) const;
};

nlohmann::ordered_json point_json(const CheckPoint& point);
nlohmann::ordered_json to_fragment(const CongruenceReport& report);
nlohmann::ordered_json to_fragment(const PeriodAnalysis& analysis);
nlohmann::ordered_json to_fragment(const DigitSumReport& report);

// {version, config, checks, status[, timings]}; overall status is PASS iff
// every check fragment's own status is PASS. config_echo is whatever the
// caller wants reproduced verbatim (GridConfig::echo() for verify runs).
nlohmann::ordered_json assemble_run_report(
    const nlohmann::ordered_json& config_echo,
    const std::vector<nlohmann::ordered_json>& checks,
    const std::vector<std::pair<std::string, double>>* timings_ms = nullptr);

// Flat exports: one row per tested point (congruence grids; fill the
// reports with record_all) / one row per analysis (period entries).
std::string verify_csv(const std::vector<CongruenceReport>& reports);
std::string period_csv(const std::vector<nlohmann::ordered_json>& checks);

}  // namespace touchard
