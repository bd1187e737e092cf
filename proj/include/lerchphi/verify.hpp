#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lerchphi/types.hpp"

namespace lerchphi::verify {

/// rel_tol/abs_tol/max_evals feed the quadrature layer; per-identity
/// pass tolerances are pinned from the identity families themselves.
struct run_config {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_evals = 1'000'000;
    enum class format { json, csv };
    format fmt = format::json;
    std::uint64_t seed = 7;
    enum class grid_size { small, full };
    grid_size grid = grid_size::full;
};

run_config config_from_json(const nlohmann::json& j);

struct check_report {
    std::string identity_id;
    nlohmann::json params;
    cplx formula_value{0.0, 0.0};
    cplx oracle_value{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::string skipped_reason;  // set for the documented excluded cases
};

nlohmann::json to_json(const check_report& r);
std::string csv_header();
std::string to_csv(const check_report& r);

/// Suites: harmonic, quadrature, partial_sums, series_limits, lerch,
/// hurwitz, oracle, or "all". Reports are ordered by deterministic grid
/// index; the same seed and config reproduce identical reports.
std::vector<check_report> run_suite(const std::string& suite, const run_config& cfg);

const std::vector<std::string>& suite_names();

}  // namespace lerchphi::verify
