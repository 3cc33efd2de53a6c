#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slicepl/verify.hpp"

namespace slicepl {

// Effective settings of one CLI run.
struct RunConfig {
    VerifyConfig verify;
    GrowthConfig growth;
    std::optional<std::string> csv_path;
};

// Environment variable naming a default JSON config file.
inline constexpr const char* kConfigEnv = "SLICEPL_CONFIG";

// Applies the keys of a JSON config object to cfg. Keys: conclusion_tol,
// premise_tol, algebra_tol, n_theta, n_axis, r_min, r_max, n_r, offset,
// growth_r_min, growth_r_max, growth_n_r, max_witnesses, order_margin,
// type_tol, seed, workers, csv. Unknown keys are an InputError.
void apply_config_json(const std::string& text, RunConfig& cfg);

// Entry point of the slicepl executable. Exit codes: 0 pass (or success for
// eval/order/type), 1 conclusion violated, 2 a premise checked-fail, 3 input,
// parse or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicepl
