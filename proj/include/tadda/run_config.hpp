#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "tadda/distributions.hpp"
#include "tadda/evaluation.hpp"

namespace tadda {

// File-based run configuration (JSON). Every key is optional; unknown keys
// are rejected. Months are integer ids or "YYYY-MM" strings.
//
//   {
//     "panel": "data/country_month.csv",
//     "out_dir": "out",
//     "seed": 1,
//     "mc_samples": 10000000,
//     "calibration_period": ["2014-01", "2016-12"],
//     "test_period": ["2017-01", "2019-12"],
//     "lead_times": [2, 3, 4, 5, 6, 7],
//     "window": 9,                      // or "calibrate"
//     "candidate_windows": [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
//     "epsilon": 0.048,
//     "scores": ["se", "tadda1_l1(eps=0.048)"],
//     "functionals": ["mean", "opf_tadda1_l1", "no_change"],
//     "quantile_probs": [0.05, 0.1, 0.9, 0.95],
//     "skew_normal": {"xi": -0.15, "omega": 0.4, "alpha": 8}
//   }
struct RunConfig {
  std::optional<std::filesystem::path> panel;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 1;
  std::size_t mc_samples = 10'000'000;
  EvaluationConfig evaluation;
  std::vector<int> candidate_windows{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::vector<double> quantile_probs{0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50,
                                     0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
  SkewNormalParams skew_normal{-0.15, 0.4, 8.0};
};

// Throws std::invalid_argument on malformed JSON, unknown keys, wrong types
// or values that fail validation.
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path& path);

// Accepts an integer id ("445") or a calendar month ("2017-01").
int parse_month(std::string_view text);

}  // namespace tadda
