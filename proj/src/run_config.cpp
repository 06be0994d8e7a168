#include "tadda/run_config.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace tadda {

namespace {

using nlohmann::json;

int month_from_json(const json& value, const char* key) {
  if (value.is_number_integer()) return value.get<int>();
  if (value.is_string()) return parse_month(value.get<std::string>());
  throw std::invalid_argument(std::string(key) + ": months must be integer ids or \"YYYY-MM\" strings");
}

MonthRange range_from_json(const json& value, const char* key) {
  if (!value.is_array() || value.size() != 2) {
    throw std::invalid_argument(std::string(key) + " must be a two-element array [start, end]");
  }
  return {month_from_json(value[0], key), month_from_json(value[1], key)};
}

template <typename T>
T get_as(const json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(key) + ": " + e.what());
  }
}

}  // namespace

int parse_month(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    int id = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw std::invalid_argument("bad month '" + std::string(text) + "'");
    }
    return id;
  }
  int year = 0;
  int month = 0;
  const auto y = text.substr(0, dash);
  const auto m = text.substr(dash + 1);
  auto [py, ey] = std::from_chars(y.data(), y.data() + y.size(), year);
  auto [pm, em] = std::from_chars(m.data(), m.data() + m.size(), month);
  if (ey != std::errc() || em != std::errc() || py != y.data() + y.size() || pm != m.data() + m.size() ||
      month < 1 || month > 12) {
    throw std::invalid_argument("bad month '" + std::string(text) + "', expected YYYY-MM");
  }
  return month_id(year, month);
}

RunConfig parse_run_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  RunConfig config;
  auto& eval = config.evaluation;
  std::optional<std::vector<std::string>> score_names;
  for (const auto& [key, value] : doc.items()) {
    if (key == "panel") {
      config.panel = get_as<std::string>(value, "panel");
    } else if (key == "out_dir") {
      config.out_dir = get_as<std::string>(value, "out_dir");
    } else if (key == "seed") {
      config.seed = get_as<std::uint64_t>(value, "seed");
    } else if (key == "mc_samples") {
      config.mc_samples = get_as<std::size_t>(value, "mc_samples");
    } else if (key == "calibration_period") {
      eval.calibration_period = range_from_json(value, "calibration_period");
    } else if (key == "test_period") {
      eval.test_period = range_from_json(value, "test_period");
    } else if (key == "lead_times") {
      eval.lead_times = get_as<std::vector<int>>(value, "lead_times");
    } else if (key == "window") {
      if (value.is_string() && value.get<std::string>() == "calibrate") {
        eval.window.reset();
      } else {
        eval.window = get_as<int>(value, "window");
      }
    } else if (key == "candidate_windows") {
      config.candidate_windows = get_as<std::vector<int>>(value, "candidate_windows");
    } else if (key == "epsilon") {
      eval.epsilon = get_as<double>(value, "epsilon");
    } else if (key == "scores") {
      score_names = get_as<std::vector<std::string>>(value, "scores");
    } else if (key == "functionals") {
      eval.functionals.clear();
      for (const auto& f : get_as<std::vector<std::string>>(value, "functionals")) {
        eval.functionals.push_back(parse_functional(f));
      }
    } else if (key == "quantile_probs") {
      config.quantile_probs = get_as<std::vector<double>>(value, "quantile_probs");
    } else if (key == "skew_normal") {
      if (!value.is_object()) throw std::invalid_argument("skew_normal must be an object");
      for (const auto& [k, v] : value.items()) {
        if (k == "xi") {
          config.skew_normal.xi = get_as<double>(v, "skew_normal.xi");
        } else if (k == "omega") {
          config.skew_normal.omega = get_as<double>(v, "skew_normal.omega");
        } else if (k == "alpha") {
          config.skew_normal.alpha = get_as<double>(v, "skew_normal.alpha");
        } else {
          throw std::invalid_argument("unknown config key 'skew_normal." + k + "'");
        }
      }
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }

  // Bare TADDA names pick up the configured epsilon.
  if (score_names) {
    eval.scores.clear();
    for (const auto& s : *score_names) eval.scores.push_back(parse_score_spec(s, eval.epsilon));
  } else if (eval.epsilon > 0.0) {
    eval.scores = {ScoreSpec::se(), ScoreSpec::tadda1_l1(eval.epsilon)};
  }

  validate(eval);
  validate(config.skew_normal);
  if (config.mc_samples == 0) throw std::invalid_argument("mc_samples must be positive");
  for (int w : config.candidate_windows) {
    if (w < 1) throw std::invalid_argument("candidate windows must be at least 1");
  }
  for (double p : config.quantile_probs) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("quantile_probs must lie in (0, 1]");
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

}  // namespace tadda
