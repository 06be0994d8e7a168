#include "tadda/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace tadda {

namespace {

// Renders rows of cells as a pipe table with padded columns.
void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  const auto emit = [&](const std::vector<std::string>& row) {
    out << '|';
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << ' ' << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
    }
    out << '\n';
  };
  emit(rows.front());
  out << '|';
  for (std::size_t w : width) out << std::string(w + 2, '-') << '|';
  out << '\n';
  for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
}

bool matches_published_setup(const EvaluationTable& table) {
  if (!std::equal(table.lead_times.begin(), table.lead_times.end(), ExternalReference::lead_times.begin(),
                  ExternalReference::lead_times.end())) {
    return false;
  }
  const auto has = [&](const ScoreSpec& s) {
    return std::find(table.scores.begin(), table.scores.end(), s) != table.scores.end();
  };
  return has(ScoreSpec::se()) || has(ScoreSpec::tadda1_l1(0.048));
}

}  // namespace

std::string format_full(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s(buf);
  // No "-0.000".
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void write_evaluation_csv(std::ostream& out, const EvaluationTable& table) {
  out << "functional,score";
  for (int s : table.lead_times) out << ",lead_" << s;
  out << ",grand_mean\n";
  for (Functional f : table.functionals) {
    for (const auto& spec : table.scores) {
      out << to_string(f) << ",\"" << spec.to_string() << '"';
      for (int s : table.lead_times) out << ',' << format_full(table.cell(f, spec, s));
      out << ',' << format_full(table.grand_mean(f, spec)) << '\n';
    }
  }
}

void write_evaluation_markdown(std::ostream& out, const EvaluationTable& table, bool include_reference) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"functional", "score"};
  for (int s : table.lead_times) header.push_back("s=" + std::to_string(s));
  header.push_back("mean");
  rows.push_back(header);
  for (Functional f : table.functionals) {
    for (const auto& spec : table.scores) {
      std::vector<std::string> row = {std::string(to_string(f)), spec.to_string()};
      for (int s : table.lead_times) row.push_back(format_fixed(table.cell(f, spec, s), 3));
      row.push_back(format_fixed(table.grand_mean(f, spec), 3));
      rows.push_back(std::move(row));
    }
  }
  const bool reference = include_reference && matches_published_setup(table);
  if (reference) {
    const auto add = [&](const char* score_label, const auto& values, double mean) {
      std::vector<std::string> row = {"views_ensemble*", score_label};
      for (double v : values) row.push_back(format_fixed(v, 3));
      row.push_back(format_fixed(mean, 3));
      rows.push_back(std::move(row));
    };
    add("se", ExternalReference::views_mse, ExternalReference::views_mse_mean);
    add("tadda1_l1(eps=0.048)", ExternalReference::views_tadda, ExternalReference::views_tadda_mean);
  }
  write_aligned(out, rows);
  out << "\nwindow w=" << table.window << ", countries=" << table.countries << '\n';
  if (reference) out << "* external reference values, not computed by this tool\n";
}

void write_quantile_summary_csv(std::ostream& out, const QuantileSummary& summary) {
  out << "series";
  for (double p : summary.probs) out << ",q" << format_full(p);
  out << '\n';
  const auto row = [&](const char* name, const std::vector<double>& values) {
    out << name;
    for (double v : values) out << ',' << format_full(v);
    out << '\n';
  };
  row("mean", summary.mean_forecasts);
  row("opf_tadda1_l1", summary.opf_tadda_forecasts);
  row("true_log_change", summary.true_log_changes);
}

void write_quantile_summary_markdown(std::ostream& out, const QuantileSummary& summary) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"series"};
  for (double p : summary.probs) header.push_back(format_fixed(100.0 * p, 0) + "%");
  rows.push_back(header);
  const auto add = [&](const char* name, const std::vector<double>& values) {
    std::vector<std::string> row = {name};
    for (double v : values) row.push_back(format_fixed(v, 3));
    rows.push_back(std::move(row));
  };
  add("mean", summary.mean_forecasts);
  add("opf_tadda1_l1", summary.opf_tadda_forecasts);
  add("true_log_change", summary.true_log_changes);
  write_aligned(out, rows);
}

void write_zero_shares_csv(std::ostream& out, const ZeroShares& shares) {
  out << "series,zero_share\n";
  out << "true_log_change," << format_full(shares.true_log_changes) << '\n';
  out << "opf_tadda1_l1," << format_full(shares.opf_tadda) << '\n';
  out << "mean," << format_full(shares.mean) << '\n';
}

void write_calibration_csv(std::ostream& out, const CalibrationResult& result, const ScoreSpec& objective) {
  out << "window,\"" << objective.to_string() << "\",selected\n";
  for (const auto& [w, value] : result.objective_by_window) {
    out << w << ',' << format_full(value) << ',' << (w == result.best_window ? 1 : 0) << '\n';
  }
}

void write_simulation_functionals_csv(std::ostream& out, const SimulationReport& report) {
  out << "score,functional,value,case\n";
  out << "ae,median," << format_full(report.median) << ",median\n";
  out << "se,mean," << format_full(report.mean) << ",mean\n";
  out << "\"" << ScoreSpec::tadda1_l1(report.eps).to_string() << "\",opf," << format_full(report.opf.value) << ','
      << to_string(report.opf.case_label) << '\n';
}

void write_simulation_scores_csv(std::ostream& out, const SimulationReport& report) {
  out << "functional";
  for (const char* c : kSimulationColumns) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < kSimulationRows.size(); ++r) {
    out << kSimulationRows[r];
    for (double v : report.expected[r]) out << ',' << format_full(v);
    out << '\n';
  }
}

void write_simulation_markdown(std::ostream& out, const SimulationReport& report) {
  out << "skew normal xi=" << format_full(report.params.xi) << " omega=" << format_full(report.params.omega)
      << " alpha=" << format_full(report.params.alpha) << ", eps=" << format_full(report.eps)
      << ", Pr(Y < -eps)=" << format_fixed(report.tails.below, 3)
      << ", Pr(Y > eps)=" << format_fixed(report.tails.above, 3) << "\n\n";
  write_aligned(out, {{"", "ae", "se", "tadda"},
                      {"functional", "median", "mean", std::string(to_string(report.opf.case_label))},
                      {"value", format_fixed(report.median, 3), format_fixed(report.mean, 3),
                       format_fixed(report.opf.value, 3)}});
  out << '\n';

  // Bold the column minimum.
  std::vector<std::vector<std::string>> rows = {{"functional", "ae", "se", "tadda"}};
  for (std::size_t r = 0; r < kSimulationRows.size(); ++r) {
    std::vector<std::string> row = {kSimulationRows[r]};
    for (std::size_t c = 0; c < kSimulationColumns.size(); ++c) {
      bool best = true;
      for (std::size_t k = 0; k < kSimulationRows.size(); ++k) {
        if (report.expected[k][c] < report.expected[r][c]) best = false;
      }
      const auto cell = format_fixed(report.expected[r][c], 3);
      row.push_back(best ? "**" + cell + "**" : cell);
    }
    rows.push_back(std::move(row));
  }
  write_aligned(out, rows);
  out << "\n" << report.mc_samples << " Monte Carlo draws, seed " << report.seed << '\n';
}

}  // namespace tadda
