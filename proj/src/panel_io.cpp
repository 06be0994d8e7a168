#include "tadda/panel_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tadda/errors.hpp"

namespace tadda {

namespace {

constexpr std::string_view kHeader = "country_id,month_id,fatalities";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

template <typename Int>
bool parse_int(std::string_view text, Int& value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw DataError("panel line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Panel read_panel(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw DataError("panel file is empty");
  ++line_no;
  std::string_view header = line;
  if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
  if (trim(header) != kHeader) {
    throw DataError("panel header must be '" + std::string(kHeader) + "', got '" + std::string(trim(header)) + "'");
  }

  std::map<std::string, std::map<int, std::int64_t>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 3) fail_line(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) fail_line(line_no, "empty country_id");
    int month = 0;
    if (!parse_int(fields[1], month)) fail_line(line_no, "month_id '" + std::string(fields[1]) + "' is not an integer");
    std::int64_t count = 0;
    if (!parse_int(fields[2], count) || count < 0) {
      fail_line(line_no, "fatalities '" + std::string(fields[2]) + "' is not a non-negative integer");
    }
    auto& months = rows[std::string(fields[0])];
    if (!months.emplace(month, count).second) {
      fail_line(line_no, "duplicate row for (" + std::string(fields[0]) + ", " + std::to_string(month) + ")");
    }
  }
  if (rows.empty()) throw DataError("panel contains no rows");

  int first = std::numeric_limits<int>::max();
  int last = std::numeric_limits<int>::min();
  for (const auto& [country, months] : rows) {
    first = std::min(first, months.begin()->first);
    last = std::max(last, months.rbegin()->first);
  }

  std::vector<std::string> gaps;
  std::size_t total = 0;
  for (const auto& [country, months] : rows) {
    for (int m = first; m <= last; ++m) {
      if (months.count(m)) continue;
      if (gaps.size() < 25) gaps.push_back("(" + country + ", " + std::to_string(m) + ")");
      ++total;
    }
  }
  if (total > 0) {
    std::ostringstream msg;
    msg << "panel has " << total << " missing country-month(s) in months " << first << ".." << last << ":";
    for (const auto& g : gaps) msg << ' ' << g;
    if (total > gaps.size()) msg << " ... and " << total - gaps.size() << " more";
    throw DataError(msg.str());
  }

  Panel panel;
  for (auto& [country, months] : rows) {
    FatalitySeries series{country, first, {}};
    series.fatalities.reserve(months.size());
    for (const auto& [m, count] : months) series.fatalities.push_back(count);
    panel.push_back(std::move(series));
  }
  return panel;
}

Panel read_panel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open panel file " + path.string());
  return read_panel(in);
}

void write_panel(std::ostream& out, const Panel& panel) {
  out << kHeader << '\n';
  for (const auto& series : panel) {
    for (std::size_t i = 0; i < series.fatalities.size(); ++i) {
      out << series.country_id << ',' << series.first_month + static_cast<int>(i) << ',' << series.fatalities[i]
          << '\n';
    }
  }
}

}  // namespace tadda
