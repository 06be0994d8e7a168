#pragma once

#include <filesystem>
#include <iosfwd>

#include "tadda/evaluation.hpp"

namespace tadda {

// Country-month panel CSV:
//
//   country_id,month_id,fatalities
//   MLI,445,12
//   ...
//
// One row per country-month, fatalities a non-negative integer, every country
// covering the same contiguous block of month ids. Rows may come in any order.
// All violations throw DataError naming the offending line or (country, month).
Panel read_panel(std::istream& in);
Panel read_panel(const std::filesystem::path& path);

void write_panel(std::ostream& out, const Panel& panel);

}  // namespace tadda
