#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rds/engine.hpp"

namespace rds {

// All CSV output: header row, UTF-8, '.' decimal separator.

// One row per scenario: annual totals followed by the monthly breakdown.
void write_loads_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> read_loads_csv(std::istream& in);  // for `compare`

void write_comparison_csv(const std::vector<ComparisonRow>& rows,
                          std::ostream& out);

void write_trace_csv(const std::vector<HourTrace>& trace, std::ostream& out);

void write_window_gains_csv(const std::vector<WindowHeatGainBreakdown>& gains,
                            std::ostream& out);

// Optics inspection table over a slat/profile angle grid.
void write_blind_table_csv(const SlatGeometry& geometry, std::ostream& out);

}  // namespace rds
