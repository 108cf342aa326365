#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pax/agent.hpp"
#include "pax/experiment.hpp"

namespace pax {

// Shape of the per-action columns in a run log.
struct CsvLayout {
  std::size_t num_actions = 6;
  std::size_t param_dim = 1;
};

// Run-log columns, in order:
//   t run_id phase optimal_action optimal_param action theta_<d>...
//   engagement reward beta sigma r_bar r_bbar
//   mean_a<b>_<d>... q_a<b>... sigma_a<b>... var_a<b>...
// Actions, phases and parameter dimensions are numbered from 1. Cells that
// do not apply to the agent variant are left empty. Reals are written with
// 17 significant digits; lines end in LF.
std::vector<std::string> record_columns(const CsvLayout& layout);
void write_records_csv(std::ostream& out, std::span<const StepRecord> records, const CsvLayout& layout);
void write_records_csv(const std::filesystem::path& path, std::span<const StepRecord> records,
                       const CsvLayout& layout);

// Columns: t mean_engagement std_engagement
void write_aggregate_csv(std::ostream& out, const AggregateSeries& series);
void write_aggregate_csv(const std::filesystem::path& path, const AggregateSeries& series);

struct LabeledSeries {
  std::string label;
  AggregateSeries series;
};

// Columns: t, then mean_<label> std_<label> per series.
void write_comparison_csv(const std::filesystem::path& path, std::span<const LabeledSeries> series);

// Columns: run_id seed status steps message
void write_status_csv(const std::filesystem::path& path, std::span<const RunLog> runs);

// Round-trip formatting of one real (17 significant digits, empty for NaN).
std::string format_real(double v);

// Minimal reader for the files above: header plus string cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;  // empty cells read as NaN
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace pax
