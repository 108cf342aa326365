#include "pax/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pax {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<std::string> record_columns(const CsvLayout& layout) {
  std::vector<std::string> cols{"t", "run_id", "phase", "optimal_action", "optimal_param", "action"};
  for (std::size_t d = 1; d <= layout.param_dim; ++d) cols.push_back("theta_" + std::to_string(d));
  for (const char* c : {"engagement", "reward", "beta", "sigma", "r_bar", "r_bbar"}) cols.emplace_back(c);
  for (std::size_t b = 1; b <= layout.num_actions; ++b)
    for (std::size_t d = 1; d <= layout.param_dim; ++d)
      cols.push_back("mean_a" + std::to_string(b) + "_" + std::to_string(d));
  for (const char* prefix : {"q_a", "sigma_a", "var_a"})
    for (std::size_t b = 1; b <= layout.num_actions; ++b) cols.push_back(prefix + std::to_string(b));
  return cols;
}

void write_records_csv(std::ostream& out, std::span<const StepRecord> records, const CsvLayout& layout) {
  const auto header = record_columns(layout);
  write_row(out, header);
  std::vector<std::string> cells;
  cells.reserve(header.size());
  auto per_action = [&](const std::vector<double>& values, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) cells.push_back(i < values.size() ? format_real(values[i]) : "");
  };
  for (const StepRecord& r : records) {
    cells.clear();
    cells.push_back(std::to_string(r.t));
    cells.push_back(std::to_string(r.run_id));
    cells.push_back(std::to_string(r.phase + 1));
    cells.push_back(std::to_string(r.optimal_action + 1));
    cells.push_back(format_real(r.optimal_param));
    cells.push_back(std::to_string(r.action + 1));
    per_action(r.params, layout.param_dim);
    for (double v : {r.engagement, r.reward, r.beta, r.sigma, r.r_bar, r.r_bbar}) cells.push_back(format_real(v));
    per_action(r.param_means, layout.num_actions * layout.param_dim);
    per_action(r.q_values, layout.num_actions);
    per_action(r.action_sigmas, layout.num_actions);
    per_action(r.cov_diag, layout.num_actions);
    write_row(out, cells);
  }
}

void write_records_csv(const std::filesystem::path& path, std::span<const StepRecord> records,
                       const CsvLayout& layout) {
  auto out = open_for_write(path);
  write_records_csv(out, records, layout);
  finish(out, path);
}

void write_aggregate_csv(std::ostream& out, const AggregateSeries& series) {
  out << "t,mean_engagement,std_engagement\n";
  for (std::size_t t = 0; t < series.mean.size(); ++t) {
    out << t << ',' << format_real(series.mean[t]) << ',' << format_real(series.stddev[t]) << '\n';
  }
}

void write_aggregate_csv(const std::filesystem::path& path, const AggregateSeries& series) {
  auto out = open_for_write(path);
  write_aggregate_csv(out, series);
  finish(out, path);
}

void write_comparison_csv(const std::filesystem::path& path, std::span<const LabeledSeries> series) {
  auto out = open_for_write(path);
  std::vector<std::string> header{"t"};
  std::size_t len = 0;
  for (const auto& s : series) {
    header.push_back("mean_" + s.label);
    header.push_back("std_" + s.label);
    len = std::max(len, s.series.mean.size());
  }
  write_row(out, header);
  for (std::size_t t = 0; t < len; ++t) {
    std::vector<std::string> cells{std::to_string(t)};
    for (const auto& s : series) {
      const bool has = t < s.series.mean.size();
      cells.push_back(has ? format_real(s.series.mean[t]) : "");
      cells.push_back(has ? format_real(s.series.stddev[t]) : "");
    }
    write_row(out, cells);
  }
  finish(out, path);
}

void write_status_csv(const std::filesystem::path& path, std::span<const RunLog> runs) {
  auto out = open_for_write(path);
  out << "run_id,seed,status,steps,message\n";
  for (const RunLog& r : runs) {
    std::string msg = r.error;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    out << r.run_id << ',' << r.seed << ',' << (r.ok ? "ok" : "failed") << ',' << r.records.size() << ',' << msg
        << '\n';
  }
  finish(out, path);
}

std::size_t CsvTable::column_index(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("csv: no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

std::vector<double> CsvTable::column(const std::string& name) const {
  const std::size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const std::string& cell = row.at(idx);
    if (cell.empty()) {
      out.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
      throw std::invalid_argument("csv: bad number '" + cell + "' in column " + name);
    out.push_back(v);
  }
  return out;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(l);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!l.empty() && l.back() == ',') cells.emplace_back();
    return cells;
  };
  if (std::getline(in, line)) table.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    cells.resize(table.header.size());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  return read_csv(in);
}

}  // namespace pax
