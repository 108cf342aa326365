#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pax/agent.hpp"
#include "pax/csv.hpp"
#include "pax/experiment.hpp"

namespace pax {

enum class CurveStyle { line, dashed, dots };

struct Curve {
  std::string label;  // empty: not shown in the legend
  std::string color = "#1f77b4";
  CurveStyle style = CurveStyle::line;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> band;  // optional +/- half-width around y, drawn shaded
};

struct Panel {
  std::string title;
  std::string y_label;
  std::vector<Curve> curves;
  std::optional<double> y_min;
  std::optional<double> y_max;
};

// Stacked panels sharing the x axis, as a standalone SVG document. Output
// is a pure function of the input: no timestamps or external references.
// NaN y values break a line. Throws std::invalid_argument when there is
// nothing to draw.
std::string render_svg(std::span<const Panel> panels, const std::string& title, const std::string& x_label = "timestep");
void emit_plot(const std::filesystem::path& path, std::span<const Panel> panels, const std::string& title,
               const std::string& x_label = "timestep");

// Conventional colour for an exploration regime: meta red, fixed blue,
// Kalman green.
std::string regime_color(ExplorationKind kind);

// Mean engagement line with a shaded +/-1 std band.
Curve engagement_curve(const AggregateSeries& series, const std::string& label, const std::string& color);

// Per-run view: engagement; executed parameters (dots) with learned means
// of every executed action and the hidden optimum (dashed); exploration
// parameters.
std::vector<Panel> run_panels(const RunLog& run, const CsvLayout& layout);

}  // namespace pax
