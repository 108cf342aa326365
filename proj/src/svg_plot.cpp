#include "pax/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pax {

namespace {

constexpr double kWidth = 960.0;
constexpr double kPanelHeight = 240.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kGap = 50.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round tick spacing covering [lo, hi] with about `target` ticks.
double tick_step(double lo, double hi, int target) {
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  void pad() {
    if (hi - lo < 1e-9) {
      lo -= 1.0;
      hi += 1.0;
    }
  }
};

class PanelWriter {
 public:
  PanelWriter(std::ostringstream& os, double top, Range x, Range y) : os_(os), top_(top), x_(x), y_(y) {}

  double px(double x) const { return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * plot_width(); }
  double py(double y) const { return top_ + kPanelHeight - (y - y_.lo) / (y_.hi - y_.lo) * kPanelHeight; }
  static double plot_width() { return kWidth - kLeft - kRight; }

  void frame(const Panel& panel, const std::string& x_label, bool last) {
    os_ << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(top_) << "\" width=\"" << num(plot_width())
        << "\" height=\"" << num(kPanelHeight) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    os_ << "<text x=\"" << num(kLeft) << "\" y=\"" << num(top_ - 8) << "\" font-size=\"13\">" << escape(panel.title)
        << "</text>\n";
    const double ys = tick_step(y_.lo, y_.hi, 5);
    for (double v = std::ceil(y_.lo / ys) * ys; v <= y_.hi + 1e-9 * ys; v += ys) {
      os_ << "<line x1=\"" << num(kLeft - 4) << "\" y1=\"" << num(py(v)) << "\" x2=\"" << num(kLeft + plot_width())
          << "\" y2=\"" << num(py(v)) << "\" stroke=\"#ddd\"/>\n";
      os_ << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(v) + 4)
          << "\" font-size=\"11\" text-anchor=\"end\">" << num(std::abs(v) < 1e-12 ? 0.0 : v) << "</text>\n";
    }
    const double xs = tick_step(x_.lo, x_.hi, 8);
    for (double v = std::ceil(x_.lo / xs) * xs; v <= x_.hi + 1e-9 * xs; v += xs) {
      os_ << "<line x1=\"" << num(px(v)) << "\" y1=\"" << num(top_ + kPanelHeight) << "\" x2=\"" << num(px(v))
          << "\" y2=\"" << num(top_ + kPanelHeight + 4) << "\" stroke=\"#444\"/>\n";
      os_ << "<text x=\"" << num(px(v)) << "\" y=\"" << num(top_ + kPanelHeight + 16)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << num(v) << "</text>\n";
    }
    os_ << "<text transform=\"translate(" << num(16) << "," << num(top_ + kPanelHeight / 2)
        << ") rotate(-90)\" font-size=\"12\" text-anchor=\"middle\">" << escape(panel.y_label) << "</text>\n";
    if (last) {
      os_ << "<text x=\"" << num(kLeft + plot_width() / 2) << "\" y=\"" << num(top_ + kPanelHeight + 36)
          << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
    }
  }

  void curve(const Curve& c) {
    const std::size_t n = std::min(c.x.size(), c.y.size());
    if (c.band.size() >= n && n > 0) band(c, n);
    if (c.style == CurveStyle::dots) {
      os_ << "<g fill=\"" << escape(c.color) << "\" fill-opacity=\"0.5\">\n";
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(c.y[i])) continue;
        os_ << "<circle cx=\"" << num(px(c.x[i])) << "\" cy=\"" << num(py(clamp_y(c.y[i]))) << "\" r=\"1.5\"/>\n";
      }
      os_ << "</g>\n";
      return;
    }
    std::string d;
    bool pen_down = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(c.y[i])) {
        pen_down = false;
        continue;
      }
      d += pen_down ? " L" : " M";
      d += num(px(c.x[i])) + "," + num(py(clamp_y(c.y[i])));
      pen_down = true;
    }
    if (d.empty()) return;
    os_ << "<path d=\"" << d.substr(1) << "\" fill=\"none\" stroke=\"" << escape(c.color) << "\" stroke-width=\"1.5\"";
    if (c.style == CurveStyle::dashed) os_ << " stroke-dasharray=\"6,4\"";
    os_ << "/>\n";
  }

  void legend(const Panel& panel) {
    double y = top_ + 14;
    for (const Curve& c : panel.curves) {
      if (c.label.empty()) continue;
      const double x = kLeft + plot_width() + 12;
      os_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y - 9) << "\" width=\"14\" height=\"10\" fill=\""
          << escape(c.color) << "\"/>\n";
      os_ << "<text x=\"" << num(x + 20) << "\" y=\"" << num(y) << "\" font-size=\"11\">" << escape(c.label)
          << "</text>\n";
      y += 16;
    }
  }

 private:
  double clamp_y(double v) const { return std::clamp(v, y_.lo, y_.hi); }

  void band(const Curve& c, std::size_t n) {
    std::string upper, lower;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(c.y[i]) || !std::isfinite(c.band[i])) continue;
      upper += (upper.empty() ? "M" : " L") + num(px(c.x[i])) + "," + num(py(clamp_y(c.y[i] + c.band[i])));
    }
    for (std::size_t i = n; i-- > 0;) {
      if (!std::isfinite(c.y[i]) || !std::isfinite(c.band[i])) continue;
      lower += " L" + num(px(c.x[i])) + "," + num(py(clamp_y(c.y[i] - c.band[i])));
    }
    if (upper.empty()) return;
    os_ << "<path d=\"" << upper << lower << " Z\" fill=\"" << escape(c.color)
        << "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
  }

  std::ostringstream& os_;
  double top_;
  Range x_;
  Range y_;
};

}  // namespace

std::string render_svg(std::span<const Panel> panels, const std::string& title, const std::string& x_label) {
  if (panels.empty()) throw std::invalid_argument("plot: no panels");
  Range x;
  bool any = false;
  for (const Panel& p : panels) {
    for (const Curve& c : p.curves) {
      for (double v : c.x) x.add(v);
      any = any || !c.y.empty();
    }
  }
  if (!any || x.empty()) throw std::invalid_argument("plot: no data");
  x.pad();

  const double height = kTop + panels.size() * kPanelHeight + (panels.size() - 1) * kGap + kBottom;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height)
     << "\" font-family=\"sans-serif\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"20\" font-size=\"15\" text-anchor=\"middle\">" << escape(title)
     << "</text>\n";

  double top = kTop;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Panel& p = panels[i];
    Range y;
    for (const Curve& c : p.curves) {
      for (std::size_t k = 0; k < c.y.size(); ++k) {
        const double b = k < c.band.size() && std::isfinite(c.band[k]) ? c.band[k] : 0.0;
        y.add(c.y[k] - b);
        y.add(c.y[k] + b);
      }
    }
    if (y.empty()) y = Range{0.0, 1.0};
    if (p.y_min) y.lo = *p.y_min;
    if (p.y_max) y.hi = *p.y_max;
    y.pad();

    PanelWriter w(os, top, x, y);
    w.frame(p, x_label, i + 1 == panels.size());
    for (const Curve& c : p.curves) w.curve(c);
    w.legend(p);
    top += kPanelHeight + kGap;
  }
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const std::filesystem::path& path, std::span<const Panel> panels, const std::string& title,
               const std::string& x_label) {
  const std::string doc = render_svg(panels, title, x_label);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << doc;
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::string regime_color(ExplorationKind kind) {
  switch (kind) {
    case ExplorationKind::meta: return "#d62728";
    case ExplorationKind::fixed: return "#1f77b4";
    case ExplorationKind::kalman: return "#2ca02c";
  }
  return "#7f7f7f";
}

Curve engagement_curve(const AggregateSeries& series, const std::string& label, const std::string& color) {
  Curve c;
  c.label = label;
  c.color = color;
  c.y = series.mean;
  c.band = series.stddev;
  c.x.resize(series.mean.size());
  for (std::size_t t = 0; t < c.x.size(); ++t) c.x[t] = static_cast<double>(t);
  return c;
}

std::vector<Panel> run_panels(const RunLog& run, const CsvLayout& layout) {
  const auto& recs = run.records;
  std::vector<double> t(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) t[i] = static_cast<double>(recs[i].t);

  Panel engagement{"engagement", "e(t)", {}, 0.0, 10.0};
  Curve e{"", "#222222", CurveStyle::line, t, engagement_trace(run), {}};
  engagement.curves.push_back(std::move(e));

  Panel params{"action parameters", "theta", {}, std::nullopt, std::nullopt};
  std::set<std::size_t> executed;
  for (const auto& r : recs) executed.insert(r.action);
  for (std::size_t a : executed) {
    Curve dots{"a" + std::to_string(a + 1) + " executed", kPalette[a % std::size(kPalette)], CurveStyle::dots, {}, {},
               {}};
    Curve mean{"", kPalette[a % std::size(kPalette)], CurveStyle::line, t, {}, {}};
    mean.y.reserve(recs.size());
    for (const auto& r : recs) {
      if (r.action == a && !r.params.empty()) {
        dots.x.push_back(static_cast<double>(r.t));
        dots.y.push_back(r.params.front());
      }
      const std::size_t idx = a * layout.param_dim;
      mean.y.push_back(idx < r.param_means.size() ? r.param_means[idx] : std::numeric_limits<double>::quiet_NaN());
    }
    params.curves.push_back(std::move(dots));
    params.curves.push_back(std::move(mean));
  }
  Curve optimum{"optimum", "#000000", CurveStyle::dashed, t, {}, {}};
  for (const auto& r : recs) optimum.y.push_back(r.optimal_param);
  params.curves.push_back(std::move(optimum));

  Panel explore{"exploration", "beta / sigma", {}, 0.0, std::nullopt};
  Curve beta{"beta", "#9467bd", CurveStyle::line, t, {}, {}};
  Curve sigma{"sigma (executed)", "#ff7f0e", CurveStyle::line, t, {}, {}};
  for (const auto& r : recs) {
    beta.y.push_back(r.beta);
    sigma.y.push_back(r.sigma);
  }
  explore.curves.push_back(std::move(beta));
  explore.curves.push_back(std::move(sigma));

  return {engagement, params, explore};
}

}  // namespace pax
