// Command-line front end: run one experiment or compare several.
//
//   pax run --config fig1d.ini [--seed N] [--runs N] [--steps N]
//           [--agent fixed|meta|kalman] [--out DIR] [--plots]
//   pax compare --configs a.ini,b.ini,c.ini --out DIR

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pax/config.hpp"
#include "pax/csv.hpp"
#include "pax/experiment.hpp"
#include "pax/kernels/kernels.hpp"
#include "pax/svg_plot.hpp"

namespace fs = std::filesystem;

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> steps;
  std::optional<std::string> agent;
  std::optional<std::string> out;
  bool plots = false;
};

pax::ExperimentConfig load_with_overrides(const fs::path& path, const Overrides& o) {
  pax::ExperimentConfig cfg = pax::load_config(path);
  if (o.seed) cfg.base_seed = *o.seed;
  if (o.runs) cfg.num_runs = *o.runs;
  if (o.steps) cfg.total_steps = *o.steps;
  if (o.agent) cfg.agent.variant.kind = pax::parse_exploration_kind(*o.agent);
  if (o.out) cfg.output_dir = *o.out;
  if (o.plots) cfg.emit_plots = true;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return cfg;
}

std::vector<pax::RunLog> completed(const std::vector<pax::RunLog>& runs) {
  std::vector<pax::RunLog> ok;
  for (const auto& r : runs) {
    if (r.ok) ok.push_back(r);
  }
  return ok;
}

// First failure as a one-line diagnostic, or empty.
std::string failure_summary(const std::vector<pax::RunLog>& runs, const std::string& label) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& r : runs) {
    if (!r.ok) {
      if (failed++ == 0) first = "run " + std::to_string(r.run_id) + ": " + r.error;
    }
  }
  if (failed == 0) return {};
  return label + ": " + std::to_string(failed) + " of " + std::to_string(runs.size()) + " runs failed (" + first + ")";
}

int cmd_run(const fs::path& config_path, const Overrides& o) {
  const pax::ExperimentConfig cfg = load_with_overrides(config_path, o);
  const auto runs = pax::run_experiment(cfg);

  fs::create_directories(cfg.output_dir);
  const pax::CsvLayout layout{cfg.env.num_actions, cfg.agent.param_dim};
  for (const auto& r : runs) {
    pax::write_records_csv(cfg.output_dir / ("run_" + std::to_string(r.run_id) + ".csv"), r.records, layout);
  }
  pax::write_status_csv(cfg.output_dir / "status.csv", runs);

  const auto ok = completed(runs);
  if (!ok.empty()) {
    const pax::AggregateSeries series = pax::aggregate(ok);
    pax::write_aggregate_csv(cfg.output_dir / "aggregate.csv", series);
    if (cfg.emit_plots) {
      const std::vector<pax::Panel> panels{pax::Panel{
          "mean engagement over " + std::to_string(series.num_runs) + " runs (shaded: +/-1 std)",
          "engagement",
          {pax::engagement_curve(series, cfg.label, pax::regime_color(cfg.agent.variant.kind))},
          0.0,
          10.0}};
      pax::emit_plot(cfg.output_dir / "engagement.svg", panels, cfg.label);
      for (const auto& r : ok) {
        const auto detail = pax::run_panels(r, layout);
        pax::emit_plot(cfg.output_dir / ("run_" + std::to_string(r.run_id) + ".svg"), detail,
                       cfg.label + ", run " + std::to_string(r.run_id) + " (seed " + std::to_string(r.seed) + ")");
      }
    }
  }

  const std::string failure = failure_summary(runs, cfg.label);
  if (!failure.empty()) {
    std::cerr << "pax: " << failure << '\n';
    return 2;
  }
  std::cout << cfg.label << ": " << runs.size() << " run(s) x " << cfg.total_steps << " steps -> "
            << cfg.output_dir.string() << '\n';
  return 0;
}

int cmd_compare(const std::vector<std::string>& configs, const fs::path& out_dir, const Overrides& o) {
  std::vector<pax::LabeledSeries> all;
  std::vector<pax::Curve> curves;
  std::string failures;
  for (const auto& path : configs) {
    const pax::ExperimentConfig cfg = load_with_overrides(path, o);
    const auto runs = pax::run_experiment(cfg);
    const std::string failure = failure_summary(runs, cfg.label);
    if (!failure.empty() && failures.empty()) failures = failure;
    const auto ok = completed(runs);
    if (ok.empty()) continue;
    pax::LabeledSeries s{cfg.label, pax::aggregate(ok)};
    curves.push_back(pax::engagement_curve(s.series, cfg.label, pax::regime_color(cfg.agent.variant.kind)));
    all.push_back(std::move(s));
  }

  fs::create_directories(out_dir);
  pax::write_comparison_csv(out_dir / "compare.csv", all);
  if (!curves.empty()) {
    const std::vector<pax::Panel> panels{pax::Panel{"mean engagement (shaded: +/-1 std)", "engagement", curves, 0.0, 10.0}};
    pax::emit_plot(out_dir / "engagement.svg", panels, "engagement by exploration regime");
  }
  if (!failures.empty()) {
    std::cerr << "pax: " << failures << '\n';
    return 2;
  }
  std::cout << "compared " << all.size() << " configuration(s) -> " << out_dir.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized-action RL with active exploration on the engagement task"};
  app.require_subcommand(1);

  Overrides o;
  auto add_overrides = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Base seed (run i uses seed + i)");
    sub->add_option("--runs", o.runs, "Number of runs")->check(CLI::PositiveNumber);
    sub->add_option("--steps", o.steps, "Timesteps per run")->check(CLI::PositiveNumber);
  };

  std::string config;
  auto* run = app.add_subcommand("run", "Run one experiment configuration");
  run->add_option("--config", config, "Experiment INI file")->required()->check(CLI::ExistingFile);
  add_overrides(run);
  run->add_option("--agent", o.agent, "Exploration regime")->check(CLI::IsMember({"fixed", "meta", "kalman"}));
  run->add_option("--out", o.out, "Output directory");
  run->add_flag("--plots", o.plots, "Write SVG plots");

  std::vector<std::string> configs;
  std::string compare_out;
  auto* compare = app.add_subcommand("compare", "Run several configurations and plot their mean engagement");
  compare->add_option("--configs", configs, "Comma-separated experiment INI files")
      ->required()
      ->delimiter(',')
      ->check(CLI::ExistingFile);
  compare->add_option("--out", compare_out, "Output directory")->required();
  add_overrides(compare);

  auto* isa = app.add_subcommand("isa", "Print the SIMD kernel variant in use");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config, o);
    if (*compare) return cmd_compare(configs, compare_out, o);
    if (*isa) {
      std::cout << pax::kernels::isa_name(pax::kernels::active().isa) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "pax: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
