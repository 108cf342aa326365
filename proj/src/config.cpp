#include "pax/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pax {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument(what + ": expected a number, got '" + text + "'");
  return v;
}

std::uint64_t to_unsigned(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument(what + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

bool to_bool(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw std::invalid_argument(what + ": expected true or false, got '" + text + "'");
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"experiment", {"label", "agent", "total_steps", "num_runs", "base_seed", "output_dir", "emit_plots", "threads"}},
      {"environment",
       {"num_actions", "param_min", "param_max", "eta1", "eta2", "e_max", "e_min", "e_init", "sigma_star", "lambda",
        "schedule", "schedule_mode"}},
      {"learning", {"alpha_q", "alpha_critic", "alpha_actor", "gamma", "param_dim"}},
      {"fixed", {"beta", "sigma"}},
      {"meta", {"tau1", "tau2", "mu", "f_intercept", "f_slope", "f_min", "g_max", "g_slope", "g_mid"}},
      {"kalman", {"process_noise", "obs_noise", "prior_var", "eta", "sigma_max", "sigma_slope", "sigma_midpoint"}},
  };
  return keys;
}

// Visits every key of `section` present in the tree.
class Section {
 public:
  Section(const pt::ptree& root, std::string name) : name_(std::move(name)) {
    if (auto child = root.get_child_optional(name_)) node_ = &*child;
  }

  void number(const char* key, double& out) const {
    if (auto v = raw(key)) out = to_double(*v, where(key));
  }
  void count(const char* key, std::size_t& out) const {
    if (auto v = raw(key)) out = static_cast<std::size_t>(to_unsigned(*v, where(key)));
  }
  void seed(const char* key, std::uint64_t& out) const {
    if (auto v = raw(key)) out = to_unsigned(*v, where(key));
  }
  void flag(const char* key, bool& out) const {
    if (auto v = raw(key)) out = to_bool(*v, where(key));
  }
  void text(const char* key, std::string& out) const {
    if (auto v = raw(key)) out = trim(*v);
  }

  std::string where(const char* key) const { return name_ + "." + key; }

 private:
  boost::optional<std::string> raw(const char* key) const {
    if (node_ == nullptr) return boost::none;
    return node_->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
  }

  std::string name_;
  const pt::ptree* node_ = nullptr;
};

}  // namespace

void ExperimentConfig::validate() const {
  env.validate();
  agent.validate();
  if (total_steps == 0) throw std::invalid_argument("experiment: total_steps must be at least 1");
  if (num_runs == 0) throw std::invalid_argument("experiment: num_runs must be at least 1");
}

std::vector<Phase> parse_schedule(const std::string& text) {
  std::vector<Phase> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const std::string what = "schedule entry '" + item + "'";
    const auto c1 = item.find(':');
    const auto c2 = item.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || item.front() != 'a')
      throw std::invalid_argument(what + ": expected a<action>:<optimum>:<duration>");
    const auto action = to_unsigned(item.substr(1, c1 - 1), what);
    if (action == 0) throw std::invalid_argument(what + ": actions are numbered from 1");
    Phase p;
    p.optimal_action = static_cast<std::size_t>(action - 1);
    p.optimal_param = to_double(item.substr(c1 + 1, c2 - c1 - 1), what);
    p.duration = static_cast<std::size_t>(to_unsigned(item.substr(c2 + 1), what));
    out.push_back(p);
  }
  return out;
}

std::string format_schedule(const std::vector<Phase>& schedule) {
  std::ostringstream os;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (i > 0) os << ", ";
    os << 'a' << schedule[i].optimal_action + 1 << ':' << schedule[i].optimal_param << ':' << schedule[i].duration;
  }
  return os.str();
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  pt::ptree root;
  try {
    pt::read_ini(in, root);
  } catch (const pt::ini_parser_error& e) {
    throw std::runtime_error(source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }

  try {
    for (const auto& [section, body] : root) {
      const auto it = known_keys().find(section);
      if (it == known_keys().end() || !body.data().empty())
        throw std::invalid_argument("unknown section or top-level key '" + section + "'");
      for (const auto& [key, value] : body) {
        if (!it->second.contains(key)) throw std::invalid_argument("unknown key '" + section + "." + key + "'");
      }
    }

    ExperimentConfig cfg;
    const Section exp(root, "experiment");
    std::string agent_kind = to_string(cfg.agent.variant.kind);
    std::string out_dir = cfg.output_dir.string();
    exp.text("label", cfg.label);
    exp.text("agent", agent_kind);
    exp.count("total_steps", cfg.total_steps);
    exp.count("num_runs", cfg.num_runs);
    exp.seed("base_seed", cfg.base_seed);
    exp.text("output_dir", out_dir);
    exp.flag("emit_plots", cfg.emit_plots);
    exp.count("threads", cfg.threads);
    cfg.agent.variant.kind = parse_exploration_kind(agent_kind);
    cfg.output_dir = out_dir;
    if (cfg.label.empty()) cfg.label = agent_kind;

    const Section env(root, "environment");
    env.count("num_actions", cfg.env.num_actions);
    env.number("param_min", cfg.env.param_min);
    env.number("param_max", cfg.env.param_max);
    env.number("eta1", cfg.env.eta1);
    env.number("eta2", cfg.env.eta2);
    env.number("e_max", cfg.env.e_max);
    env.number("e_min", cfg.env.e_min);
    env.number("e_init", cfg.env.e_init);
    env.number("sigma_star", cfg.env.sigma_star);
    env.number("lambda", cfg.env.lambda);
    std::string schedule, mode = "clamp";
    env.text("schedule", schedule);
    env.text("schedule_mode", mode);
    cfg.env.schedule = parse_schedule(schedule);
    if (mode == "clamp") {
      cfg.env.schedule_mode = ScheduleMode::clamp;
    } else if (mode == "cycle") {
      cfg.env.schedule_mode = ScheduleMode::cycle;
    } else {
      throw std::invalid_argument("environment.schedule_mode: expected clamp or cycle, got '" + mode + "'");
    }

    const Section learning(root, "learning");
    double gamma = cfg.agent.q.gamma;
    learning.number("alpha_q", cfg.agent.q.alpha_q);
    learning.number("alpha_critic", cfg.agent.ac.alpha_c);
    learning.number("alpha_actor", cfg.agent.ac.alpha_a);
    learning.number("gamma", gamma);
    learning.count("param_dim", cfg.agent.param_dim);
    cfg.agent.q.gamma = gamma;
    cfg.agent.ac.gamma = gamma;
    cfg.agent.kalman.gamma = gamma;

    const Section fixed(root, "fixed");
    fixed.number("beta", cfg.agent.variant.fixed_beta);
    fixed.number("sigma", cfg.agent.variant.fixed_sigma);

    const Section meta(root, "meta");
    meta.number("tau1", cfg.agent.meta.tau1);
    meta.number("tau2", cfg.agent.meta.tau2);
    meta.number("mu", cfg.agent.meta.mu);
    meta.number("f_intercept", cfg.agent.meta.f_intercept);
    meta.number("f_slope", cfg.agent.meta.f_slope);
    meta.number("f_min", cfg.agent.meta.f_min);
    meta.number("g_max", cfg.agent.meta.g_max);
    meta.number("g_slope", cfg.agent.meta.g_slope);
    meta.number("g_mid", cfg.agent.meta.g_mid);

    const Section kalman(root, "kalman");
    kalman.number("process_noise", cfg.agent.kalman.process_noise);
    kalman.number("obs_noise", cfg.agent.kalman.obs_noise);
    kalman.number("prior_var", cfg.agent.kalman.prior_var);
    kalman.number("eta", cfg.agent.kalman.eta);
    kalman.number("sigma_max", cfg.agent.kalman_sigma.g_max);
    kalman.number("sigma_slope", cfg.agent.kalman_sigma.slope);
    kalman.number("sigma_midpoint", cfg.agent.kalman_sigma.midpoint);

    cfg.validate();
    return cfg;
  } catch (const std::exception& e) {
    throw std::runtime_error(source + ": " + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open config file");
  return parse_config(in, path.string());
}

}  // namespace pax
