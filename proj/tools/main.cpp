#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cising/dynamics.hpp"
#include "cising/landscape.hpp"
#include "cising/lumped.hpp"
#include "cising/oracle.hpp"

namespace {

using nlohmann::json;
using namespace cising;

enum ExitCode {
  kOk = 0,
  kInvalidConfig = 2,
  kCapacity = 3,
  kCheckFailure = 4,
  kCensoredOnly = 5,
};

struct CommonOpts {
  int n = 4;
  int k = 2;
  std::string epsilon = "0";
  std::string h = "0";
  std::string beta = "1";
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_dir = ".";
  std::string format = "table";
};

Params make_params(const CommonOpts& opts) {
  Params p;
  p.n = opts.n;
  p.k = opts.k;
  p.epsilon = Rational::parse(opts.epsilon);
  p.h = Rational::parse(opts.h);
  p.beta = std::stod(opts.beta);
  p.validate();
  return p;
}

std::vector<double> parse_beta_list(const std::string& text) {
  std::vector<double> betas;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) betas.push_back(std::stod(tok));
  }
  if (betas.empty()) throw std::invalid_argument("empty beta list");
  for (double b : betas) {
    if (!(b > 0)) throw std::invalid_argument("beta must be positive");
  }
  return betas;
}

ClassState parse_class_or_named(const std::string& text, int n) {
  if (auto named = parse_named_state(text)) return named_class(*named, n);
  ClassState c;
  if (std::sscanf(text.c_str(), "%d,%d,%d", &c.p1, &c.p2, &c.a) == 3) {
    require_class_valid(c, n);
    return c;
  }
  throw std::invalid_argument("cannot parse state '" + text +
                              "': use +1, -1, +-1, -+1 or p1,p2,a");
}

json config_json(const Params& p) {
  return {{"n", p.n}, {"k", p.k}, {"epsilon", p.epsilon.str()}, {"h", p.h.str()}};
}

void write_json(const std::string& out_dir, const std::string& name, const json& doc) {
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << "\n";
  std::cerr << "wrote " << path.string() << "\n";
}

void write_trajectory_csv(const std::string& out_dir, const std::string& name,
                          const Trajectory& traj) {
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream out(path);
  out << "step,p1,p2,a,energy\n";
  for (const TrajectoryPoint& pt : traj.points) {
    out << pt.step << "," << pt.cls.p1 << "," << pt.cls.p2 << "," << pt.cls.a << ","
        << pt.energy << "\n";
  }
  std::cerr << "wrote " << path.string() << "\n";
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const CommonOpts& opts) {
  Params params = make_params(opts);
  params.require_two_clusters();
  const LandscapeReport report = analyze(params);
  if (opts.format == "table" || opts.format == "both") report.render(std::cout);
  json doc = report.to_json();
  if (opts.format == "json") std::cout << doc.dump(2) << "\n";
  write_json(opts.out_dir, "analyze.json", doc);
  return kOk;
}

// --------------------------------------------------------------- simulate --

struct SimulateOpts {
  std::string from = "-1";
  std::vector<std::string> to = {"+1"};
  int trials = 1;
  long long max_steps = 100000000;
  bool lumped = false;
  int traj_count = 0;
  double delta = -1.0;  // window half-width on Gamma, <0: no window
};

int cmd_simulate(const CommonOpts& common, const SimulateOpts& opts) {
  Params params = make_params(common);
  params.require_two_clusters();
  const double beta = params.beta;
  const ClassState start = parse_class_or_named(opts.from, params.n);
  std::vector<ClassState> targets;
  for (const std::string& t : opts.to) targets.push_back(parse_class_or_named(t, params.n));

  const LumpedChain chain = build_lumped_chain(params.n, params, beta);

  std::optional<std::pair<double, double>> window;
  json window_json;
  if (opts.delta >= 0.0) {
    const GammaInfo gammas = gamma_values(params);
    const StateSets sets = identify_states(params);
    auto is_member = [&](const std::vector<NamedState>& states) {
      for (NamedState s : states) {
        if (named_class(s, params.n) == start) return true;
      }
      return false;
    };
    std::optional<Rational> gamma;
    if (gammas.gamma_s && is_member(sets.stable)) {
      gamma = gammas.gamma_s;
    } else if (gammas.gamma_m && is_member(sets.metastable)) {
      gamma = gammas.gamma_m;
    }
    if (gamma) {
      const double g = gamma->to_double();
      window = {std::exp(beta * (g - opts.delta)), std::exp(beta * (g + opts.delta))};
      window_json = {{"gamma", g},
                     {"delta", opts.delta},
                     {"low", window->first},
                     {"high", window->second}};
    } else {
      window_json = {{"note", "no closed-form barrier for this start in this regime"}};
    }
  }

  HittingStats stats =
      sample_hitting_times(chain, start, targets, opts.trials, common.seed, opts.max_steps,
                           window, common.threads, /*full_space=*/!opts.lumped);

  HittingMoments exact;
  bool have_exact = true;
  try {
    exact = exact_hitting_moments(chain, start, targets,
                                  /*precise=*/beta > 3.0 && chain.num_classes() <= 400);
  } catch (const std::exception&) {
    have_exact = false;
  }

  json doc;
  doc["schema_version"] = 1;
  doc["config"] = config_json(params);
  doc["config"]["beta"] = beta;
  doc["config"]["seed"] = common.seed;
  doc["config"]["trials"] = opts.trials;
  doc["config"]["max_steps"] = opts.max_steps;
  doc["config"]["mode"] = opts.lumped ? "lumped" : "full";
  doc["from"] = start.str();
  json tj = json::array();
  for (const ClassState& t : targets) tj.push_back(t.str());
  doc["to"] = tj;
  doc["trials"] = stats.trials;
  doc["censored"] = stats.censored;
  doc["mean"] = stats.mean;
  doc["variance"] = stats.variance;
  doc["second_moment"] = stats.second_moment;
  doc["std_error"] = stats.std_error;
  doc["log_mean_over_beta"] = stats.log_mean_over_beta;
  if (stats.window_fraction) doc["window_fraction"] = *stats.window_fraction;
  if (!window_json.is_null()) doc["window"] = window_json;
  if (have_exact) {
    doc["exact"] = {{"mean", exact.mean},
                    {"second_moment", exact.second_moment},
                    {"log_mean_over_beta", exact.log_mean / beta},
                    {"residual", exact.residual}};
  }
  write_json(common.out_dir, "simulate.json", doc);

  for (int i = 0; i < std::min(opts.traj_count, opts.trials); ++i) {
    Trajectory traj;
    if (opts.lumped) {
      traj = simulate_lumped(chain, start, targets, common.seed + i, opts.max_steps);
    } else {
      traj = simulate(params, beta, representative(start, params.n), targets, common.seed + i,
                      opts.max_steps);
    }
    write_trajectory_csv(common.out_dir, "trajectory_" + std::to_string(i) + ".csv", traj);
  }

  std::cout << "tau: trials=" << stats.trials << " censored=" << stats.censored
            << " mean=" << stats.mean << " se=" << stats.std_error;
  if (have_exact) std::cout << " exact_mean=" << exact.mean;
  std::cout << "\n";
  if (stats.censored == stats.trials) {
    std::cerr << "all trials censored at max-steps=" << opts.max_steps << "\n";
    return kCensoredOnly;
  }
  return kOk;
}

// --------------------------------------------------------------- spectrum --

struct SpectrumOpts {
  bool full = false;
  bool precise = false;
  double tv_gamma = -1.0;
  long long budget = 200000;
};

int cmd_spectrum(const CommonOpts& common, const SpectrumOpts& opts) {
  Params params = make_params(common);
  params.require_two_clusters();
  const std::vector<double> betas = parse_beta_list(common.beta);
  if (opts.full && params.n > 4) {
    throw std::domain_error("--full spectra are limited to n <= 4 (2^(2n) states)");
  }

  json rows = json::array();
  std::cout << "beta      gap            a2";
  if (betas.size() > 1) std::cout << "              (-1/beta)log(gap)";
  std::cout << "\n";
  for (double beta : betas) {
    params.beta = beta;
    SpectrumResult res;
    if (opts.full) {
      res = spectral_gap_full(params, beta, opts.precise);
    } else {
      const LumpedChain chain = build_lumped_chain(params.n, params, beta);
      res = spectral_gap(chain, opts.precise);
    }
    json row = {{"beta", beta},          {"a2", res.a2},
                {"gap", res.gap},        {"log_gap", res.log_gap},
                {"dense", res.dense},    {"precise", res.precise},
                {"top_eigenvalues", res.top_eigenvalues}};
    if (!res.precise && res.gap < 1e-12) {
      row["warning"] = "gap below double resolution; use --precise or a smaller beta";
      std::cerr << "warning: gap at beta=" << beta
                << " is below double resolution; use --precise (needs <= 400 "
                   "classes) or a smaller beta\n";
    }
    if (betas.size() > 1) row["slope"] = -res.log_gap / beta;
    if (opts.tv_gamma > 0.0 && !opts.full) {
      const LumpedChain chain = build_lumped_chain(params.n, params, beta);
      const MixingResult mix = mixing_time(chain, opts.tv_gamma, opts.budget);
      row["mixing"] = {{"gamma", opts.tv_gamma},
                       {"steps", mix.steps},
                       {"converged", mix.converged},
                       {"tv_reached", mix.tv_reached}};
    }
    rows.push_back(row);
    std::cout << beta << "    " << res.gap << "    " << res.a2;
    if (betas.size() > 1) std::cout << "    " << -res.log_gap / beta;
    std::cout << "\n";
  }
  json doc;
  doc["schema_version"] = 1;
  doc["config"] = config_json(params);
  doc["config"]["betas"] = betas;
  doc["config"]["full"] = opts.full;
  doc["config"]["precise"] = opts.precise;
  doc["results"] = rows;
  write_json(common.out_dir, "spectrum.json", doc);
  return kOk;
}

// ----------------------------------------------------------------- verify --

struct VerifyOpts {
  int n_max = 5;
  bool grid_default = false;
  bool gate_as_stated = false;
};

struct CheckCollector {
  json checks = json::array();
  int failures = 0;

  void add(const std::string& name, bool pass, json detail) {
    detail["name"] = name;
    detail["status"] = pass ? "pass" : "fail";
    checks.push_back(detail);
    if (!pass) ++failures;
  }
  void info(const std::string& name, json detail) {
    detail["name"] = name;
    detail["status"] = "info";
    checks.push_back(detail);
  }
};

std::vector<ClassState> named_classes(const std::vector<NamedState>& states, int n) {
  std::vector<ClassState> out;
  for (NamedState s : states) out.push_back(named_class(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

void verify_point(const StateGraph& sg, Params params, bool gate_as_stated,
                  bool dump_levels, CheckCollector& collector) {
  const int n = params.n;
  const std::string tag =
      "n=" + std::to_string(n) + " eps=" + params.epsilon.str() + " h=" + params.h.str();
  const LandscapeReport report = analyze(params);

  // State sets from definitions.
  const StabilityTable table = stability_levels(sg, params);
  if (dump_levels) {
    // V is constant on classes, so one entry per class covers every state.
    std::map<ClassState, std::string> levels;
    for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
      levels[sg.class_of(s)] = table.V[s] ? table.V[s]->str() : "infinite";
    }
    json lv = json::array();
    for (const auto& [cls, value] : levels) {
      lv.push_back({{"class", cls.str()}, {"V", value}});
    }
    collector.info("stability-levels " + tag, {{"per_class", lv}});
  }
  std::set<ClassState> oracle_stable;
  for (std::uint64_t s : table.global_minima) oracle_stable.insert(sg.class_of(s));
  std::set<ClassState> oracle_meta;
  for (std::uint64_t s : table.metastable_states()) oracle_meta.insert(sg.class_of(s));

  const auto stable_classes = named_classes(report.states.stable, n);
  const auto meta_classes = named_classes(report.states.metastable, n);
  collector.add(
      "stable-set " + tag,
      std::set<ClassState>(stable_classes.begin(), stable_classes.end()) == oracle_stable &&
          report.states.min_energy == table.min_energy,
      {{"predicted_min", report.states.min_energy.str()},
       {"measured_min", table.min_energy.str()}});
  collector.add("metastable-set " + tag,
                std::set<ClassState>(meta_classes.begin(), meta_classes.end()) == oracle_meta,
                {{"max_stability_level", table.max_finite_V().str()}});

  // Barriers.
  if (report.gammas.gamma_s && report.states.stable.size() >= 2) {
    const std::uint64_t s1 = sg.named(report.states.stable[0]);
    const std::uint64_t s2 = sg.named(report.states.stable[1]);
    const Rational phi = communication_height(sg, params, s1, s2);
    const Rational measured = phi - sg.energy(s1, params);
    json detail = {{"measured", measured.str()},
                   {"reported", report.gammas.gamma_s->str()}};
    for (const GammaCandidate& cand : report.gammas.gamma_s_candidates) {
      detail["candidate_" + cand.source] = cand.value.str();
      if (cand.value == measured) detail["matched_formula"] = cand.source;
    }
    collector.add("gamma_s " + tag, measured == *report.gammas.gamma_s, detail);
  }
  if (report.gammas.gamma_m && !report.states.metastable.empty()) {
    const std::uint64_t m = sg.named(report.states.metastable[0]);
    Rational phi = communication_height(sg, params, m, sg.named(report.states.stable[0]));
    for (size_t i = 1; i < report.states.stable.size(); ++i) {
      const Rational alt =
          communication_height(sg, params, m, sg.named(report.states.stable[i]));
      if (alt < phi) phi = alt;
    }
    const Rational measured = phi - sg.energy(m, params);
    collector.add("gamma_m " + tag, measured == *report.gammas.gamma_m,
                  {{"measured", measured.str()}, {"reported", report.gammas.gamma_m->str()}});
  }
  if (!report.gammas.gamma_s && !report.gammas.gamma_m &&
      report.regime == Regime::HPosEpsNegEq) {
    const std::uint64_t m = sg.named(NamedState::Minus);
    const Rational phi = communication_height(sg, params, m, sg.named(NamedState::Plus));
    collector.info("barrier(h=-eps) " + tag,
                   {{"measured_V(-1)", (phi - sg.energy(m, params)).str()},
                    {"note", "no closed form is stated on this boundary"}});
  }

  // Gates: canonical transition per regime.
  if (report.gate.gate) {
    std::uint64_t from = 0, to = 0;
    switch (report.regime) {
      case Regime::H0EpsPos:
      case Regime::H0EpsZero:
      case Regime::HPosEpsNonneg:
        from = sg.named(NamedState::Minus);
        to = sg.named(NamedState::Plus);
        break;
      case Regime::H0EpsNeg:
      case Regime::HPosEpsNegStrong:
        from = sg.named(NamedState::PlusMinus);
        to = sg.named(NamedState::MinusPlus);
        break;
      case Regime::HPosEpsNegWeak:
        from = sg.named(NamedState::PlusMinus);
        to = sg.named(NamedState::Plus);
        break;
      case Regime::HPosEpsNegEq:
        break;
    }
    const GateVerdict stated = verify_gate(sg, params, from, to, *report.gate.gate);
    json detail = {{"phi", stated.phi.str()},
                   {"stated_gate_is_gate", stated.is_gate},
                   {"source", report.gate.source}};
    if (!stated.witness.empty()) {
      json w = json::array();
      for (const ClassState& c : stated.witness) w.push_back(c.str());
      detail["witness_path"] = w;
    }
    const SaddleSet saddles = minimal_saddles(sg, params, from, to);
    json saddle_json = json::array();
    for (const ClassState& c : saddles.classes(sg)) saddle_json.push_back(c.str());
    detail["minimal_saddle_classes"] = saddle_json;

    // Exact tie on a critical slice: some class outside the stated gate reaches
    // the gate energy, which voids the uniqueness the gate argument rests on.
    // Happens only on the closure of the parameter ranges (|eps|=1 style).
    bool slice_tie = false;
    {
      const Rational gate_energy = class_energy_exact((*report.gate.gate)[0], params);
      const std::set<ClassState> gate_cls(report.gate.gate->begin(), report.gate.gate->end());
      for (const ClassState& c : enumerate_classes(n)) {
        if (gate_cls.count(c)) continue;
        for (int slice : report.slices) {
          if (c.p1 + c.p2 == slice && class_energy_exact(c, params) == gate_energy) {
            slice_tie = true;
            detail["tie_class"] = c.str();
          }
        }
      }
    }

    if (report.gate.observed_gate) {
      // The artifact predicts the printed set fails and the observed one works.
      const GateVerdict observed = verify_gate(sg, params, from, to, *report.gate.observed_gate);
      detail["observed_gate_is_gate"] = observed.is_gate;
      collector.add("gate(refutation) " + tag, !stated.is_gate && observed.is_gate, detail);
      if (gate_as_stated) {
        collector.add("gate(stated-claim) " + tag, stated.is_gate, detail);
      }
    } else if (!stated.is_gate && slice_tie) {
      detail["note"] = "stated gate fails via an exact slice tie on the range boundary";
      collector.info("gate(boundary-tie) " + tag, detail);
    } else {
      collector.add("gate " + tag, stated.is_gate, detail);
    }

    // Where the saddles sit, relative to the mirror-completed gate and the
    // critical slices. Ties on range boundaries fatten this set, so it is
    // reported as data rather than asserted.
    {
      std::set<ClassState> completed;
      const auto& base_gate =
          report.gate.observed_gate ? *report.gate.observed_gate : *report.gate.gate;
      for (const ClassState& c : base_gate) {
        completed.insert(c);
        completed.insert(ClassState{c.p2, c.p1, c.a});
      }
      bool in_gate = true, on_slices = true;
      std::set<int> slice_set(report.slices.begin(), report.slices.end());
      if (report.gate.observed_gate) {
        slice_set.clear();
        for (const ClassState& c : *report.gate.observed_gate) slice_set.insert(c.p1 + c.p2);
      }
      for (const ClassState& c : saddles.classes(sg)) {
        if (!completed.count(c)) in_gate = false;
        if (!slice_set.count(c.p1 + c.p2)) on_slices = false;
      }
      collector.info("saddle-classes " + tag, {{"saddles", saddle_json},
                                               {"within_mirrored_gate", in_gate},
                                               {"on_critical_slices", on_slices}});
    }
  }
}

int cmd_verify(const CommonOpts& common, const VerifyOpts& opts) {
  Params params = make_params(common);
  params.require_two_clusters();
  if (params.n > opts.n_max || params.n > 6) {
    std::cerr << "oracle verification is limited to n <= " << std::min(opts.n_max, 6)
              << " (got n=" << params.n << ")\n";
    return kCapacity;
  }
  StateGraph sg(params.n, opts.n_max);
  CheckCollector collector;

  std::vector<std::pair<std::string, std::string>> points;
  if (opts.grid_default) {
    for (const char* e : {"-1", "-0.6", "-0.3", "0", "0.3", "0.6", "1"}) {
      for (const char* h : {"0", "0.25", "0.5", "1"}) {
        points.emplace_back(e, h);
      }
    }
  } else {
    points.emplace_back(common.epsilon, common.h);
  }

  for (const auto& [e, h] : points) {
    Params point = params;
    point.epsilon = Rational::parse(e);
    point.h = Rational::parse(h);
    verify_point(sg, point, opts.gate_as_stated, !opts.grid_default, collector);
  }

  // Lumpability spot check at matrix scale.
  if (params.n <= 4) {
    Params point = params;
    point.epsilon = Rational::parse("0.5");
    point.h = Rational::parse("0.25");
    const LumpedChain chain = build_lumped_chain(point.n, point, 1.0);
    const ProjectionCheck proj =
        projection_check(sg, full_transition_matrix(point, 1.0), chain);
    collector.add("lumpability n=" + std::to_string(params.n),
                  proj.max_entry_diff <= 1e-12 && proj.max_within_class_spread <= 1e-12,
                  {{"max_entry_diff", proj.max_entry_diff},
                   {"max_within_class_spread", proj.max_within_class_spread}});
  }

  json doc;
  doc["schema_version"] = 1;
  doc["config"] = config_json(params);
  doc["config"]["n_max"] = opts.n_max;
  doc["config"]["grid"] = opts.grid_default ? "default" : "single-point";
  doc["checks"] = collector.checks;
  doc["failures"] = collector.failures;
  write_json(common.out_dir, "verify.json", doc);

  int passes = 0;
  for (const auto& c : collector.checks) {
    if (c["status"] == "pass") ++passes;
  }
  std::cout << "verify: " << passes << " checks passed, " << collector.failures
            << " failed (" << collector.checks.size() << " total)\n";
  return collector.failures == 0 ? kOk : kCheckFailure;
}

// ----------------------------------------------------------------- export --

int cmd_export(const CommonOpts& common) {
  Params params = make_params(common);
  params.require_two_clusters();
  const LumpedChain chain = build_lumped_chain(params.n, params, params.beta);
  write_json(common.out_dir, "chain.json", chain.to_json());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metastability analysis of the Ising model on two-cluster graphs"};
  app.set_help_flag("--help", "print help and exit");  // frees -h/--h for the field
  app.set_config("--config")->configurable(false);

  CommonOpts common;
  if (const char* env = std::getenv("CISING_OUT_DIR")) common.out_dir = env;
  if (const char* env = std::getenv("CISING_THREADS")) common.threads = std::atoi(env);
  app.add_option("-n,--n", common.n, "cluster size (>= 2)")->configurable();
  app.add_option("--k", common.k, "cluster count (analysis needs 2)");
  app.add_option("-e,--epsilon", common.epsilon, "cross-cluster coupling in [-1,1]");
  app.add_option("--h", common.h, "external field in [0,1]");
  app.add_option("--beta", common.beta, "inverse temperature (comma list for spectrum)");
  app.add_option("--seed", common.seed, "master RNG seed");
  app.add_option("--threads", common.threads, "worker cap for sampling");
  app.add_option("--out-dir", common.out_dir, "output directory");

  auto* analyze_cmd = app.add_subcommand("analyze", "closed-form landscape report");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("--format", common.format, "table|json|both");

  SimulateOpts sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Metropolis hitting-time sampling");
  simulate_cmd->fallthrough();
  simulate_cmd->add_option("--from", sim.from, "start state (+1,-1,+-1,-+1 or p1,p2,a)");
  simulate_cmd->add_option("--to", sim.to, "target state(s)");
  simulate_cmd->add_option("--trials", sim.trials, "independent replicas");
  simulate_cmd->add_option("--max-steps", sim.max_steps, "censoring threshold");
  simulate_cmd->add_flag("--lumped", sim.lumped, "simulate on class coordinates");
  simulate_cmd->add_option("--traj", sim.traj_count, "write this many trajectory CSVs");
  simulate_cmd->add_option("--delta", sim.delta,
                           "report the fraction inside exp(beta(Gamma -/+ delta))");

  SpectrumOpts spec;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectral gap (and mixing time)");
  spectrum_cmd->fallthrough();
  spectrum_cmd->add_flag("--full", spec.full, "use the full 2^(2n) matrix (n <= 4)");
  spectrum_cmd->add_flag("--precise", spec.precise, "extended-precision eigensolve");
  spectrum_cmd->add_option("--tv-gamma", spec.tv_gamma, "also compute t_mix(gamma)");
  spectrum_cmd->add_option("--budget", spec.budget, "step budget for t_mix");

  VerifyOpts ver;
  auto* verify_cmd = app.add_subcommand("verify", "brute-force certification of predictions");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--n-max", ver.n_max, "oracle size guard (<= 6)");
  verify_cmd->add_flag("--grid", ver.grid_default, "run the default (epsilon, h) grid");
  verify_cmd->add_flag("--gate-as-stated", ver.gate_as_stated,
                       "assert the tabulated gate verbatim (fails where it is refuted)");

  app.add_subcommand("export", "write the lumped chain as JSON")->fallthrough();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }

  try {
    if (app.got_subcommand("analyze")) return cmd_analyze(common);
    if (app.got_subcommand("simulate")) return cmd_simulate(common, sim);
    if (app.got_subcommand("spectrum")) return cmd_spectrum(common, spec);
    if (app.got_subcommand("verify")) return cmd_verify(common, ver);
    if (app.got_subcommand("export")) return cmd_export(common);
  } catch (const std::domain_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
