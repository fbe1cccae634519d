// Acceptance suite: runs every certification criterion at its stated
// tolerance and prints one pass/fail line per criterion.
//
// Exact-value checks run in rational arithmetic (tolerance zero); asymptotic
// statements are certified through slope/trend checks at finite beta with the
// stated bands. --only N restricts the run to one criterion.

#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cising/dynamics.hpp"
#include "cising/landscape.hpp"
#include "cising/oracle.hpp"

using namespace cising;

namespace {

Params make(int n, const char* eps, const char* h, double beta = 1.0) {
  Params p;
  p.n = n;
  p.epsilon = Rational::parse(eps);
  p.h = Rational::parse(h);
  p.beta = beta;
  return p;
}

const std::vector<const char*> kGridEps = {"-1", "-0.6", "-0.3", "0", "0.3", "0.6", "1"};
const std::vector<const char*> kGridH = {"0", "0.25", "0.5", "1"};

struct Tally {
  int checks = 0;
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      detail << "    FAILED: " << what << "\n";
    }
  }
};

// ---------------------------------------------------------------------------
// 01: class energy == hamiltonian, every configuration, exact
bool criterion_01(std::ostream& os) {
  Tally t;
  for (int n : {2, 3, 4}) {
    const Params base = make(n, "0", "0");
    const ClusteredGraph g = ClusteredGraph::build(base);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << (2 * n)); ++s) {
      const SpinConfig sigma = SpinConfig::from_bits(2 * n, s);
      const AffineEnergy direct = hamiltonian_affine(g, sigma);
      const AffineEnergy via_class = class_energy_affine(classify(g, sigma), n);
      t.expect(direct == via_class, "affine identity at n=" + std::to_string(n));
      if (direct != via_class) break;
    }
    for (const char* eps : kGridEps) {
      for (const char* h : kGridH) {
        const Params p = make(n, eps, h);
        const ClusteredGraph gg = ClusteredGraph::build(p);
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << (2 * n)); ++s) {
          const SpinConfig sigma = SpinConfig::from_bits(2 * n, s);
          if (hamiltonian_exact(gg, sigma, p) !=
              class_energy_exact(classify(gg, sigma), p)) {
            t.expect(false, std::string("rational identity at eps=") + eps + " h=" + h);
            break;
          }
        }
      }
    }
  }
  os << "    " << t.checks << " exact identities over n in {2,3,4} and the 28-point grid\n";
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 02: brute-force barriers equal the closed forms; adjudicates the two
// conflicting prints
bool criterion_02(std::ostream& os) {
  Tally t;
  int strong_cor = 0, strong_eq = 0, h0_cor = 0, h0_prop = 0;
  for (int n : {2, 3, 4}) {
    StateGraph sg(n, 4);
    for (const char* eps_text : kGridEps) {
      for (const char* h_text : kGridH) {
        const Params p = make(n, eps_text, h_text);
        const Rational eps = p.epsilon, h = p.h;
        const std::string tag =
            " at n=" + std::to_string(n) + " eps=" + eps.str() + " h=" + h.str();
        const std::uint64_t plus = sg.named(NamedState::Plus);
        const std::uint64_t minus = sg.named(NamedState::Minus);
        const std::uint64_t pm = sg.named(NamedState::PlusMinus);
        const std::uint64_t mp = sg.named(NamedState::MinusPlus);
        auto barrier = [&](std::uint64_t a, std::uint64_t b) {
          return communication_height(sg, p, a, b) - sg.energy(a, p);
        };
        auto barrier_to_set = [&](std::uint64_t a, std::vector<std::uint64_t> targets) {
          Rational best = communication_height(sg, p, a, targets[0]);
          for (size_t i = 1; i < targets.size(); ++i) {
            const Rational alt = communication_height(sg, p, a, targets[i]);
            if (alt < best) best = alt;
          }
          return best - sg.energy(a, p);
        };
        if (h.is_zero()) {
          const Rational gs = eps >= Rational(0) ? barrier(minus, plus) : barrier(pm, mp);
          const Rational cor = gamma_s_h0(n, eps);
          const Rational prop = gamma_s_h0_variant(n, eps);
          if (gs == cor) ++h0_cor;
          if (gs == prop) ++h0_prop;
          t.expect(gs == cor, "Gamma_s^0" + tag + " measured " + gs.str());
          if (!eps.is_zero()) {
            const Rational gm = eps > Rational(0) ? barrier_to_set(pm, {plus, minus})
                                                  : barrier_to_set(plus, {pm, mp});
            t.expect(gm == gamma_m_h0(n, eps), "Gamma_m (h=0)" + tag);
          }
        } else if (eps >= Rational(0)) {
          t.expect(barrier(minus, plus) == gamma_1m(n, eps, h), "Gamma_m^1" + tag);
        } else if (-eps < h) {
          t.expect(barrier(pm, plus) == gamma_2m(n, eps, h), "Gamma_m^2" + tag);
        } else if (-eps == h) {
          // no stated barrier on the boundary
        } else {
          const Rational gs = barrier(pm, mp);
          const Rational eq = gamma_s_strong_left(n, eps, h);
          const Rational cor = gamma_s_strong(n, eps, h);
          if (gs == cor) ++strong_cor;
          if (gs == eq) ++strong_eq;
          t.expect(gs == cor || gs == eq, "Gamma_s (0<h<-eps)" + tag + " matches neither form");
          t.expect(gs == cor, "Gamma_s (0<h<-eps)" + tag + " measured " + gs.str() +
                                  " left-crossing " + eq.str() + " through-plus " + cor.str());
        }
      }
    }
  }
  os << "    h=0 Gamma_s: +|eps| form matched " << h0_cor
     << " points, -|eps| variant " << h0_prop << "\n";
  os << "    0<h<-eps Gamma_s: through-plus form matched " << strong_cor
     << " points, left-crossing form " << strong_eq
     << " (the left route overprices by 2nh)\n";
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 03: stable and metastable sets from definitions, boundaries included
bool criterion_03(std::ostream& os) {
  Tally t;
  for (int n : {3, 4}) {
    StateGraph sg(n, 4);
    for (const char* eps : kGridEps) {
      for (const char* h : kGridH) {
        const Params p = make(n, eps, h);
        const std::string tag =
            " at n=" + std::to_string(n) + " eps=" + std::string(eps) + " h=" + h;
        const StateSets predicted = identify_states(p);
        const StabilityTable table = stability_levels(sg, p);
        std::set<ClassState> oracle_stable, oracle_meta;
        for (std::uint64_t s : table.global_minima) oracle_stable.insert(sg.class_of(s));
        for (std::uint64_t s : table.metastable_states()) oracle_meta.insert(sg.class_of(s));
        std::set<ClassState> pred_stable, pred_meta;
        for (NamedState s : predicted.stable) pred_stable.insert(named_class(s, n));
        for (NamedState s : predicted.metastable) pred_meta.insert(named_class(s, n));
        t.expect(pred_stable == oracle_stable, "stable set" + tag);
        t.expect(pred_meta == oracle_meta, "metastable set" + tag);
        t.expect(predicted.min_energy == table.min_energy, "minimal energy" + tag);
      }
    }
  }
  os << "    " << t.checks << " exact set comparisons (grid incl. eps=0 and h=-eps)\n";
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 04: stated gates verify; saddles sit on the critical slices
struct GateCase {
  int n;
  const char* eps;
  const char* h;
  NamedState from, to;
};

bool criterion_04(std::ostream& os) {
  Tally t;
  std::vector<GateCase> cases;
  for (int n : {3, 4, 5}) {
    cases.push_back({n, "0.5", "0", NamedState::Minus, NamedState::Plus});        // C*even/odd
    cases.push_back({n, "-0.5", "0", NamedState::PlusMinus, NamedState::MinusPlus});
    // C*1 points sit off the exact tie manifolds (eps + 5h = 2, h = 1/2, ...)
    cases.push_back({n, "0.5", "0.35", NamedState::Minus, NamedState::Plus});     // C*1 h<=eps
    cases.push_back({n, "0.25", "0.45", NamedState::Minus, NamedState::Plus});    // C*1 eps<h
    cases.push_back({n, "-0.2", "0.6", NamedState::PlusMinus, NamedState::Plus}); // C*2
  }
  for (const GateCase& c : cases) {
    const Params p = make(c.n, c.eps, c.h);
    StateGraph sg(c.n, 5);
    const GateInfo gate = gate_set(p);
    const std::string tag = " n=" + std::to_string(c.n) + " eps=" + c.eps + " h=" + c.h +
                            " [" + gate.source + "]";
    if (!gate.gate) {
      t.expect(false, "missing stated gate" + tag);
      continue;
    }
    const GateVerdict verdict =
        verify_gate(sg, p, sg.named(c.from), sg.named(c.to), *gate.gate);
    t.expect(verdict.is_gate, "gate verdict" + tag);
    const SaddleSet saddles = minimal_saddles(sg, p, sg.named(c.from), sg.named(c.to));
    const std::vector<int> slices = critical_slices(p);
    for (const ClassState& cls : saddles.classes(sg)) {
      const bool on_slice =
          std::find(slices.begin(), slices.end(), cls.p1 + cls.p2) != slices.end();
      t.expect(on_slice, "saddle " + cls.str() + " off the critical slice" + tag);
    }
  }
  os << "    " << t.checks << " gate and saddle-slice checks over n in {3,4,5}\n";
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 04b: the printed C*_3 gate, taken literally (known to fail: the cheaper
// crossing through +1 avoids it; see the decisions record)
bool criterion_04b(std::ostream& os) {
  Tally t;
  for (int n : {3, 4, 5}) {
    for (auto [eps, h] : std::vector<std::pair<const char*, const char*>>{
             {"-0.5", "0.25"}, {"-0.8", "0.3"}}) {
      const Params p = make(n, eps, h);
      StateGraph sg(n, 5);
      const GateInfo gate = gate_set(p);
      const GateVerdict verdict = verify_gate(sg, p, sg.named(NamedState::PlusMinus),
                                              sg.named(NamedState::MinusPlus), *gate.gate);
      const std::string tag = " n=" + std::to_string(n) + " eps=" + eps + " h=" + std::string(h);
      t.expect(verdict.is_gate, "printed C*_3 gate claim" + tag);
      if (!verdict.is_gate && gate.observed_gate) {
        const GateVerdict observed =
            verify_gate(sg, p, sg.named(NamedState::PlusMinus),
                        sg.named(NamedState::MinusPlus), *gate.observed_gate);
        os << "    refuted" << tag << ": optimal paths cross +1; the verified gate is";
        for (const ClassState& c : *gate.observed_gate) os << " " << c.str();
        os << (observed.is_gate ? " (verdict TRUE)" : " (verdict FALSE)") << "\n";
      }
    }
  }
  os << t.detail.str();
  os << "    this criterion asserts the printed claim verbatim and is expected to "
        "stay red;\n    the measured barrier sits 2nh below the printed one\n";
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 05: reference-path maxima equal the stated branch values exactly
bool criterion_05(std::ostream& os) {
  Tally t;
  std::mt19937_64 rng(424242);
  auto draw = [&](long long lo, long long hi) {
    return static_cast<long long>(lo + rng() % (hi - lo + 1));
  };
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      struct Sample {
        Rational eps, h;
        PathKind kind;
      };
      std::vector<Sample> samples = {
          {Rational(draw(0, 40), 40), Rational(0), PathKind::Bar},
          {Rational(-draw(1, 40), 40), Rational(0), PathKind::Hat},
          {Rational(draw(0, 40), 40), Rational(draw(1, 40), 40), PathKind::Bar},
      };
      const long long e = draw(2, 39);
      samples.push_back({Rational(-e, 40), Rational(draw(e + 1, 40), 40), PathKind::Tilde});
      samples.push_back({Rational(-e, 40), Rational(draw(1, e - 1), 40), PathKind::Check});
      for (const auto& s : samples) {
        Params p = make(n, "0", "0");
        p.epsilon = s.eps;
        p.h = s.h;
        const ReferencePath path = reference_path(p, s.kind);
        const Rational formula = reference_path_max_formula(p, s.kind);
        t.expect(path.max_energy == formula,
                 std::string(path_kind_name(s.kind)) + " max at n=" + std::to_string(n) +
                     " eps=" + p.epsilon.str() + " h=" + p.h.str() + ": computed " +
                     path.max_energy.str() + " vs " + formula.str());
      }
    }
  }
  os << "    " << t.checks
     << " exact path maxima (even-n hat branch uses the corrected eps-free value)\n";
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 06: the projected full matrix equals the lumped chain; spectral gaps agree
//
// The symmetrized full matrix leaves the span of the lifted class indicators
// invariant (that is lumpability, certified entrywise right here), so its
// spectrum is the lumped spectrum plus the spectrum on the orthogonal
// complement. The complement's top eigenvalue is O(1) away from 1 and comes
// from deflated power iteration in doubles; the lumped side runs in extended
// precision. Direct extended-precision eigensolves of the whole 4^n matrix
// cross-check the split at n <= 3.
double complement_gap(const StateGraph& sg, const Eigen::MatrixXd& full,
                      const LumpedChain& chain) {
  const auto m = static_cast<Eigen::Index>(sg.num_states());
  Eigen::MatrixXd shifted(m, m);  // (S + I)/2 keeps the top of the spectrum on top
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      shifted(i, j) = 0.5 * std::sqrt(full(i, j) * full(j, i));
    }
    shifted(i, i) += 0.5;
  }
  // orthonormal basis of the lifted subspace: sqrt(mu) restricted to a class
  std::vector<double> logmu(m);
  double logmax = -1e300;
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    logmu[s] = -chain.beta * sg.affine(s).eval(chain.params.epsilon.to_double(),
                                               chain.params.h.to_double());
    logmax = std::max(logmax, logmu[s]);
  }
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(m, chain.num_classes());
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    basis(s, chain.index_of(sg.class_of(s))) = std::exp(0.5 * (logmu[s] - logmax));
  }
  for (int c = 0; c < chain.num_classes(); ++c) basis.col(c).normalize();
  auto deflate = [&](Eigen::VectorXd& x) { x -= basis * (basis.transpose() * x); };

  Eigen::VectorXd x = Eigen::VectorXd::Random(m);
  deflate(x);
  x.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXd y = shifted * x;
    deflate(y);
    const double next = x.dot(y);
    y.normalize();
    x = y;
    if (it > 16 && std::abs(next - lambda) < 1e-13) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return 1.0 - (2.0 * lambda - 1.0);
}

bool criterion_06(std::ostream& os) {
  Tally t;
  for (int n : {2, 3, 4}) {
    for (double beta : {1.0, 4.0}) {
      const Params p = make(n, "0.5", "0.25", beta);
      const std::string tag = " at n=" + std::to_string(n) + " beta=" + std::to_string(beta);
      StateGraph sg(n, 4);
      const LumpedChain chain = build_lumped_chain(n, p, beta);
      const Eigen::MatrixXd full = full_transition_matrix(p, beta);
      const ProjectionCheck proj = projection_check(sg, full, chain);
      t.expect(proj.max_within_class_spread <= 1e-12, "lumpability spread" + tag);
      t.expect(proj.max_entry_diff <= 1e-12, "projected entries" + tag);

      const SpectrumResult lumped = spectral_gap(chain, true);
      const double off_subspace = complement_gap(sg, full, chain);
      const double full_gap = std::min(lumped.gap, off_subspace);
      const double diff = std::abs(lumped.gap - full_gap);
      t.expect(diff <= 1e-9, "gap agreement" + tag);
      t.expect(off_subspace > 1e-3, "slow mode inside the symmetric subspace" + tag);
      os << "    n=" << n << " beta=" << beta << ": gap=" << full_gap
         << " |full-lumped|=" << diff << " (complement gap " << off_subspace << ")\n";
      if (n <= 3) {
        const SpectrumResult direct = spectral_gap_full(p, beta, true);
        t.expect(std::abs(direct.gap - full_gap) <= 1e-9,
                 "direct extended-precision cross-check" + tag);
      }
    }
  }
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 07: hitting-time and spectral slopes walk monotonically into the barrier
struct SlopeCase {
  const char* name;
  const char* eps;
  const char* h;
  NamedState from;
  std::vector<NamedState> to;
  bool tunneling;  // stable->stable (gamma_s) vs metastable->stable (gamma_m)
  Rational gamma;
};

bool criterion_07(std::ostream& os) {
  Tally t;
  const int n = 4;
  const std::vector<SlopeCase> cases = {
      {"Gamma_s^0", "0.5", "0", NamedState::Minus, {NamedState::Plus}, true, Rational(10)},
      {"Gamma_m^1", "0.5", "0.25", NamedState::Minus, {NamedState::Plus}, false, Rational(9)},
      {"Gamma_m^2", "-0.2", "0.6", NamedState::PlusMinus, {NamedState::Plus}, false,
       Rational(32, 5)},
      {"Gamma_s(0<h<-eps)", "-0.8", "0.3", NamedState::PlusMinus, {NamedState::MinusPlus},
       true, Rational(10)},
  };
  for (const SlopeCase& c : cases) {
    {
      const GammaInfo g = gamma_values(make(n, c.eps, c.h));
      const std::optional<Rational>& reported = c.tunneling ? g.gamma_s : g.gamma_m;
      t.expect(reported && *reported == c.gamma,
               std::string("closed form consistency for ") + c.name);
    }
    const double gamma = c.gamma.to_double();
    double prev_tau = 1e18, prev_rho = 1e18;
    double last_tau = 0, last_rho = 0;
    for (double beta : {4.0, 6.0, 8.0, 10.0}) {
      const Params p = make(n, c.eps, c.h, beta);
      const LumpedChain chain = build_lumped_chain(n, p, beta);
      std::vector<ClassState> targets;
      for (NamedState s : c.to) targets.push_back(named_class(s, n));
      const HittingMoments m =
          exact_hitting_moments(chain, named_class(c.from, n), targets, true);
      t.expect(m.residual <= 1e-10, "solver residual");
      const SpectrumResult spectrum = spectral_gap(chain, true);
      const double slope_tau = m.log_mean / beta;
      const double slope_rho = -spectrum.log_gap / beta;
      t.expect(std::abs(slope_tau - gamma) < prev_tau, "tau slope monotone for " +
                                                           std::string(c.name) + " at beta=" +
                                                           std::to_string(beta));
      t.expect(std::abs(slope_rho - gamma) < prev_rho,
               "gap slope monotone for " + std::string(c.name));
      prev_tau = std::abs(slope_tau - gamma);
      prev_rho = std::abs(slope_rho - gamma);
      last_tau = slope_tau;
      last_rho = slope_rho;
    }
    t.expect(std::abs(last_tau - gamma) <= 0.1 * gamma,
             std::string(c.name) + " tau slope within 10% at beta=10");
    t.expect(std::abs(last_rho - gamma) <= 0.1 * gamma,
             std::string(c.name) + " gap slope within 10% at beta=10");
    os << "    " << c.name << " (Gamma=" << gamma << "): slopes at beta=10: tau "
       << last_tau << ", gap " << last_rho << "\n";
  }
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 08: E[tau^2]/E[tau]^2 -> 2 (exponential law) via exact solves
bool criterion_08(std::ostream& os) {
  Tally t;
  const int n = 4;
  struct RatioCase {
    const char* eps;
    const char* h;
    NamedState from;
    std::vector<NamedState> to;
  };
  for (const RatioCase& c : std::vector<RatioCase>{
           {"0.5", "0", NamedState::PlusMinus, {NamedState::Plus, NamedState::Minus}},
           {"0.5", "0.25", NamedState::Minus, {NamedState::Plus}}}) {
    const Params p = make(n, c.eps, c.h, 10.0);
    const LumpedChain chain = build_lumped_chain(n, p, 10.0);
    std::vector<ClassState> targets;
    for (NamedState s : c.to) targets.push_back(named_class(s, n));
    const HittingMoments m = exact_hitting_moments(chain, named_class(c.from, n), targets, true);
    const double ratio = std::exp(m.log_second - 2.0 * m.log_mean);
    os << "    eps=" << c.eps << " h=" << c.h << ": E[tau^2]/E[tau]^2 = " << ratio << "\n";
    t.expect(ratio >= 1.90 && ratio <= 2.10, "moment ratio in [1.90, 2.10]");
  }
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 09: seeded Monte Carlo agrees with the linear solve and reproduces itself
bool criterion_09(std::ostream& os) {
  Tally t;
  const Params p = make(4, "0.5", "0", 1.0);
  const LumpedChain chain = build_lumped_chain(4, p, 1.0);
  const ClassState minus{0, 0, 0};
  const std::vector<ClassState> plus = {{4, 4, 4}};
  const HittingMoments exact = exact_hitting_moments(chain, minus, plus);
  const int trials = 1000;
  const HittingStats stats = sample_hitting_times(chain, minus, plus, trials, 7,
                                                  100000000, std::nullopt, 2, true);
  t.expect(stats.censored == 0, "no censoring at this scale");
  const double se = std::sqrt((exact.second_moment - exact.mean * exact.mean) / trials);
  os << "    empirical mean " << stats.mean << " vs exact " << exact.mean << " (3se = "
     << 3.0 * se << ")\n";
  t.expect(std::abs(stats.mean - exact.mean) <= 3.0 * se, "mean within 3 standard errors");
  const HittingStats rerun = sample_hitting_times(chain, minus, plus, trials, 7,
                                                  100000000, std::nullopt, 3, true);
  t.expect(stats.samples == rerun.samples, "identical rerun under the same seed");
  os << t.detail.str();
  return t.failures == 0;
}

// ---------------------------------------------------------------------------
// 10: the size-weighted Gibbs vector is stationary for the lumped chain
bool criterion_10(std::ostream& os) {
  Tally t;
  double worst = 0.0;
  for (int n = 3; n <= 8; ++n) {
    for (double beta : {0.5, 2.0, 8.0}) {
      const Params p = make(n, "0.4", "0.25", beta);
      const LumpedChain chain = build_lumped_chain(n, p, beta);
      const std::vector<double> pi = chain.stationary();
      std::vector<double> out(pi.size(), 0.0);
      for (int i = 0; i < chain.num_classes(); ++i) {
        out[i] += pi[i] * chain.diagonal[i];
        for (const LumpedChain::Entry& e : chain.rows[i]) out[e.to] += pi[i] * e.prob;
      }
      double err = 0.0;
      for (size_t i = 0; i < pi.size(); ++i) err = std::max(err, std::abs(out[i] - pi[i]));
      worst = std::max(worst, err);
      t.expect(err <= 1e-10, "stationarity at n=" + std::to_string(n) + " beta=" +
                                 std::to_string(beta));
    }
  }
  os << "    worst invariance defect " << worst << " over n in {3..8}, beta in {0.5,2,8}\n";
  os << t.detail.str();
  return t.failures == 0;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }
  const std::vector<Criterion> criteria = {
      {1, "energy-identity", criterion_01},
      {2, "barrier-theorems", criterion_02},
      {3, "state-sets", criterion_03},
      {4, "gates-and-saddles", criterion_04},
      {5, "reference-path-maxima", criterion_05},
      {6, "lumpability-and-gaps", criterion_06},
      {7, "asymptotic-slopes", criterion_07},
      {8, "exponential-limit", criterion_08},
      {9, "monte-carlo-consistency", criterion_09},
      {10, "stationarity", criterion_10},
      {11, "gate-c3-stated-claim", criterion_04b},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "    exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (c.id == 11 ? "04b" : [&] {
      char buf[8];
      std::snprintf(buf, sizeof buf, "%02d", c.id);
      return std::string(buf);
    }()) << " " << c.name << "\n" << detail.str();
    if (!ok) ++failures;
  }
  return failures;
}
