#include "cising/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "cising/graph.hpp"
#include "cising/highprec.hpp"
#include "cising/oracle.hpp"

namespace cising {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng Rng::stream(std::uint64_t master_seed, std::uint64_t stream_index) {
  Rng rng;
  std::uint64_t base = master_seed ^ (0x9E3779B97F4A7C15ULL * (stream_index + 1));
  for (auto& word : rng.s_) word = splitmix64(base);
  return rng;
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return (next() >> 11) * 0x1.0p-53; }

std::uint32_t Rng::below(std::uint32_t n) {
  // Lemire multiply-shift with rejection.
  std::uint64_t x = next() >> 32;
  std::uint64_t m = x * n;
  auto low = static_cast<std::uint32_t>(m);
  if (low < n) {
    const std::uint32_t threshold = -n % n;
    while (low < threshold) {
      x = next() >> 32;
      m = x * n;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

namespace {

bool in_targets(const std::set<ClassState>& targets, const ClassState& c) {
  return targets.count(c) > 0;
}

}  // namespace

Trajectory simulate(const Params& params, double beta, const SpinConfig& start,
                    const std::vector<ClassState>& targets, std::uint64_t seed,
                    long long max_steps, bool record_path) {
  params.validate();
  params.require_two_clusters();
  if (targets.empty()) throw std::invalid_argument("targets must be nonempty");
  const ClusteredGraph g = ClusteredGraph::build(params);
  if (start.size() != g.vertex_count()) {
    throw std::invalid_argument("start configuration size mismatch");
  }
  const std::set<ClassState> target_set(targets.begin(), targets.end());
  const double eps = params.epsilon.to_double();
  const double h = params.h.to_double();

  Trajectory traj;
  traj.seed = seed;
  SpinConfig sigma = start;
  ClassState cls = classify(g, sigma);
  traj.start = cls;
  double energy = hamiltonian_affine(g, sigma).eval(eps, h);
  if (record_path) traj.points.push_back({0, cls, energy});
  if (in_targets(target_set, cls)) {
    traj.hit_step = 0;
    return traj;
  }

  Rng rng = Rng::stream(seed, 0);
  const int vertices = g.vertex_count();
  for (long long step = 1; step <= max_steps; ++step) {
    const int v = static_cast<int>(rng.below(vertices));
    const double delta = flip_delta_affine(g, sigma, v).eval(eps, h);
    bool accept = delta <= 0.0;
    if (!accept) accept = rng.uniform() < std::exp(-beta * delta);
    if (accept) {
      const bool twin_plus = sigma.spin(v < g.n ? v + g.n : v - g.n) > 0;
      const bool up = sigma.spin(v) < 0;
      sigma.set(v, up ? 1 : -1);
      energy += delta;
      (v < g.n ? cls.p1 : cls.p2) += up ? 1 : -1;
      if (twin_plus) cls.a += up ? 1 : -1;
      if (record_path) traj.points.push_back({step, cls, energy});
      if (in_targets(target_set, cls)) {
        traj.hit_step = step;
        traj.steps_taken = step;
        return traj;
      }
    }
    traj.steps_taken = step;
  }
  traj.censored = true;
  return traj;
}

Trajectory simulate_lumped(const LumpedChain& chain, const ClassState& start,
                           const std::vector<ClassState>& targets, std::uint64_t seed,
                           long long max_steps, bool record_path) {
  if (targets.empty()) throw std::invalid_argument("targets must be nonempty");
  const int start_index = chain.index_of(start);
  if (start_index < 0) throw std::invalid_argument("invalid start class");
  std::set<int> target_set;
  for (const ClassState& c : targets) {
    const int idx = chain.index_of(c);
    if (idx < 0) throw std::invalid_argument("invalid target class " + c.str());
    target_set.insert(idx);
  }

  // Per-row acceptance probabilities recovered from prob = mult/2n * accept.
  const double denom = 2.0 * chain.n;

  Trajectory traj;
  traj.seed = seed;
  traj.start = start;
  int current = start_index;
  if (record_path) traj.points.push_back({0, chain.classes[current], chain.energy[current]});
  if (target_set.count(current)) {
    traj.hit_step = 0;
    return traj;
  }

  Rng rng = Rng::stream(seed, 0);
  const auto vertices = static_cast<std::uint32_t>(2 * chain.n);
  for (long long step = 1; step <= max_steps; ++step) {
    const auto pick = static_cast<int>(rng.below(vertices));
    int acc = 0;
    const LumpedChain::Entry* chosen = nullptr;
    for (const LumpedChain::Entry& e : chain.rows[current]) {
      acc += e.multiplicity;
      if (pick < acc) {
        chosen = &e;
        break;
      }
    }
    // multiplicities over all admissible moves always sum to 2n
    const double accept_prob = chosen->prob * denom / chosen->multiplicity;
    if (accept_prob >= 1.0 || rng.uniform() < accept_prob) {
      current = chosen->to;
      if (record_path) traj.points.push_back({step, chain.classes[current], chain.energy[current]});
      if (target_set.count(current)) {
        traj.hit_step = step;
        traj.steps_taken = step;
        return traj;
      }
    }
    traj.steps_taken = step;
  }
  traj.censored = true;
  return traj;
}

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

HittingMoments moments_from_dense(const LongMatrix& q) {
  const Eigen::Index m = q.rows();
  LongMatrix a = LongMatrix::Identity(m, m) - q;
  Eigen::PartialPivLU<LongMatrix> lu(a);
  LongVector ones = LongVector::Ones(m);
  LongVector mean = lu.solve(ones);
  LongVector b2 = ones + 2.0L * (q * mean);
  LongVector second = lu.solve(b2);

  HittingMoments out;
  const long double r1 = (a * mean - ones).cwiseAbs().maxCoeff() /
                         (1.0L + mean.cwiseAbs().maxCoeff());
  const long double r2 = (a * second - b2).cwiseAbs().maxCoeff() /
                         (1.0L + second.cwiseAbs().maxCoeff());
  out.residual = static_cast<double>(std::max(r1, r2));
  out.mean = static_cast<double>(mean(0));
  out.second_moment = static_cast<double>(second(0));
  out.log_mean = static_cast<double>(std::log(mean(0)));
  out.log_second = static_cast<double>(std::log(second(0)));
  return out;
}

}  // namespace

HittingMoments exact_hitting_moments(const LumpedChain& chain, const ClassState& start,
                                     const std::vector<ClassState>& targets, bool precise) {
  const int start_index = chain.index_of(start);
  if (start_index < 0) throw std::invalid_argument("invalid start class");
  std::set<int> absorbing;
  for (const ClassState& c : targets) {
    const int idx = chain.index_of(c);
    if (idx < 0) throw std::invalid_argument("invalid target class " + c.str());
    absorbing.insert(idx);
  }
  if (absorbing.count(start_index)) return {};

  std::vector<int> keep;
  std::vector<int> position(chain.num_classes(), -1);
  for (int i = 0; i < chain.num_classes(); ++i) {
    if (!absorbing.count(i)) {
      position[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  }
  const int m = static_cast<int>(keep.size());
  const int row = position[start_index];

  if (!precise) {
    LongMatrix q = LongMatrix::Zero(m, m);
    for (int r = 0; r < m; ++r) {
      const int i = keep[r];
      q(r, r) = chain.diagonal[i];
      for (const LumpedChain::Entry& e : chain.rows[i]) {
        if (position[e.to] >= 0) q(r, position[e.to]) += static_cast<long double>(e.prob);
      }
    }
    // Reorder so the start sits at row 0 for extraction convenience.
    if (row != 0) {
      q.row(0).swap(q.row(row));
      q.col(0).swap(q.col(row));
    }
    return moments_from_dense(q);
  }

  // Extended precision: rebuild transition entries from exact multiplicities
  // and rational deltas.
  if (m > 400) {
    throw std::domain_error("extended-precision hitting solve limited to ~400 classes");
  }
  const BigFloat beta(chain.beta);
  const BigFloat denom(2LL * chain.n);
  BigMatrix a(static_cast<size_t>(m) * m, BigFloat(0.0));
  std::vector<BigFloat> qdiag(m, BigFloat(0.0));
  auto at = [&](int i, int j) -> BigFloat& { return a[static_cast<size_t>(i) * m + j]; };
  for (int r = 0; r < m; ++r) {
    const int i = keep[r];
    BigFloat off_all(0.0);
    for (const LumpedChain::Entry& e : chain.rows[i]) {
      BigFloat prob = BigFloat(static_cast<long long>(e.multiplicity)) / denom;
      if (e.delta.sign() > 0) prob *= exp(-(beta * BigFloat(e.delta)));
      off_all += prob;
      if (position[e.to] >= 0) at(r, position[e.to]) -= prob;
    }
    const BigFloat diag = BigFloat(1.0) - off_all;  // rejection mass
    at(r, r) += BigFloat(1.0) - diag;
  }
  std::vector<BigFloat> ones(m, BigFloat(1.0));
  std::vector<BigFloat> mean = solve_linear(a, ones);  // a passed by value
  std::vector<BigFloat> b2(m, BigFloat(0.0));
  for (int r = 0; r < m; ++r) {
    BigFloat acc(1.0);
    for (int c = 0; c < m; ++c) {
      // Q = I - A
      BigFloat qrc = -a[static_cast<size_t>(r) * m + c];
      if (r == c) qrc += BigFloat(1.0);
      acc += BigFloat(2.0) * qrc * mean[c];
    }
    b2[r] = acc;
  }
  std::vector<BigFloat> second = solve_linear(a, b2);

  HittingMoments out;
  out.mean = mean[row].to_double();
  out.second_moment = second[row].to_double();
  out.log_mean = log(mean[row]).to_double();
  out.log_second = log(second[row]).to_double();
  BigFloat worst(0.0), scale(1.0);
  for (int r = 0; r < m; ++r) {
    BigFloat acc(-1.0);
    for (int c = 0; c < m; ++c) acc += a[static_cast<size_t>(r) * m + c] * mean[c];
    if (abs(acc) > worst) worst = abs(acc);
    if (abs(mean[r]) > scale) scale = abs(mean[r]);
  }
  out.residual = (worst / scale).to_double();
  return out;
}

HittingMoments exact_hitting_moments_full(const Params& params, double beta,
                                          const SpinConfig& start,
                                          const std::vector<ClassState>& targets) {
  if (params.n > 4) throw std::domain_error("full-chain moments limited to n <= 4");
  StateGraph sg(params.n, 4);
  const Eigen::MatrixXd p = full_transition_matrix(params, beta);
  const std::set<ClassState> target_set(targets.begin(), targets.end());

  std::vector<int> keep;
  std::vector<int> position(sg.num_states(), -1);
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    if (!target_set.count(sg.class_of(s))) {
      position[s] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(s));
    }
  }
  const std::uint64_t start_state = start.bits();
  if (position[start_state] < 0) return {};
  const int m = static_cast<int>(keep.size());
  LongMatrix q = LongMatrix::Zero(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      q(r, c) = static_cast<long double>(p(keep[r], keep[c]));
    }
  }
  const int row = position[start_state];
  if (row != 0) {
    q.row(0).swap(q.row(row));
    q.col(0).swap(q.col(row));
  }
  return moments_from_dense(q);
}

namespace {

SpectrumResult dense_gap_double(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  SpectrumResult out;
  out.dense = true;
  const Eigen::Index m = ev.size();
  out.a2 = ev(m - 2);
  out.gap = 1.0 - out.a2;
  out.log_gap = std::log(std::max(out.gap, 1e-300));
  for (Eigen::Index i = m - 1; i >= std::max<Eigen::Index>(0, m - 5); --i) {
    out.top_eigenvalues.push_back(ev(i));
  }
  return out;
}

SpectrumResult precise_gap(const BigMatrix& sym, int m) {
  std::vector<BigFloat> ev = jacobi_eigenvalues(sym, m);
  SpectrumResult out;
  out.dense = true;
  out.precise = true;
  out.a2 = ev[m - 2].to_double();
  BigFloat gap = BigFloat(1.0) - ev[m - 2];
  out.gap = gap.to_double();
  out.log_gap = gap.sign() > 0 ? log(gap).to_double() : -1e300;
  for (int i = m - 1; i >= std::max(0, m - 5); --i) {
    out.top_eigenvalues.push_back(ev[i].to_double());
  }
  return out;
}

}  // namespace

SpectrumResult spectral_gap(const LumpedChain& chain, bool precise) {
  const int m = chain.num_classes();
  if (precise) {
    if (m > 400) {
      throw std::domain_error("extended-precision eigensolve limited to ~400 classes");
    }
    const BigFloat beta(chain.beta);
    const BigFloat denom(2LL * chain.n);
    BigMatrix sym(static_cast<size_t>(m) * m, BigFloat(0.0));
    auto at = [&](int i, int j) -> BigFloat& { return sym[static_cast<size_t>(i) * m + j]; };
    std::vector<BigFloat> diag(m, BigFloat(1.0));
    // size-weighted reversibility makes sqrt(P_ij P_ji) the symmetrized entry
    for (int i = 0; i < m; ++i) {
      for (const LumpedChain::Entry& e : chain.rows[i]) {
        BigFloat prob = BigFloat(static_cast<long long>(e.multiplicity)) / denom;
        if (e.delta.sign() > 0) prob *= exp(-(beta * BigFloat(e.delta)));
        diag[i] -= prob;
        if (e.to > i) {
          // reverse multiplicity and |delta| mirror this edge
          const LumpedChain::Entry* back = nullptr;
          for (const LumpedChain::Entry& r : chain.rows[e.to]) {
            if (r.to == i) {
              back = &r;
              break;
            }
          }
          BigFloat rprob = BigFloat(static_cast<long long>(back->multiplicity)) / denom;
          if (back->delta.sign() > 0) rprob *= exp(-(beta * BigFloat(back->delta)));
          const BigFloat s = sqrt(prob * rprob);
          at(i, e.to) = s;
          at(e.to, i) = s;
        }
      }
    }
    for (int i = 0; i < m; ++i) at(i, i) = diag[i];
    return precise_gap(sym, m);
  }

  if (m <= 2000) {
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      sym(i, i) = chain.diagonal[i];
      for (const LumpedChain::Entry& e : chain.rows[i]) {
        if (e.to <= i) continue;
        double rprob = 0.0;
        for (const LumpedChain::Entry& r : chain.rows[e.to]) {
          if (r.to == i) {
            rprob = r.prob;
            break;
          }
        }
        const double s = std::sqrt(e.prob * rprob);
        sym(i, e.to) = s;
        sym(e.to, i) = s;
      }
    }
    return dense_gap_double(sym);
  }

  // Iterative deflation on (S + I)/2 with the known top eigenvector sqrt(pi).
  const std::vector<double> pi = chain.stationary();
  std::vector<double> v1(m);
  for (int i = 0; i < m; ++i) v1[i] = std::sqrt(pi[i]);
  std::vector<std::vector<std::pair<int, double>>> sym(m);
  for (int i = 0; i < m; ++i) {
    sym[i].push_back({i, (chain.diagonal[i] + 1.0) * 0.5});
    for (const LumpedChain::Entry& e : chain.rows[i]) {
      double rprob = 0.0;
      for (const LumpedChain::Entry& r : chain.rows[e.to]) {
        if (r.to == i) {
          rprob = r.prob;
          break;
        }
      }
      sym[i].push_back({e.to, 0.5 * std::sqrt(e.prob * rprob)});
    }
  }
  Rng rng = Rng::stream(0x5eed, 1);
  std::vector<double> x(m), y(m);
  for (double& xi : x) xi = rng.uniform() - 0.5;
  auto orthogonalize = [&](std::vector<double>& vec) {
    double dot = 0.0;
    for (int i = 0; i < m; ++i) dot += vec[i] * v1[i];
    for (int i = 0; i < m; ++i) vec[i] -= dot * v1[i];
  };
  auto normalize = [&](std::vector<double>& vec) {
    double norm = 0.0;
    for (double vi : vec) norm += vi * vi;
    norm = std::sqrt(norm);
    if (norm > 0) {
      for (double& vi : vec) vi /= norm;
    }
    return norm;
  };
  orthogonalize(x);
  normalize(x);
  SpectrumResult out;
  out.dense = false;
  double lambda = 0.0;
  const int max_iters = 200000;
  for (int it = 0; it < max_iters; ++it) {
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < m; ++i) {
      for (const auto& [j, w] : sym[i]) y[i] += w * x[j];
    }
    orthogonalize(y);
    double next = 0.0;
    for (int i = 0; i < m; ++i) next += y[i] * x[i];
    const double norm = normalize(y);
    x.swap(y);
    out.iterations = it + 1;
    if (it > 8 && std::abs(next - lambda) < 1e-14 && norm > 0) {
      lambda = next;
      break;
    }
    lambda = next;
    if (it + 1 == max_iters) throw std::runtime_error("spectral iteration did not converge");
  }
  out.a2 = 2.0 * lambda - 1.0;
  out.gap = 1.0 - out.a2;
  out.log_gap = std::log(std::max(out.gap, 1e-300));
  out.top_eigenvalues = {1.0, out.a2};
  return out;
}

SpectrumResult spectral_gap_full(const Params& params, double beta, bool precise) {
  if (params.n > 4) throw std::domain_error("full spectrum limited to n <= 4");
  const Eigen::MatrixXd p = full_transition_matrix(params, beta);
  const Eigen::Index m = p.rows();
  if (!precise) {
    Eigen::MatrixXd sym(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) sym(i, j) = std::sqrt(p(i, j) * p(j, i));
    }
    return dense_gap_double(sym);
  }
  // Rebuild entries in extended precision (exact deltas).
  StateGraph sg(params.n, 4);
  const BigFloat bf_beta(beta);
  const BigFloat q(1.0 / static_cast<double>(sg.num_vertices()));
  const int mm = static_cast<int>(m);
  BigMatrix sym(static_cast<size_t>(mm) * mm, BigFloat(0.0));
  auto at = [&](int i, int j) -> BigFloat& { return sym[static_cast<size_t>(i) * mm + j]; };
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    BigFloat off(0.0);
    for (int v = 0; v < sg.num_vertices(); ++v) {
      const std::uint64_t t = sg.neighbor(s, v);
      const Rational delta = (sg.affine(t) - sg.affine(s)).eval(params.epsilon, params.h);
      BigFloat prob = q;
      if (delta.sign() > 0) prob *= exp(-(bf_beta * BigFloat(delta)));
      off += prob;
      if (t > s) {
        // |delta| is shared by both directions; sqrt(P_st P_ts) = q e^{-b|d|/2}
        BigFloat rprob = q;
        if (delta.sign() < 0) rprob *= exp(-(bf_beta * BigFloat(-delta)));
        const BigFloat e = sqrt(prob * rprob);
        at(static_cast<int>(s), static_cast<int>(t)) = e;
        at(static_cast<int>(t), static_cast<int>(s)) = e;
      }
    }
    at(static_cast<int>(s), static_cast<int>(s)) = BigFloat(1.0) - off;
  }
  return precise_gap(sym, mm);
}

MixingResult mixing_time(const LumpedChain& chain, double gamma, long long budget) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
  const int m = chain.num_classes();
  if (m > 4000) throw std::domain_error("mixing-time iteration limited to ~4000 classes");
  const std::vector<double> pi = chain.stationary();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    p(i, i) = chain.diagonal[i];
    for (const LumpedChain::Entry& e : chain.rows[i]) p(i, e.to) += e.prob;
  }
  Eigen::MatrixXd dist = Eigen::MatrixXd::Identity(m, m);  // row c: law started at c
  MixingResult out;
  for (long long t = 0; t <= budget; ++t) {
    double worst = 0.0;
    for (int c = 0; c < m; ++c) {
      double tv = 0.0;
      for (int j = 0; j < m; ++j) tv += std::abs(dist(c, j) - pi[j]);
      worst = std::max(worst, 0.5 * tv);
    }
    out.steps = t;
    out.tv_reached = worst;
    if (worst <= gamma) {
      out.converged = true;
      return out;
    }
    dist = dist * p;
  }
  return out;  // budget exhausted: steps is a lower bound
}

HittingStats sample_hitting_times(const LumpedChain& chain, const ClassState& start,
                                  const std::vector<ClassState>& targets, int trials,
                                  std::uint64_t seed, long long max_steps,
                                  std::optional<std::pair<double, double>> window,
                                  int threads, bool full_space) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  HittingStats stats;
  stats.trials = trials;
  stats.samples.assign(trials, -1);

  const int workers = std::max(1, std::min(threads, trials));
  auto run_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      Trajectory traj;
      if (full_space) {
        traj = simulate(chain.params, chain.beta, representative(start, chain.n), targets,
                        seed + static_cast<std::uint64_t>(i), max_steps,
                        /*record_path=*/false);
      } else {
        traj = simulate_lumped(chain, start, targets, seed + static_cast<std::uint64_t>(i),
                               max_steps, /*record_path=*/false);
      }
      stats.samples[i] = traj.hit_step ? *traj.hit_step : -1;
    }
  };
  if (workers == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      pool.emplace_back(run_range, begin, std::min(trials, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }

  double sum = 0.0, sum2 = 0.0;
  long long inside = 0, uncensored = 0;
  for (long long tau : stats.samples) {
    if (tau < 0) {
      ++stats.censored;
      continue;
    }
    ++uncensored;
    sum += static_cast<double>(tau);
    sum2 += static_cast<double>(tau) * static_cast<double>(tau);
    if (window && static_cast<double>(tau) > window->first &&
        static_cast<double>(tau) < window->second) {
      ++inside;
    }
  }
  if (uncensored > 0) {
    stats.mean = sum / uncensored;
    stats.second_moment = sum2 / uncensored;
    stats.variance = std::max(0.0, stats.second_moment - stats.mean * stats.mean);
    if (uncensored > 1) {
      stats.variance = stats.variance * uncensored / (uncensored - 1.0);
    }
    stats.std_error = std::sqrt(stats.variance / uncensored);
    stats.log_mean_over_beta = std::log(std::max(stats.mean, 1e-300)) / chain.beta;
  }
  if (window) stats.window_fraction = static_cast<double>(inside) / trials;
  return stats;
}

}  // namespace cising
