#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cising/lumped.hpp"
#include "cising/spin.hpp"

namespace cising {

/// xoshiro256++ with splitmix64 seeding. Per-trial streams derive from
/// (master seed, stream index), so parallel batches reproduce exactly.
class Rng {
 public:
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next();
  double uniform();                    // [0, 1)
  std::uint32_t below(std::uint32_t n);  // unbiased [0, n)

 private:
  std::uint64_t s_[4] = {};
};

struct TrajectoryPoint {
  long long step = 0;  // proposal step at which the move was accepted
  ClassState cls;
  double energy = 0.0;
};

struct Trajectory {
  std::uint64_t seed = 0;
  ClassState start;
  std::vector<TrajectoryPoint> points;  // step 0 plus every accepted move
  std::optional<long long> hit_step;
  bool censored = false;
  long long steps_taken = 0;
};

/// Single-flip Metropolis on the full configuration space. Targets are class
/// sets; hitting is checked in proposal time (tau = 0 when already inside).
Trajectory simulate(const Params& params, double beta, const SpinConfig& start,
                    const std::vector<ClassState>& targets, std::uint64_t seed,
                    long long max_steps, bool record_path = true);

/// Same law of tau on class coordinates, driven by move multiplicities.
Trajectory simulate_lumped(const LumpedChain& chain, const ClassState& start,
                           const std::vector<ClassState>& targets, std::uint64_t seed,
                           long long max_steps, bool record_path = true);

struct HittingMoments {
  double mean = 0.0;
  double second_moment = 0.0;
  double log_mean = 0.0;    // natural log, safe at large beta
  double log_second = 0.0;
  double residual = 0.0;    // max-norm relative residual of the solves
};

/// Absorbing-chain linear solves for E[tau], E[tau^2] from start into the
/// target set. precise switches to extended precision (needed once
/// beta * Gamma outgrows double conditioning).
HittingMoments exact_hitting_moments(const LumpedChain& chain, const ClassState& start,
                                     const std::vector<ClassState>& targets,
                                     bool precise = false);

/// Full-chain counterpart on the 2^{2n} Metropolis matrix (n <= 4).
HittingMoments exact_hitting_moments_full(const Params& params, double beta,
                                          const SpinConfig& start,
                                          const std::vector<ClassState>& targets);

struct SpectrumResult {
  double a2 = 0.0;       // second-largest eigenvalue
  double gap = 0.0;      // 1 - a2
  double log_gap = 0.0;  // natural log of the gap
  bool dense = true;
  bool precise = false;
  int iterations = 0;
  std::vector<double> top_eigenvalues;  // descending, leading few
};

SpectrumResult spectral_gap(const LumpedChain& chain, bool precise = false);
SpectrumResult spectral_gap_full(const Params& params, double beta, bool precise = false);

struct MixingResult {
  long long steps = 0;
  bool converged = false;   // false: budget exhausted, steps is a lower bound
  double tv_reached = 0.0;  // worst-start TV at the reported time
};

/// Exact worst-start total-variation mixing time of the lumped chain; class
/// sizes weight the stationary vector.
MixingResult mixing_time(const LumpedChain& chain, double gamma, long long budget);

struct HittingStats {
  int trials = 0;
  long long censored = 0;
  double mean = 0.0;
  double variance = 0.0;
  double second_moment = 0.0;
  double std_error = 0.0;
  double log_mean_over_beta = 0.0;
  std::optional<double> window_fraction;  // fraction inside (exp(b(G-d)), exp(b(G+d)))
  std::vector<long long> samples;
};

/// Seeded independent replicas (parallel, deterministic in the seed).
HittingStats sample_hitting_times(const LumpedChain& chain, const ClassState& start,
                                  const std::vector<ClassState>& targets, int trials,
                                  std::uint64_t seed, long long max_steps,
                                  std::optional<std::pair<double, double>> window,
                                  int threads = 1, bool full_space = false);

}  // namespace cising
