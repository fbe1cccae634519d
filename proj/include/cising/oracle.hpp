#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cising/classes.hpp"
#include "cising/lumped.hpp"

namespace cising {

/// Full 2^{2n} state space of G(2,n) with exact affine energies. State id is a
/// bitmask: low n bits = cluster 1, next n bits = cluster 2, set bit = +1.
class StateGraph {
 public:
  /// n_max guards the exponential blow-up (default matches the path-analysis
  /// budget; the hard ceiling is n = 6).
  explicit StateGraph(int n, int n_max = 5);

  int n() const { return n_; }
  int num_vertices() const { return 2 * n_; }
  std::uint64_t num_states() const { return std::uint64_t(1) << (2 * n_); }

  const AffineEnergy& affine(std::uint64_t state) const { return affine_[state]; }
  Rational energy(std::uint64_t state, const Params& params) const {
    return affine_[state].eval(params.epsilon, params.h);
  }
  ClassState class_of(std::uint64_t state) const;
  std::uint64_t neighbor(std::uint64_t state, int v) const {
    return state ^ (std::uint64_t(1) << v);
  }
  std::uint64_t named(NamedState s) const;
  SpinConfig config(std::uint64_t state) const {
    return SpinConfig::from_bits(2 * n_, state);
  }

 private:
  int n_;
  std::vector<AffineEnergy> affine_;
};

/// Exact energies bucketed into sorted distinct levels for one (eps, h).
struct EnergyLevels {
  std::vector<Rational> values;             // ascending distinct energies
  std::vector<int> level_of;                // per state
  std::vector<std::vector<std::uint64_t>> states_at;  // per level

  static EnergyLevels compute(const StateGraph& sg, const Params& params);
};

/// min over paths of the max energy along the path (exact).
Rational communication_height(const StateGraph& sg, const Params& params, std::uint64_t from,
                              std::uint64_t to);

struct StabilityTable {
  EnergyLevels levels;
  /// V per state; nullopt encodes "infinite" (global minima).
  std::vector<std::optional<Rational>> V;
  std::vector<std::uint64_t> global_minima;
  Rational min_energy;

  Rational max_finite_V() const;
  /// argmax of V over non-minima, empty when the max stability level is 0
  /// (then no state traps the dynamics and there is no metastable state).
  std::vector<std::uint64_t> metastable_states() const;
};

StabilityTable stability_levels(const StateGraph& sg, const Params& params);

struct SaddleSet {
  Rational phi;
  std::vector<std::uint64_t> states;
  std::vector<ClassState> classes(const StateGraph& sg) const;
};

/// All states at energy Phi(from,to) lying on some optimal path.
SaddleSet minimal_saddles(const StateGraph& sg, const Params& params, std::uint64_t from,
                          std::uint64_t to);

struct GateVerdict {
  bool is_gate = false;
  bool subset_of_saddles = false;
  bool disconnects = false;
  bool minimal = false;  // no single class of W can be dropped
  Rational phi;
  /// When W is not a gate: one optimal path avoiding W, as class states.
  std::vector<ClassState> witness;
};

GateVerdict verify_gate(const StateGraph& sg, const Params& params, std::uint64_t from,
                        std::uint64_t to, const std::vector<ClassState>& gate_classes);

/// Strictly-downhill move per the descent case analysis; nullopt when the
/// class admits none. Class-level, so it works at any n.
std::optional<Move> descent_move(const ClassState& c, const Params& params);
/// Vertex realizing the descent move on a concrete configuration.
std::optional<int> descent_vertex(const ClusteredGraph& g, const SpinConfig& sigma,
                                  const Params& params);

/// Exact Metropolis matrix over all 2^{2n} states (n <= 4).
Eigen::MatrixXd full_transition_matrix(const Params& params, double beta);

/// max |projection of full matrix - lumped entry|, plus the largest spread of
/// row values inside one class (strong-lumpability defect, 0 exactly).
struct ProjectionCheck {
  double max_entry_diff = 0.0;
  double max_within_class_spread = 0.0;
};
ProjectionCheck projection_check(const StateGraph& sg, const Eigen::MatrixXd& full,
                                 const LumpedChain& chain);

}  // namespace cising
