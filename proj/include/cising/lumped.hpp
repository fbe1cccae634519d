#pragma once

#include <vector>

#include "json.hpp"

#include "cising/classes.hpp"

namespace cising {

/// Exact Markov chain on (p1,p2,a) classes. Off-diagonal entries are
/// (multiplicity / 2n) * exp(-beta [dH]+); the diagonal carries whatever mass
/// is left, so rows are stochastic by construction. The sign of dH is decided
/// on the affine representation, never on doubles.
class LumpedChain {
 public:
  struct Entry {
    int to = 0;
    double prob = 0.0;
    int multiplicity = 0;
    Rational delta;  // exact energy difference of the move
  };

  int n = 0;
  Params params;
  double beta = 1.0;
  std::vector<ClassState> classes;           // lexicographic
  std::vector<AffineEnergy> affine_energy;   // per class
  std::vector<double> energy;
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<Entry>> rows;      // off-diagonal entries
  std::vector<double> diagonal;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int index_of(const ClassState& c) const;

  /// Gibbs vector weighted by class sizes, normalized to sum 1. Computed in
  /// log space so large beta does not overflow.
  std::vector<double> stationary() const;

  double max_row_sum_error() const;
  /// max |pi_i P_ij - pi_j P_ji| over edges, with pi normalized.
  double max_detailed_balance_error() const;

  nlohmann::json to_json() const;

 private:
  std::vector<int> index_;  // (p1,p2,a) cube -> class index
  friend LumpedChain build_lumped_chain(int n, const Params& params, double beta);
};

LumpedChain build_lumped_chain(int n, const Params& params, double beta);

}  // namespace cising
