#pragma once

#include <stdexcept>

#include "cising/rational.hpp"

namespace cising {

/// Model parameters. epsilon and h are kept as exact rationals so regime
/// boundaries (epsilon = 0, h = -epsilon, h - epsilon = 1) classify exactly;
/// beta only ever enters through exponentials and stays a double.
struct Params {
  int n = 2;
  int k = 2;
  Rational epsilon;
  Rational h;
  double beta = 1.0;

  void validate() const {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (abs(epsilon) > Rational(1)) {
      throw std::invalid_argument("epsilon must lie in [-1, 1]");
    }
    if (h < Rational(0) || h > Rational(1)) {
      throw std::invalid_argument("h must lie in [0, 1]");
    }
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  }

  void require_two_clusters() const {
    if (k != 2) throw std::invalid_argument("analysis requires k = 2 clusters");
  }
};

}  // namespace cising
