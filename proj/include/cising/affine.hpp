#pragma once

#include "cising/rational.hpp"

namespace cising {

/// Energy as an affine form  base + eps_coef*epsilon + h_coef*h  with integer
/// coefficients. Every Hamiltonian value on the clustered graph has this shape,
/// which keeps tie detection exact for rational couplings.
struct AffineEnergy {
  long long base = 0;
  long long eps_coef = 0;
  long long h_coef = 0;

  Rational eval(const Rational& eps, const Rational& h) const {
    return Rational(base) + Rational(eps_coef) * eps + Rational(h_coef) * h;
  }
  double eval(double eps, double h) const {
    return static_cast<double>(base) + static_cast<double>(eps_coef) * eps +
           static_cast<double>(h_coef) * h;
  }

  friend AffineEnergy operator+(const AffineEnergy& a, const AffineEnergy& b) {
    return {a.base + b.base, a.eps_coef + b.eps_coef, a.h_coef + b.h_coef};
  }
  friend AffineEnergy operator-(const AffineEnergy& a, const AffineEnergy& b) {
    return {a.base - b.base, a.eps_coef - b.eps_coef, a.h_coef - b.h_coef};
  }
  friend bool operator==(const AffineEnergy& a, const AffineEnergy& b) {
    return a.base == b.base && a.eps_coef == b.eps_coef && a.h_coef == b.h_coef;
  }
  friend bool operator!=(const AffineEnergy& a, const AffineEnergy& b) {
    return !(a == b);
  }
};

}  // namespace cising
