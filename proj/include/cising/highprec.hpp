#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "cising/rational.hpp"

namespace cising {

/// Thin value wrapper over mpfr_t. Spectral gaps behave like exp(-beta*Gamma)
/// and drop far below double precision already at beta ~ 4, so the
/// acceptance-grade eigensolves and hitting-time solves run on this type.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 384;

  BigFloat() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
  BigFloat(double x) : BigFloat() { mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(long long x) : BigFloat() { mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
  BigFloat(const Rational& r) : BigFloat() {
    mpfr_set_si(v_, static_cast<long>(r.num()), MPFR_RNDN);
    mpfr_div_si(v_, v_, static_cast<long>(r.den()), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kDefaultPrec); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r;
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r;
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat exp(const BigFloat& a) {
    BigFloat r;
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r;
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

/// Square symmetric matrix in row-major order.
using BigMatrix = std::vector<BigFloat>;

/// Eigenvalues of a symmetric matrix, ascending (cyclic Jacobi).
std::vector<BigFloat> jacobi_eigenvalues(BigMatrix a, int m);

/// Solves A x = b by Gaussian elimination with partial pivoting.
std::vector<BigFloat> solve_linear(BigMatrix a, std::vector<BigFloat> b);

}  // namespace cising
