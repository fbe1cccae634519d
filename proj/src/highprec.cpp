#include "cising/highprec.hpp"

#include <algorithm>
#include <stdexcept>

namespace cising {

std::vector<BigFloat> jacobi_eigenvalues(BigMatrix a, int m) {
  if (static_cast<int>(a.size()) != m * m) throw std::invalid_argument("matrix shape");
  auto at = [&](int i, int j) -> BigFloat& { return a[i * m + j]; };
  const BigFloat zero(0.0), one(1.0), half(0.5);

  // Stop once the off-diagonal mass is negligible against the working
  // precision; ~2 bits per sweep headroom keeps this far from the tolerance.
  BigFloat tol = one;
  for (int i = 0; i < (BigFloat::kDefaultPrec - 24) / 16; ++i) tol *= BigFloat(1.0 / 65536.0);

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    BigFloat off = zero;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) off += at(i, j) * at(i, j);
    }
    BigFloat diag = one;
    for (int i = 0; i < m; ++i) diag += at(i, i) * at(i, i);
    if (off < tol * tol * diag) break;

    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (at(p, q).is_zero()) continue;
        const BigFloat apq = at(p, q);
        const BigFloat theta = (at(q, q) - at(p, p)) / (BigFloat(2.0) * apq);
        BigFloat t = one / (abs(theta) + sqrt(theta * theta + one));
        if (theta.sign() < 0) t = -t;
        const BigFloat c = one / sqrt(t * t + one);
        const BigFloat s = t * c;
        const BigFloat tau = s / (one + c);

        const BigFloat app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = zero;
        at(q, p) = zero;
        for (int i = 0; i < m; ++i) {
          if (i == p || i == q) continue;
          const BigFloat aip = at(i, p), aiq = at(i, q);
          at(i, p) = aip - s * (aiq + tau * aip);
          at(p, i) = at(i, p);
          at(i, q) = aiq + s * (aip - tau * aiq);
          at(q, i) = at(i, q);
        }
      }
    }
  }
  std::vector<BigFloat> eig;
  eig.reserve(m);
  for (int i = 0; i < m; ++i) eig.push_back(at(i, i));
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<BigFloat> solve_linear(BigMatrix a, std::vector<BigFloat> b) {
  const int m = static_cast<int>(b.size());
  if (static_cast<int>(a.size()) != m * m) throw std::invalid_argument("matrix shape");
  auto at = [&](int i, int j) -> BigFloat& { return a[i * m + j]; };
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    BigFloat best = abs(at(col, col));
    for (int r = col + 1; r < m; ++r) {
      BigFloat cand = abs(at(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best.is_zero()) throw std::runtime_error("singular linear system");
    if (pivot != col) {
      for (int j = 0; j < m; ++j) std::swap(at(col, j), at(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    for (int r = col + 1; r < m; ++r) {
      if (at(r, col).is_zero()) continue;
      const BigFloat factor = at(r, col) / at(col, col);
      at(r, col) = BigFloat(0.0);
      for (int j = col + 1; j < m; ++j) at(r, j) -= factor * at(col, j);
      b[r] -= factor * b[col];
    }
  }
  std::vector<BigFloat> x(m, BigFloat(0.0));
  for (int i = m - 1; i >= 0; --i) {
    BigFloat acc = b[i];
    for (int j = i + 1; j < m; ++j) acc -= at(i, j) * x[j];
    x[i] = acc / at(i, i);
  }
  return x;
}

}  // namespace cising
