#include "cising/spin.hpp"

#include <stdexcept>

namespace cising {

void SpinConfig::check_vertex(int v) const {
  if (v < 0 || v >= size_) throw std::out_of_range("vertex id out of range");
}

SpinConfig SpinConfig::all_plus(int size) {
  SpinConfig s(size);
  for (int v = 0; v < size; ++v) s.set(v, 1);
  return s;
}

SpinConfig SpinConfig::from_spins(const std::vector<int>& spins) {
  SpinConfig s(static_cast<int>(spins.size()));
  for (int v = 0; v < s.size_; ++v) {
    if (spins[v] != 1 && spins[v] != -1) {
      throw std::invalid_argument("spins must be +1 or -1");
    }
    s.set(v, spins[v]);
  }
  return s;
}

SpinConfig SpinConfig::from_bits(int size, std::uint64_t bits) {
  if (size < 0 || size > 64) throw std::invalid_argument("from_bits needs size <= 64");
  SpinConfig s(size);
  if (size > 0) s.words_[0] = size == 64 ? bits : (bits & ((std::uint64_t(1) << size) - 1));
  return s;
}

void SpinConfig::set(int v, int spin_value) {
  check_vertex(v);
  if (spin_value == 1) {
    words_[v >> 6] |= std::uint64_t(1) << (v & 63);
  } else if (spin_value == -1) {
    words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  } else {
    throw std::invalid_argument("spins must be +1 or -1");
  }
}

SpinConfig SpinConfig::flipped(int v) const {
  check_vertex(v);
  SpinConfig out = *this;
  out.words_[v >> 6] ^= std::uint64_t(1) << (v & 63);
  return out;
}

std::uint64_t SpinConfig::bits() const {
  if (size_ > 64) throw std::logic_error("bits() needs size <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<int> SpinConfig::spins() const {
  std::vector<int> out(size_);
  for (int v = 0; v < size_; ++v) out[v] = spin(v);
  return out;
}

AffineEnergy hamiltonian_affine(const ClusteredGraph& g, const SpinConfig& sigma) {
  if (sigma.size() != g.vertex_count()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  AffineEnergy e;
  for (const auto& [u, v] : g.internal_edges) e.base -= sigma.spin(u) * sigma.spin(v);
  for (const auto& [u, v] : g.cross_edges) e.eps_coef -= sigma.spin(u) * sigma.spin(v);
  for (int v = 0; v < sigma.size(); ++v) e.h_coef -= sigma.spin(v);
  return e;
}

double hamiltonian(const ClusteredGraph& g, const SpinConfig& sigma, const Params& params) {
  return hamiltonian_affine(g, sigma).eval(params.epsilon.to_double(), params.h.to_double());
}

Rational hamiltonian_exact(const ClusteredGraph& g, const SpinConfig& sigma, const Params& params) {
  return hamiltonian_affine(g, sigma).eval(params.epsilon, params.h);
}

AffineEnergy flip_delta_affine(const ClusteredGraph& g, const SpinConfig& sigma, int v) {
  if (sigma.size() != g.vertex_count()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  // Flipping v negates every edge term at v and the field term of v.
  const int sv = sigma.spin(v);
  AffineEnergy delta;
  const int cluster = g.cluster_of(v);
  for (int u : g.adjacency[v]) {
    long long term = 2LL * sv * sigma.spin(u);
    if (g.cluster_of(u) == cluster) {
      delta.base += term;
    } else {
      delta.eps_coef += term;
    }
  }
  delta.h_coef += 2LL * sv;
  return delta;
}

double flip_delta(const ClusteredGraph& g, const SpinConfig& sigma, int v, const Params& params) {
  return flip_delta_affine(g, sigma, v).eval(params.epsilon.to_double(), params.h.to_double());
}

}  // namespace cising
