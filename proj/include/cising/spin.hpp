#pragma once

#include <cstdint>
#include <vector>

#include "cising/affine.hpp"
#include "cising/graph.hpp"

namespace cising {

/// Spin assignment stored as a packed bit array (bit set = spin +1).
class SpinConfig {
 public:
  SpinConfig() = default;
  explicit SpinConfig(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static SpinConfig all_minus(int size) { return SpinConfig(size); }
  static SpinConfig all_plus(int size);
  static SpinConfig from_spins(const std::vector<int>& spins);
  /// Low bit -> vertex 0. Only for size <= 64 (oracle-scale instances).
  static SpinConfig from_bits(int size, std::uint64_t bits);

  int size() const { return size_; }
  int spin(int v) const {
    check_vertex(v);
    return (words_[v >> 6] >> (v & 63)) & 1 ? 1 : -1;
  }
  void set(int v, int spin_value);

  /// The configuration with the spin at v reversed, everything else equal.
  SpinConfig flipped(int v) const;

  std::uint64_t bits() const;
  std::vector<int> spins() const;

  friend bool operator==(const SpinConfig& a, const SpinConfig& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  void check_vertex(int v) const;

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

AffineEnergy hamiltonian_affine(const ClusteredGraph& g, const SpinConfig& sigma);
double hamiltonian(const ClusteredGraph& g, const SpinConfig& sigma, const Params& params);
Rational hamiltonian_exact(const ClusteredGraph& g, const SpinConfig& sigma, const Params& params);

/// H(sigma^(v)) - H(sigma), accumulated over the edges at v only.
AffineEnergy flip_delta_affine(const ClusteredGraph& g, const SpinConfig& sigma, int v);
double flip_delta(const ClusteredGraph& g, const SpinConfig& sigma, int v, const Params& params);

}  // namespace cising
