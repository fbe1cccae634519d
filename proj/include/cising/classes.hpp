#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cising/affine.hpp"
#include "cising/graph.hpp"
#include "cising/spin.hpp"

namespace cising {

/// Equivalence class C(p1, p2, a) of configurations on G(2,n): p1 / p2 plus
/// spins per cluster, a plus-plus cross-edges.
struct ClassState {
  int p1 = 0;
  int p2 = 0;
  int a = 0;

  auto operator<=>(const ClassState&) const = default;
  std::string str() const;
};

bool class_valid(const ClassState& c, int n);
void require_class_valid(const ClassState& c, int n);

/// One of the eight single-flip move types acting on class coordinates.
struct Move {
  int cluster = 0;       // 0 or 1
  bool up = false;       // minus -> plus
  bool changes_a = false;

  ClassState apply(const ClassState& c) const;
  std::string str() const;
};

inline constexpr int kMoveCount = 8;
/// Deterministic move order: cluster-major, up before down, a-change first.
const std::array<Move, kMoveCount>& all_moves();
int move_index(const Move& m);

/// Number of vertices realizing the move from a configuration in class c.
int move_multiplicity(const ClassState& c, int n, const Move& m);
std::array<int, kMoveCount> flip_multiplicities(const ClassState& c, int n);

std::vector<ClassState> enumerate_classes(int n);

AffineEnergy class_energy_affine(const ClassState& c, int n);
double class_energy(const ClassState& c, const Params& params);
Rational class_energy_exact(const ClassState& c, const Params& params);

ClassState classify(const ClusteredGraph& g, const SpinConfig& sigma);

/// Energy difference of the move; throws if the move has zero multiplicity.
AffineEnergy class_flip_delta_affine(const ClassState& c, int n, const Move& m);
double class_flip_delta(const ClassState& c, const Params& params, const Move& m);

/// |C(p1,p2,a)| = C(n,p1) * C(p1,a) * C(n-p1,p2-a). Exact up to n = 31.
std::uint64_t class_size(const ClassState& c, int n);
double log_class_size(const ClassState& c, int n);

/// A concrete representative: first p1 vertices of cluster 1 plus, the twins
/// of the first a of them plus, remaining pluses of cluster 2 on twins of
/// minus vertices.
SpinConfig representative(const ClassState& c, int n);

enum class NamedState { Plus, Minus, PlusMinus, MinusPlus };

ClassState named_class(NamedState s, int n);
const char* named_state_label(NamedState s);
std::optional<NamedState> parse_named_state(std::string_view text);

}  // namespace cising
