#include "cising/classes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cising {

std::string ClassState::str() const {
  return "(" + std::to_string(p1) + "," + std::to_string(p2) + "," + std::to_string(a) + ")";
}

bool class_valid(const ClassState& c, int n) {
  if (c.p1 < 0 || c.p1 > n || c.p2 < 0 || c.p2 > n) return false;
  return c.a >= std::max(0, c.p1 + c.p2 - n) && c.a <= std::min(c.p1, c.p2);
}

void require_class_valid(const ClassState& c, int n) {
  if (!class_valid(c, n)) {
    throw std::invalid_argument("invalid class " + c.str() + " for n=" + std::to_string(n));
  }
}

ClassState Move::apply(const ClassState& c) const {
  ClassState out = c;
  const int d = up ? 1 : -1;
  (cluster == 0 ? out.p1 : out.p2) += d;
  if (changes_a) out.a += d;
  return out;
}

std::string Move::str() const {
  std::string s = up ? "up" : "down";
  s += cluster == 0 ? "/cluster1" : "/cluster2";
  s += changes_a ? (up ? "/a+1" : "/a-1") : "/a=";
  return s;
}

const std::array<Move, kMoveCount>& all_moves() {
  static const std::array<Move, kMoveCount> moves = {{
      {0, true, true},
      {0, true, false},
      {0, false, true},
      {0, false, false},
      {1, true, true},
      {1, true, false},
      {1, false, true},
      {1, false, false},
  }};
  return moves;
}

int move_index(const Move& m) {
  return m.cluster * 4 + (m.up ? 0 : 2) + (m.changes_a ? 0 : 1);
}

int move_multiplicity(const ClassState& c, int n, const Move& m) {
  // Counts per vertex type in the moving cluster: the twin's spin decides
  // whether a changes.
  int p_own = m.cluster == 0 ? c.p1 : c.p2;
  int p_other = m.cluster == 0 ? c.p2 : c.p1;
  if (m.up) {
    return m.changes_a ? p_other - c.a : n - p_own - (p_other - c.a);
  }
  return m.changes_a ? c.a : p_own - c.a;
}

std::array<int, kMoveCount> flip_multiplicities(const ClassState& c, int n) {
  require_class_valid(c, n);
  std::array<int, kMoveCount> counts{};
  for (const Move& m : all_moves()) counts[move_index(m)] = move_multiplicity(c, n, m);
  return counts;
}

std::vector<ClassState> enumerate_classes(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  std::vector<ClassState> out;
  for (int p1 = 0; p1 <= n; ++p1) {
    for (int p2 = 0; p2 <= n; ++p2) {
      for (int a = std::max(0, p1 + p2 - n); a <= std::min(p1, p2); ++a) {
        out.push_back({p1, p2, a});
      }
    }
  }
  return out;
}

AffineEnergy class_energy_affine(const ClassState& c, int n) {
  require_class_valid(c, n);
  const long long p1 = c.p1, p2 = c.p2, a = c.a, nn = n;
  AffineEnergy e;
  e.base = nn - nn * nn + 2 * nn * (p1 + p2) - 2 * (p1 * p1 + p2 * p2);
  e.eps_coef = -(nn + 4 * a - 2 * (p1 + p2));
  e.h_coef = -2 * (p1 + p2 - nn);
  return e;
}

double class_energy(const ClassState& c, const Params& params) {
  return class_energy_affine(c, params.n).eval(params.epsilon.to_double(), params.h.to_double());
}

Rational class_energy_exact(const ClassState& c, const Params& params) {
  return class_energy_affine(c, params.n).eval(params.epsilon, params.h);
}

ClassState classify(const ClusteredGraph& g, const SpinConfig& sigma) {
  if (g.k != 2) throw std::invalid_argument("classify requires k = 2");
  if (sigma.size() != g.vertex_count()) {
    throw std::invalid_argument("configuration size does not match graph");
  }
  ClassState c;
  for (int i = 0; i < g.n; ++i) {
    const bool up1 = sigma.spin(i) > 0;
    const bool up2 = sigma.spin(g.n + i) > 0;
    c.p1 += up1;
    c.p2 += up2;
    c.a += up1 && up2;
  }
  return c;
}

AffineEnergy class_flip_delta_affine(const ClassState& c, int n, const Move& m) {
  require_class_valid(c, n);
  if (move_multiplicity(c, n, m) <= 0) {
    throw std::invalid_argument("move " + m.str() + " has zero multiplicity from " + c.str());
  }
  return class_energy_affine(m.apply(c), n) - class_energy_affine(c, n);
}

double class_flip_delta(const ClassState& c, const Params& params, const Move& m) {
  return class_flip_delta_affine(c, params.n, m)
      .eval(params.epsilon.to_double(), params.h.to_double());
}

namespace {

std::uint64_t binomial_u64(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;  // exact: product of i consecutive ints
  }
  return result;
}

}  // namespace

std::uint64_t class_size(const ClassState& c, int n) {
  require_class_valid(c, n);
  if (n > 31) throw std::domain_error("exact class sizes limited to n <= 31");
  return binomial_u64(n, c.p1) * binomial_u64(c.p1, c.a) * binomial_u64(n - c.p1, c.p2 - c.a);
}

double log_class_size(const ClassState& c, int n) {
  require_class_valid(c, n);
  auto lchoose = [](int m, int r) {
    return std::lgamma(m + 1.0) - std::lgamma(r + 1.0) - std::lgamma(m - r + 1.0);
  };
  return lchoose(n, c.p1) + lchoose(c.p1, c.a) + lchoose(n - c.p1, c.p2 - c.a);
}

SpinConfig representative(const ClassState& c, int n) {
  require_class_valid(c, n);
  SpinConfig sigma(2 * n);
  for (int i = 0; i < c.p1; ++i) sigma.set(i, 1);
  for (int i = 0; i < c.a; ++i) sigma.set(n + i, 1);
  for (int i = 0; i < c.p2 - c.a; ++i) sigma.set(n + c.p1 + i, 1);
  return sigma;
}

ClassState named_class(NamedState s, int n) {
  switch (s) {
    case NamedState::Plus: return {n, n, n};
    case NamedState::Minus: return {0, 0, 0};
    case NamedState::PlusMinus: return {n, 0, 0};
    case NamedState::MinusPlus: return {0, n, 0};
  }
  throw std::logic_error("unreachable");
}

const char* named_state_label(NamedState s) {
  switch (s) {
    case NamedState::Plus: return "+1";
    case NamedState::Minus: return "-1";
    case NamedState::PlusMinus: return "+-1";
    case NamedState::MinusPlus: return "-+1";
  }
  throw std::logic_error("unreachable");
}

std::optional<NamedState> parse_named_state(std::string_view text) {
  if (text == "+1" || text == "plus") return NamedState::Plus;
  if (text == "-1" || text == "minus") return NamedState::Minus;
  if (text == "+-1" || text == "+-" || text == "pm") return NamedState::PlusMinus;
  if (text == "-+1" || text == "-+" || text == "mp") return NamedState::MinusPlus;
  return std::nullopt;
}

}  // namespace cising
