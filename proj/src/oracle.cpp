#include "cising/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

namespace cising {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

StateGraph::StateGraph(int n, int n_max) : n_(n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (n_max > 6) n_max = 6;  // hard ceiling: 4^6 states
  if (n > n_max) {
    throw std::domain_error("instance too large for the oracle (n=" + std::to_string(n) +
                            ", limit " + std::to_string(n_max) + ")");
  }
  const std::uint64_t count = num_states();
  affine_.resize(count);

  // Energies per state, parallel over blocks; the class form gives the affine
  // coefficients directly.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<std::uint64_t>(hw, 8);
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      affine_[s] = class_energy_affine(class_of(s), n_);
    }
  };
  if (count < 1024 || workers == 1) {
    fill(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = w * chunk;
      pool.emplace_back(fill, b, std::min(count, b + chunk));
    }
    for (auto& t : pool) t.join();
  }
}

ClassState StateGraph::class_of(std::uint64_t state) const {
  const std::uint64_t mask = (std::uint64_t(1) << n_) - 1;
  const std::uint64_t c1 = state & mask;
  const std::uint64_t c2 = (state >> n_) & mask;
  return {static_cast<int>(__builtin_popcountll(c1)),
          static_cast<int>(__builtin_popcountll(c2)),
          static_cast<int>(__builtin_popcountll(c1 & c2))};
}

std::uint64_t StateGraph::named(NamedState s) const {
  const std::uint64_t ones = (std::uint64_t(1) << n_) - 1;
  switch (s) {
    case NamedState::Plus: return ones | (ones << n_);
    case NamedState::Minus: return 0;
    case NamedState::PlusMinus: return ones;
    case NamedState::MinusPlus: return ones << n_;
  }
  throw std::logic_error("unreachable");
}

EnergyLevels EnergyLevels::compute(const StateGraph& sg, const Params& params) {
  // Energies repeat per class; map classes once and spread to states.
  EnergyLevels out;
  std::map<Rational, int> level_index;
  std::vector<ClassState> classes = enumerate_classes(sg.n());
  for (const ClassState& c : classes) {
    level_index.emplace(class_energy_exact(c, params), 0);
  }
  int next = 0;
  for (auto& [value, idx] : level_index) {
    idx = next++;
    out.values.push_back(value);
  }
  out.level_of.resize(sg.num_states());
  out.states_at.resize(out.values.size());
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    const int lvl = level_index.at(sg.energy(s, params));
    out.level_of[s] = lvl;
    out.states_at[lvl].push_back(s);
  }
  return out;
}

Rational communication_height(const StateGraph& sg, const Params& params, std::uint64_t from,
                              std::uint64_t to) {
  if (from == to) return sg.energy(from, params);
  const EnergyLevels levels = EnergyLevels::compute(sg, params);
  UnionFind uf(sg.num_states());
  std::vector<bool> inserted(sg.num_states(), false);
  for (size_t lvl = 0; lvl < levels.values.size(); ++lvl) {
    for (std::uint64_t s : levels.states_at[lvl]) {
      inserted[s] = true;
      for (int v = 0; v < sg.num_vertices(); ++v) {
        const std::uint64_t t = sg.neighbor(s, v);
        if (inserted[t]) uf.merge(s, t);
      }
    }
    if (inserted[from] && inserted[to] && uf.find(from) == uf.find(to)) {
      return levels.values[lvl];
    }
  }
  throw std::logic_error("state space is connected; unreachable");
}

StabilityTable stability_levels(const StateGraph& sg, const Params& params) {
  StabilityTable table;
  table.levels = EnergyLevels::compute(sg, params);
  table.min_energy = table.levels.values.front();
  table.global_minima = table.levels.states_at.front();
  table.V.assign(sg.num_states(), std::nullopt);

  // Kruskal sweep: resolve V for a state the first time its component holds a
  // strictly lower state. comp_min tracks the lowest level per component.
  UnionFind uf(sg.num_states());
  std::vector<bool> inserted(sg.num_states(), false);
  std::vector<int> comp_min(sg.num_states(), -1);
  std::vector<std::uint64_t> unresolved;
  for (size_t lvl = 0; lvl < table.levels.values.size(); ++lvl) {
    for (std::uint64_t s : table.levels.states_at[lvl]) {
      inserted[s] = true;
      comp_min[s] = static_cast<int>(lvl);
      for (int v = 0; v < sg.num_vertices(); ++v) {
        const std::uint64_t t = sg.neighbor(s, v);
        if (!inserted[t]) continue;
        const int ra = uf.find(s), rb = uf.find(t);
        if (ra == rb) continue;
        const int merged_min = std::min(comp_min[ra], comp_min[rb]);
        uf.merge(ra, rb);
        comp_min[uf.find(rb)] = merged_min;
      }
      if (lvl > 0) unresolved.push_back(s);
    }
    std::vector<std::uint64_t> still;
    still.reserve(unresolved.size());
    for (std::uint64_t s : unresolved) {
      if (comp_min[uf.find(s)] < table.levels.level_of[s]) {
        table.V[s] = table.levels.values[lvl] - table.levels.values[table.levels.level_of[s]];
      } else {
        still.push_back(s);
      }
    }
    unresolved.swap(still);
  }
  return table;
}

Rational StabilityTable::max_finite_V() const {
  Rational best(0);
  for (const auto& v : V) {
    if (v && *v > best) best = *v;
  }
  return best;
}

std::vector<std::uint64_t> StabilityTable::metastable_states() const {
  const Rational best = max_finite_V();
  if (best == Rational(0)) return {};
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < V.size(); ++s) {
    if (V[s] && *V[s] == best) out.push_back(s);
  }
  return out;
}

namespace {

/// Union-find over the sublevel set {H <= phi}, optionally with the
/// configurations of some classes removed.
struct Sublevel {
  std::vector<bool> in;
  UnionFind uf;

  Sublevel(const StateGraph& sg, const EnergyLevels& levels, int max_level,
           const std::set<ClassState>& removed)
      : in(sg.num_states(), false), uf(sg.num_states()) {
    for (int lvl = 0; lvl <= max_level; ++lvl) {
      for (std::uint64_t s : levels.states_at[lvl]) {
        if (!removed.empty() && removed.count(sg.class_of(s))) continue;
        in[s] = true;
      }
    }
    for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
      if (!in[s]) continue;
      for (int v = 0; v < sg.num_vertices(); ++v) {
        const std::uint64_t t = sg.neighbor(s, v);
        if (t < s && in[t]) uf.merge(s, t);
      }
    }
  }

  bool connected(std::uint64_t a, std::uint64_t b) {
    return in[a] && in[b] && uf.find(a) == uf.find(b);
  }
};

int phi_level(const EnergyLevels& levels, const Rational& phi) {
  const auto it = std::lower_bound(levels.values.begin(), levels.values.end(), phi);
  return static_cast<int>(it - levels.values.begin());
}

std::vector<ClassState> bfs_path_classes(const StateGraph& sg, const EnergyLevels& levels,
                                         int max_level, const std::set<ClassState>& removed,
                                         std::uint64_t from, std::uint64_t to) {
  std::vector<int> prev(sg.num_states(), -2);
  std::vector<bool> in(sg.num_states(), false);
  for (int lvl = 0; lvl <= max_level; ++lvl) {
    for (std::uint64_t s : levels.states_at[lvl]) {
      if (!removed.empty() && removed.count(sg.class_of(s))) continue;
      in[s] = true;
    }
  }
  if (!in[from] || !in[to]) return {};
  std::queue<std::uint64_t> queue;
  queue.push(from);
  prev[from] = -1;
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop();
    if (s == to) break;
    for (int v = 0; v < sg.num_vertices(); ++v) {
      const std::uint64_t t = sg.neighbor(s, v);
      if (in[t] && prev[t] == -2) {
        prev[t] = static_cast<int>(s);
        queue.push(t);
      }
    }
  }
  if (prev[to] == -2) return {};
  std::vector<ClassState> path;
  for (std::int64_t s = to; s != -1; s = prev[s]) path.push_back(sg.class_of(s));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SaddleSet minimal_saddles(const StateGraph& sg, const Params& params, std::uint64_t from,
                          std::uint64_t to) {
  SaddleSet out;
  out.phi = communication_height(sg, params, from, to);
  const EnergyLevels levels = EnergyLevels::compute(sg, params);
  const int lvl = phi_level(levels, out.phi);
  Sublevel sub(sg, levels, lvl, {});
  // A state at energy Phi inside the component of `from` lies on an optimal
  // path (route from -> state -> to stays below Phi elsewhere).
  for (std::uint64_t s : levels.states_at[lvl]) {
    if (sub.connected(from, s)) out.states.push_back(s);
  }
  return out;
}

std::vector<ClassState> SaddleSet::classes(const StateGraph& sg) const {
  std::set<ClassState> seen;
  for (std::uint64_t s : states) seen.insert(sg.class_of(s));
  return {seen.begin(), seen.end()};
}

GateVerdict verify_gate(const StateGraph& sg, const Params& params, std::uint64_t from,
                        std::uint64_t to, const std::vector<ClassState>& gate_classes) {
  GateVerdict verdict;
  const SaddleSet saddles = minimal_saddles(sg, params, from, to);
  verdict.phi = saddles.phi;
  const EnergyLevels levels = EnergyLevels::compute(sg, params);
  const int lvl = phi_level(levels, verdict.phi);

  const std::set<ClassState> removed(gate_classes.begin(), gate_classes.end());
  std::set<ClassState> saddle_classes;
  for (std::uint64_t s : saddles.states) saddle_classes.insert(sg.class_of(s));
  verdict.subset_of_saddles =
      std::all_of(gate_classes.begin(), gate_classes.end(),
                  [&](const ClassState& c) { return saddle_classes.count(c) > 0; });

  Sublevel cut(sg, levels, lvl, removed);
  verdict.disconnects = !cut.connected(from, to);
  verdict.is_gate = verdict.subset_of_saddles && verdict.disconnects;

  if (!verdict.disconnects) {
    verdict.witness = bfs_path_classes(sg, levels, lvl, removed, from, to);
  }
  if (verdict.is_gate && gate_classes.size() > 1) {
    verdict.minimal = true;
    for (size_t drop = 0; drop < gate_classes.size(); ++drop) {
      std::set<ClassState> smaller = removed;
      smaller.erase(gate_classes[drop]);
      Sublevel weaker(sg, levels, lvl, smaller);
      if (!weaker.connected(from, to)) {
        verdict.minimal = false;  // dropping one class still blocks every path
        break;
      }
    }
  } else if (verdict.is_gate) {
    verdict.minimal = true;
  }
  return verdict;
}

std::optional<Move> descent_move(const ClassState& c, const Params& params) {
  const int n = params.n;
  require_class_valid(c, n);
  auto strictly_down = [&](const Move& m) -> bool {
    if (move_multiplicity(c, n, m) <= 0) return false;
    return class_flip_delta_affine(c, n, m).eval(params.epsilon, params.h).sign() < 0;
  };
  // Case ladder from the reducibility proof, then a full sweep for the
  // boundary ties the ladder misses (|eps| = 1 style degeneracies).
  std::vector<Move> ladder;
  const int lower = std::max(0, c.p1 + c.p2 - n);
  if (c.p1 == n) {
    ladder.push_back({1, true, true});    // C(n,p2,p2): grow agreeing pluses
    ladder.push_back({1, false, true});
  } else if (c.p2 == n) {
    ladder.push_back({0, true, true});
    ladder.push_back({0, false, true});
  } else if (c.a > lower) {
    ladder.push_back({0, true, false});
    if (c.p1 > c.p2) {
      ladder.push_back({0, false, false});
    } else {
      ladder.push_back({0, false, true});
    }
    ladder.push_back({1, true, false});
  } else {
    ladder.push_back({0, true, true});
    ladder.push_back({1, true, true});
    ladder.push_back({0, false, false});
    ladder.push_back({1, false, false});
  }
  for (const Move& m : ladder) {
    if (strictly_down(m)) return m;
  }
  for (const Move& m : all_moves()) {
    if (strictly_down(m)) return m;
  }
  return std::nullopt;
}

std::optional<int> descent_vertex(const ClusteredGraph& g, const SpinConfig& sigma,
                                  const Params& params) {
  const ClassState c = classify(g, sigma);
  const auto move = descent_move(c, params);
  if (!move) return std::nullopt;
  for (int i = 0; i < g.n; ++i) {
    const int v = move->cluster == 0 ? i : g.n + i;
    const int twin = move->cluster == 0 ? g.n + i : i;
    if (sigma.spin(v) == (move->up ? -1 : 1) &&
        (sigma.spin(twin) > 0) == move->changes_a) {
      return v;
    }
  }
  throw std::logic_error("move with positive multiplicity has a realizing vertex");
}

Eigen::MatrixXd full_transition_matrix(const Params& params, double beta) {
  params.validate();
  params.require_two_clusters();
  if (params.n > 4) throw std::domain_error("full transition matrix limited to n <= 4");
  StateGraph sg(params.n, 4);
  const auto count = static_cast<Eigen::Index>(sg.num_states());
  const double q = 1.0 / sg.num_vertices();
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(count, count);
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    double off = 0.0;
    for (int v = 0; v < sg.num_vertices(); ++v) {
      const std::uint64_t t = sg.neighbor(s, v);
      const Rational delta =
          (sg.affine(t) - sg.affine(s)).eval(params.epsilon, params.h);
      double accept = 1.0;
      if (delta.sign() > 0) accept = std::exp(-beta * delta.to_double());
      P(s, t) = q * accept;
      off += P(s, t);
    }
    P(s, s) = 1.0 - off;
  }
  return P;
}

ProjectionCheck projection_check(const StateGraph& sg, const Eigen::MatrixXd& full,
                                 const LumpedChain& chain) {
  ProjectionCheck check;
  const int m = chain.num_classes();
  // row sums of the full matrix into each class, per origin state
  std::vector<int> class_of(sg.num_states());
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    class_of[s] = chain.index_of(sg.class_of(s));
  }
  std::vector<std::vector<double>> lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    lo[i].assign(m, 2.0);   // sentinel: no state of class i seen yet
    hi[i].assign(m, -1.0);
  }
  std::vector<double> row(m);
  for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
    std::fill(row.begin(), row.end(), 0.0);
    row[class_of[s]] += full(s, s);
    for (int v = 0; v < sg.num_vertices(); ++v) {
      const std::uint64_t t = sg.neighbor(s, v);
      row[class_of[t]] += full(s, t);
    }
    const int ci = class_of[s];
    for (int j = 0; j < m; ++j) {
      lo[ci][j] = std::min(lo[ci][j], row[j]);
      hi[ci][j] = std::max(hi[ci][j], row[j]);
    }
  }
  for (int i = 0; i < m; ++i) {
    std::vector<double> lumped(m, 0.0);
    lumped[i] = chain.diagonal[i];
    for (const LumpedChain::Entry& e : chain.rows[i]) lumped[e.to] += e.prob;
    for (int j = 0; j < m; ++j) {
      double low = lo[i][j], high = hi[i][j];
      if (high < low) low = high = 0.0;  // class pair never touched
      check.max_within_class_spread =
          std::max(check.max_within_class_spread, high - low);
      check.max_entry_diff = std::max(check.max_entry_diff, std::abs(high - lumped[j]));
      check.max_entry_diff = std::max(check.max_entry_diff, std::abs(low - lumped[j]));
    }
  }
  return check;
}

}  // namespace cising
