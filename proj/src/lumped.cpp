#include "cising/lumped.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cising {

int LumpedChain::index_of(const ClassState& c) const {
  if (!class_valid(c, n)) return -1;
  const int stride = n + 1;
  return index_[(c.p1 * stride + c.p2) * stride + c.a];
}

LumpedChain build_lumped_chain(int n, const Params& params, double beta) {
  params.validate();
  params.require_two_clusters();
  if (n != params.n) throw std::invalid_argument("n does not match params.n");
  if (n > 31) throw std::domain_error("lumped chain limited to n <= 31 (exact class sizes)");
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");

  LumpedChain chain;
  chain.n = n;
  chain.params = params;
  chain.params.beta = beta;
  chain.beta = beta;
  chain.classes = enumerate_classes(n);

  const int stride = n + 1;
  chain.index_.assign(stride * stride * stride, -1);
  for (int i = 0; i < chain.num_classes(); ++i) {
    const ClassState& c = chain.classes[i];
    chain.index_[(c.p1 * stride + c.p2) * stride + c.a] = i;
  }

  const double eps = params.epsilon.to_double();
  const double h = params.h.to_double();
  chain.affine_energy.reserve(chain.num_classes());
  for (const ClassState& c : chain.classes) {
    chain.affine_energy.push_back(class_energy_affine(c, n));
    chain.energy.push_back(chain.affine_energy.back().eval(eps, h));
    chain.sizes.push_back(class_size(c, n));
  }

  chain.rows.resize(chain.num_classes());
  chain.diagonal.resize(chain.num_classes());
  const double denom = 2.0 * n;
  for (int i = 0; i < chain.num_classes(); ++i) {
    const ClassState& c = chain.classes[i];
    double off_mass = 0.0;
    for (const Move& m : all_moves()) {
      const int mult = move_multiplicity(c, n, m);
      if (mult <= 0) continue;
      const ClassState target = m.apply(c);
      const int j = chain.index_of(target);
      const AffineEnergy diff = chain.affine_energy[j] - chain.affine_energy[i];
      const Rational delta = diff.eval(params.epsilon, params.h);
      double accept = 1.0;
      if (delta.sign() > 0) accept = std::exp(-beta * delta.to_double());
      const double prob = (mult / denom) * accept;
      chain.rows[i].push_back({j, prob, mult, delta});
      off_mass += prob;
    }
    chain.diagonal[i] = 1.0 - off_mass;
  }
  return chain;
}

std::vector<double> LumpedChain::stationary() const {
  // log w(c) = log |C(c)| - beta (H(c) - Hmin), normalized by logsumexp.
  std::vector<double> logw(num_classes());
  const double hmin = *std::min_element(energy.begin(), energy.end());
  for (int i = 0; i < num_classes(); ++i) {
    logw[i] = std::log(static_cast<double>(sizes[i])) - beta * (energy[i] - hmin);
  }
  const double m = *std::max_element(logw.begin(), logw.end());
  double total = 0.0;
  for (double& w : logw) {
    w = std::exp(w - m);
    total += w;
  }
  for (double& w : logw) w /= total;
  return logw;
}

double LumpedChain::max_row_sum_error() const {
  double worst = 0.0;
  for (int i = 0; i < num_classes(); ++i) {
    double sum = diagonal[i];
    for (const Entry& e : rows[i]) sum += e.prob;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double LumpedChain::max_detailed_balance_error() const {
  const std::vector<double> pi = stationary();
  double worst = 0.0;
  for (int i = 0; i < num_classes(); ++i) {
    for (const Entry& e : rows[i]) {
      double reverse = 0.0;
      for (const Entry& back : rows[e.to]) {
        if (back.to == i) {
          reverse = back.prob;
          break;
        }
      }
      worst = std::max(worst, std::abs(pi[i] * e.prob - pi[e.to] * reverse));
    }
  }
  return worst;
}

nlohmann::json LumpedChain::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["n"] = n;
  j["epsilon"] = params.epsilon.str();
  j["h"] = params.h.str();
  j["beta"] = beta;
  j["lumping"] = n <= 4
                     ? "exact by per-cluster permutation symmetry; certified "
                       "against the full chain at this size"
                     : "exact by per-cluster permutation symmetry; certified "
                       "against the full chain for n <= 4";
  nlohmann::json cls = nlohmann::json::array();
  for (int i = 0; i < num_classes(); ++i) {
    cls.push_back({{"p1", classes[i].p1},
                   {"p2", classes[i].p2},
                   {"a", classes[i].a},
                   {"size", sizes[i]},
                   {"energy", energy[i]}});
  }
  j["classes"] = cls;
  nlohmann::json triplets = nlohmann::json::array();
  for (int i = 0; i < num_classes(); ++i) {
    for (const Entry& e : rows[i]) {
      triplets.push_back({i, e.to, e.prob});
    }
    triplets.push_back({i, i, diagonal[i]});
  }
  j["transitions"] = triplets;
  return j;
}

}  // namespace cising
