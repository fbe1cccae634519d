#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "cising/classes.hpp"
#include "cising/lumped.hpp"
#include "cising/oracle.hpp"

using namespace cising;

namespace {

Params make(int n, const char* eps, const char* h, double beta = 1.0) {
  Params p;
  p.n = n;
  p.epsilon = Rational::parse(eps);
  p.h = Rational::parse(h);
  p.beta = beta;
  return p;
}

}  // namespace

TEST_SUITE("class-space") {

TEST_CASE("enumeration") {
  // 10 triples satisfy max{0, p1+p2-n} <= a <= min{p1, p2} at n=2; the
  // count is pinned by the 4^n partition identity below
  const auto classes = enumerate_classes(2);
  CHECK(classes.size() == 10);
  CHECK(std::is_sorted(classes.begin(), classes.end()));
  for (const ClassState& c : classes) CHECK(class_valid(c, 2));
  // p1 = p2 = 2 pins a = 2
  int count = 0;
  for (const ClassState& c : classes) {
    if (c.p1 == 2 && c.p2 == 2) {
      ++count;
      CHECK(c.a == 2);
    }
  }
  CHECK(count == 1);
}

TEST_CASE("class sizes partition the state space") {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const ClassState& c : enumerate_classes(n)) total += class_size(c, n);
    CHECK(total == (std::uint64_t(1) << (2 * n)));
  }
  CHECK(class_size({2, 2, 2}, 2) == 1);   // all-plus
  CHECK(class_size({1, 1, 1}, 2) == 2);
  SUBCASE("sizes match exhaustive enumeration for n <= 4") {
    for (int n : {2, 3, 4}) {
      StateGraph sg(n, 4);
      std::map<ClassState, std::uint64_t> counted;
      for (std::uint64_t s = 0; s < sg.num_states(); ++s) ++counted[sg.class_of(s)];
      for (const ClassState& c : enumerate_classes(n)) {
        CHECK(counted[c] == class_size(c, n));
      }
    }
  }
}

TEST_CASE("class energy closed form") {
  CHECK(class_energy_exact({4, 3, 3}, make(7, "1", "0")) == Rational(1));
  for (int n : {2, 5}) {
    const Params p = make(n, "0.3", "0.25");
    const Rational expect = Rational(-n * n + n) - p.epsilon * Rational(n) -
                            Rational(2) * p.h * Rational(n);
    CHECK(class_energy_exact({n, n, n}, p) == expect);
  }
  CHECK(class_energy_exact({3, 0, 0}, make(3, "0", "0")) == Rational(3 - 9));
  CHECK_THROWS_AS(class_energy_exact({3, 1, 2}, make(3, "0", "0")), std::invalid_argument);
}

TEST_CASE("class energy equals the hamiltonian on every configuration") {
  SUBCASE("exhaustive n <= 4, affine identity") {
    for (int n : {2, 3, 4}) {
      const Params p = make(n, "0", "0");
      const ClusteredGraph g = ClusteredGraph::build(p);
      for (std::uint64_t s = 0; s < (std::uint64_t(1) << (2 * n)); ++s) {
        const SpinConfig sigma = SpinConfig::from_bits(2 * n, s);
        CHECK(class_energy_affine(classify(g, sigma), n) == hamiltonian_affine(g, sigma));
      }
    }
  }
  SUBCASE("randomized n = 12") {
    const Params p = make(12, "-0.6", "0.5");
    const ClusteredGraph g = ClusteredGraph::build(p);
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 60; ++rep) {
      SpinConfig sigma(24);
      for (int v = 0; v < 24; ++v) sigma.set(v, rng() & 1 ? 1 : -1);
      CHECK(class_energy_affine(classify(g, sigma), 12) == hamiltonian_affine(g, sigma));
    }
  }
}

TEST_CASE("classify named configurations") {
  const Params p = make(5, "0", "0");
  const ClusteredGraph g = ClusteredGraph::build(p);
  CHECK(classify(g, SpinConfig::all_plus(10)) == ClassState{5, 5, 5});
  CHECK(classify(g, SpinConfig::all_minus(10)) == ClassState{0, 0, 0});
  Params p3 = p;
  p3.k = 3;
  const ClusteredGraph g3 = ClusteredGraph::build(p3);
  CHECK_THROWS_AS(classify(g3, SpinConfig::all_plus(15)), std::invalid_argument);
}

TEST_CASE("flip multiplicities") {
  SUBCASE("worked example on C(4,3,3), n=7") {
    const auto counts = flip_multiplicities({4, 3, 3}, 7);
    CHECK(counts[move_index({0, true, true})] == 0);
    CHECK(counts[move_index({0, true, false})] == 3);
    CHECK(counts[move_index({0, false, true})] == 3);
    CHECK(counts[move_index({0, false, false})] == 1);
    CHECK(counts[move_index({1, true, true})] == 1);
    CHECK(counts[move_index({1, true, false})] == 3);
    CHECK(counts[move_index({1, false, true})] == 3);
    CHECK(counts[move_index({1, false, false})] == 0);
  }
  SUBCASE("all-minus has only a-preserving up-flips") {
    const auto counts = flip_multiplicities({0, 0, 0}, 6);
    CHECK(counts[move_index({0, true, false})] == 6);
    CHECK(counts[move_index({1, true, false})] == 6);
    int others = 0;
    for (const Move& m : all_moves()) {
      if (!m.changes_a && m.up) continue;
      others += counts[move_index(m)];
    }
    CHECK(others == 0);
  }
  SUBCASE("counts match per-vertex classification, all classes n <= 5") {
    for (int n = 2; n <= 5; ++n) {
      const Params p = make(n, "0", "0");
      const ClusteredGraph g = ClusteredGraph::build(p);
      for (const ClassState& c : enumerate_classes(n)) {
        const SpinConfig sigma = representative(c, n);
        REQUIRE(classify(g, sigma) == c);
        std::array<int, kMoveCount> counted{};
        for (int v = 0; v < 2 * n; ++v) {
          Move m;
          m.cluster = v < n ? 0 : 1;
          m.up = sigma.spin(v) < 0;
          m.changes_a = sigma.spin(v < n ? v + n : v - n) > 0;
          ++counted[move_index(m)];
        }
        CHECK(counted == flip_multiplicities(c, n));
        int total = 0;
        for (int k : counted) total += k;
        CHECK(total == 2 * n);
      }
    }
  }
}

TEST_CASE("class flip deltas") {
  SUBCASE("closed-form value") {
    const Params p = make(3, "0.5", "0");
    CHECK(class_flip_delta_affine({1, 0, 0}, 3, {0, true, false}).eval(p.epsilon, p.h) ==
          Rational(1));
  }
  SUBCASE("up and down flips are consistent") {
    const int n = 5;
    const Params p = make(n, "-0.7", "0.25");
    for (const ClassState& c : enumerate_classes(n)) {
      for (const Move& m : all_moves()) {
        if (!m.up || move_multiplicity(c, n, m) <= 0) continue;
        const ClassState next = m.apply(c);
        const Move back{m.cluster, false, m.changes_a};
        REQUIRE(move_multiplicity(next, n, back) > 0);
        CHECK(class_flip_delta_affine(c, n, m) + class_flip_delta_affine(next, n, back) ==
              AffineEnergy{});
      }
    }
  }
  SUBCASE("a-increment costs 4 eps against a-preserving") {
    const int n = 6;
    for (const ClassState& c : enumerate_classes(n)) {
      const Move inc{0, true, true}, keep{0, true, false};
      if (move_multiplicity(c, n, inc) <= 0 || move_multiplicity(c, n, keep) <= 0) continue;
      const AffineEnergy diff =
          class_flip_delta_affine(c, n, inc) - class_flip_delta_affine(c, n, keep);
      CHECK(diff == AffineEnergy{0, -4, 0});
    }
  }
  SUBCASE("zero-multiplicity move is an error") {
    CHECK_THROWS_AS(class_flip_delta_affine({0, 0, 0}, 4, {0, false, false}),
                    std::invalid_argument);
  }
}

TEST_CASE("single flips move classes by exactly one move type") {
  for (int n : {2, 3, 4}) {
    const Params p = make(n, "0", "0");
    const ClusteredGraph g = ClusteredGraph::build(p);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << (2 * n)); ++s) {
      const SpinConfig sigma = SpinConfig::from_bits(2 * n, s);
      const ClassState c = classify(g, sigma);
      for (int v = 0; v < 2 * n; ++v) {
        const ClassState d = classify(g, sigma.flipped(v));
        bool matched = false;
        for (const Move& m : all_moves()) {
          if (move_multiplicity(c, n, m) > 0 && m.apply(c) == d) matched = true;
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("lumped chain invariants") {
  SUBCASE("row sums and detailed balance across a small grid") {
    for (int n : {2, 4, 6}) {
      for (const char* eps : {"-0.6", "0", "0.5"}) {
        for (double beta : {0.5, 2.0}) {
          const Params p = make(n, eps, "0.25", beta);
          const LumpedChain chain = build_lumped_chain(n, p, beta);
          CHECK(chain.max_row_sum_error() <= 1e-12);
          CHECK(chain.max_detailed_balance_error() <= 1e-10);
        }
      }
    }
  }
  SUBCASE("gibbs projection: class weights match the full chain, n <= 4") {
    for (int n : {2, 3, 4}) {
      const Params p = make(n, "0.3", "0.25", 1.5);
      const LumpedChain chain = build_lumped_chain(n, p, 1.5);
      StateGraph sg(n, 4);
      std::vector<double> full(chain.num_classes(), 0.0);
      double z = 0.0;
      for (std::uint64_t s = 0; s < sg.num_states(); ++s) {
        const double w = std::exp(-1.5 * sg.affine(s).eval(0.3, 0.25));
        full[chain.index_of(sg.class_of(s))] += w;
        z += w;
      }
      const auto pi = chain.stationary();
      for (int i = 0; i < chain.num_classes(); ++i) {
        CHECK(pi[i] == doctest::Approx(full[i] / z).epsilon(1e-10));
      }
    }
  }
  SUBCASE("chain JSON carries the class list and transitions") {
    const Params p = make(3, "0.5", "0", 1.0);
    const auto doc = build_lumped_chain(3, p, 1.0).to_json();
    CHECK(doc.at("classes").size() == enumerate_classes(3).size());
    CHECK(doc.contains("transitions"));
    CHECK(doc.contains("lumping"));
    CHECK(doc.at("schema_version") == 1);
  }
}

}  // TEST_SUITE
