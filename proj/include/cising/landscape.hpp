#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cising/classes.hpp"

namespace cising {

/// Parameter regimes with distinct landscape structure. Boundaries are
/// resolved by exact comparison on the rational inputs.
enum class Regime {
  H0EpsPos,          // h = 0, epsilon > 0
  H0EpsZero,         // h = 0, epsilon = 0
  H0EpsNeg,          // h = 0, epsilon < 0
  HPosEpsNonneg,     // h > 0, 0 <= epsilon
  HPosEpsNegWeak,    // 0 < -epsilon < h
  HPosEpsNegEq,      // h = -epsilon > 0
  HPosEpsNegStrong,  // 0 < h < -epsilon
};

Regime classify_regime(const Params& params);
const char* regime_name(Regime r);

// Closed-form barrier values. Two of them circulate in conflicting variants:
// at h=0 the tunneling barrier appears with both signs on the |eps| term, and
// for 0<h<-eps the stated value prices the crossing through -1 while the
// cheaper route runs through +1 (2nh lower). Brute force certifies the
// +|eps| form and the through-plus form (see verify / acceptance output).
Rational gamma_s_h0(int n, const Rational& eps);              // +|eps| form, verified
Rational gamma_s_h0_variant(int n, const Rational& eps);      // -|eps| misprint
Rational gamma_m_h0(int n, const Rational& eps);
Rational gamma_1m(int n, const Rational& eps, const Rational& h);
Rational gamma_2m(int n, const Rational& eps, const Rational& h);
Rational gamma_s_strong_left(int n, const Rational& eps, const Rational& h);  // via -1
Rational gamma_s_strong(int n, const Rational& eps, const Rational& h);       // via +1, verified
Rational gamma_m_strong(int n, const Rational& eps, const Rational& h);

struct GammaCandidate {
  std::string source;
  Rational value;
};

struct GammaInfo {
  std::optional<Rational> gamma_s;
  std::optional<Rational> gamma_m;
  std::string gamma_s_source;
  std::string gamma_m_source;
  std::vector<GammaCandidate> gamma_s_candidates;  // nonempty when prints conflict
  std::string note;
};

GammaInfo gamma_values(const Params& params);

struct StateSets {
  std::vector<NamedState> stable;
  std::vector<NamedState> metastable;
  Rational min_energy;
};

StateSets identify_states(const Params& params);

std::vector<int> critical_slices(const Params& params);

struct GateInfo {
  std::optional<std::vector<ClassState>> gate;  // as printed in the source
  std::string source;
  std::string note;
  /// For the 0 < h < -epsilon regime: the crossing classes consistent with
  /// the measured barrier (the printed set fails verification there).
  std::optional<std::vector<ClassState>> observed_gate;
};

GateInfo gate_set(const Params& params);

enum class PathKind { Bar, Hat, Check, Tilde };

const char* path_kind_name(PathKind k);
std::vector<PathKind> valid_path_kinds(Regime r);

struct ReferencePath {
  PathKind kind;
  std::vector<ClassState> states;
  std::vector<Rational> energies;
  Rational max_energy;
  std::vector<int> argmax;
};

ReferencePath reference_path(const Params& params, PathKind kind);
/// The closed-form value of the path maximum for the matching branch.
Rational reference_path_max_formula(const Params& params, PathKind kind);

struct ManifoldMinimum {
  Rational value;
  std::vector<ClassState> argmin;
};

/// Minimum of H over all configurations with exactly p plus spins.
ManifoldMinimum manifold_minimum(int p, const Params& params);

struct LandscapeReport {
  Params params;
  Regime regime;
  StateSets states;
  GammaInfo gammas;
  std::vector<int> slices;
  GateInfo gate;
  std::vector<ReferencePath> paths;
  std::vector<std::string> discrepancies;

  nlohmann::json to_json() const;
  void render(std::ostream& os) const;
};

LandscapeReport analyze(const Params& params);

}  // namespace cising
