#pragma once

// Fitting the model-independent coefficients f_{|ε|}(λ) of the round
// derivative tower a^{(k)}_m(α) from exact evaluations on several surfaces.

#include "naklab/operators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace naklab {

enum class CanonicalPower { K = 2, K2 = 4 };

std::string to_string(CanonicalPower eps);

struct UniversalFit {
  int k = 0;
  CanonicalPower epsilon = CanonicalPower::K;
  GeneralizedPartition lambda;
  /// λ is outside the index set ℓ(λ) = k + 1 − |ε|/2.
  bool empty = false;
  SolveStatus status = SolveStatus::Unique;
  std::optional<Rational> value;
  std::vector<std::string> models;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
};

/// Solves for every f_ε(μ) with |μ| = |λ| jointly (μ restricted to positive
/// part sums ≤ max_level) over all basis classes α and all basis states of
/// level ≤ max_level of every model, and reports the entry for (ε, λ).
/// Fewer than two models with independent (<K,K>, deg e) give RankDeficient.
UniversalFit extract_universal_f(const std::vector<AlgebraPtr>& models, int k, CanonicalPower epsilon,
                                 const GeneralizedPartition& lambda, int max_level = 1);

}  // namespace naklab
