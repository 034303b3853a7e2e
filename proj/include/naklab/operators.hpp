#pragma once

// Explicit operator families on the two Fock spaces and the classes they
// produce from the unit.

#include "naklab/fock.hpp"

#include <memory>

namespace naklab {

struct OperatorOptions {
  /// Re-admit the empty partition in the |λ| = 0 sums.
  bool include_empty_partition = false;
  /// Negative control: flips the sign of the leading-sum terms of 𝔊̃ₖ whose
  /// partition has more creation than annihilation parts.
  bool mutate_sign = false;
};

/// 𝔊₁(α) = −1/6 :a³:₀(τ₃α) − Σ_{n>0} (n−1)/2 a_{−n}a_n(τ₂(Kα)).
OperatorExpr lehn_g1(const AlgebraPtr& alg, const AlgebraElement& alpha);

/// 𝔡 = 𝔊₁(1).
OperatorExpr boundary_operator(const AlgebraPtr& alg);

/// −1/6 :a³:₀(τ₃ 1): the derivation behind the curly tower on either side.
OperatorExpr curly_boundary(const AlgebraPtr& alg);

/// 𝔒ₖ(α), orbifold side.
OperatorExpr ok_operator(const AlgebraPtr& alg, int k, const AlgebraElement& alpha, const OperatorOptions& opts = {});

/// 𝔊̃ₖ(α), Hilbert side.
OperatorExpr gtilde_operator(const AlgebraPtr& alg, int k, const AlgebraElement& alpha,
                             const OperatorOptions& opts = {});

/// Closed form of the curly tower a^{k}_m(α) (p^{k}_m(α) on the orbifold side).
OperatorExpr curly_closed_form(const AlgebraPtr& alg, CentralSign sign, int m, const AlgebraElement& alpha, int k);

/// f^{(k)} v with f^{(0)} = base and f^{(j)} = [d, f^{(j−1)}].
FockVector derivative_tower(const FockSpace& space, const OperatorExpr& d, const OperatorExpr& base, int k,
                            const FockVector& v);

/// 1_{−m} = a_{−1}(1)^m/m!; zero vector for m < 0.
FockVector unit_power(const FockSpace& space, int m);

/// Oₖ(α, n), built from its closed double sum (orbifold side).
FockVector ok_class(const FockSpace& space, int k, const AlgebraElement& alpha, int n);

/// G̃ₖ(α, n), built from its closed double sum (Hilbert side).
FockVector gtilde_class(const FockSpace& space, int k, const AlgebraElement& alpha, int n);

}  // namespace naklab
