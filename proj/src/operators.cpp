#include "naklab/operators.hpp"

namespace naklab {

namespace {

Rational sign_power(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational int_power(int base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int creation_count(const GeneralizedPartition& lambda) {
  int c = 0;
  for (const auto& [p, r] : lambda.multiplicities())
    if (p < 0) c += r;
  return c;
}

}  // namespace

OperatorExpr lehn_g1(const AlgebraPtr& alg, const AlgebraElement& alpha) {
  OperatorExpr op = Scalar(fraction(-1, 6)) * cube_zero_mode(alg, alpha);
  const AlgebraElement k_alpha = alg->multiply(alg->canonical_class(), alpha);
  if (k_alpha.is_zero()) return op;
  auto family = std::make_shared<const TermFamily>([k_alpha](int level) {
    TermList terms;
    for (int n = 2; n <= level; ++n)
      terms.partitions.push_back(
          PartitionTerm{Scalar(fraction(-(n - 1), 2)), GeneralizedPartition({-n, n}), k_alpha});
    return terms;
  });
  op.add(family);
  return op;
}

OperatorExpr boundary_operator(const AlgebraPtr& alg) { return lehn_g1(alg, alg->unit()); }

OperatorExpr curly_boundary(const AlgebraPtr& alg) {
  return Scalar(fraction(-1, 6)) * cube_zero_mode(alg, alg->unit());
}

namespace {

// Σ_{ℓ=k+2,|λ|=0} lead(λ)/λ^! a_λ(τα) + Σ_{ℓ=k,|λ|=0} (s−2)/(24λ^!) a_λ(τ(eα)).
OperatorExpr zero_mode_family(const AlgebraPtr& alg, int k, const AlgebraElement& alpha, const OperatorOptions& opts,
                              bool hilbert) {
  const AlgebraElement e_alpha = alg->multiply(alg->euler_class(), alpha);
  auto family = std::make_shared<const TermFamily>([=](int level) {
    TermList terms;
    const Rational overall = hilbert ? Rational(1) : sign_power(k);
    for (auto& lambda : generalized_partitions(k + 2, 0, level)) {
      Rational c = overall / lambda.multiplicity_factorial();
      if (hilbert) {
        c = -c;
        if (opts.mutate_sign && 2 * creation_count(lambda) > lambda.length()) c = -c;
      }
      terms.partitions.push_back(PartitionTerm{Scalar(c), std::move(lambda), alpha});
    }
    if (!e_alpha.is_zero()) {
      for (auto& lambda : generalized_partitions(k, 0, level)) {
        if (lambda.empty() && !opts.include_empty_partition) continue;
        Rational c = overall * fraction(lambda.square_sum() - 2, 24) / lambda.multiplicity_factorial();
        if (c != 0) terms.partitions.push_back(PartitionTerm{Scalar(c), std::move(lambda), e_alpha});
      }
    }
    return terms;
  });
  return OperatorExpr::from(family);
}

}  // namespace

OperatorExpr ok_operator(const AlgebraPtr& alg, int k, const AlgebraElement& alpha, const OperatorOptions& opts) {
  return zero_mode_family(alg, k, alpha, opts, false);
}

OperatorExpr gtilde_operator(const AlgebraPtr& alg, int k, const AlgebraElement& alpha,
                             const OperatorOptions& opts) {
  return zero_mode_family(alg, k, alpha, opts, true);
}

OperatorExpr curly_closed_form(const AlgebraPtr& alg, CentralSign sign, int m, const AlgebraElement& alpha, int k) {
  if (m == 0) throw std::invalid_argument("curly_closed_form needs m != 0");
  if (k < 0) throw std::invalid_argument("curly_closed_form needs k >= 0");
  const bool hilbert = sign == CentralSign::Hilbert;
  const Rational scale = int_power(hilbert ? -m : m, k) * factorial(k);
  const Rational e_sign = hilbert ? Rational(-1) : Rational(1);
  const AlgebraElement e_alpha = alg->multiply(alg->euler_class(), alpha);
  auto family = std::make_shared<const TermFamily>([=](int level) {
    TermList terms;
    for (auto& lambda : generalized_partitions(k + 1, m, level))
      terms.partitions.push_back(PartitionTerm{Scalar(scale / lambda.multiplicity_factorial()), std::move(lambda), alpha});
    if (k >= 1 && !e_alpha.is_zero()) {
      for (auto& lambda : generalized_partitions(k - 1, m, level)) {
        Rational c = e_sign * scale * fraction(lambda.square_sum() - 1, 24) / lambda.multiplicity_factorial();
        if (c != 0) terms.partitions.push_back(PartitionTerm{Scalar(c), std::move(lambda), e_alpha});
      }
    }
    return terms;
  });
  return OperatorExpr::from(family);
}

FockVector derivative_tower(const FockSpace& space, const OperatorExpr& d, const OperatorExpr& base, int k,
                            const FockVector& v) {
  if (k == 0) return space.apply(base, v);
  FockVector left = space.apply(d, derivative_tower(space, d, base, k - 1, v));
  return left - derivative_tower(space, d, base, k - 1, space.apply(d, v));
}

FockVector unit_power(const FockSpace& space, int m) {
  if (m < 0) return {};
  return space.unit_class(m);
}

namespace {

// a_{−λ}(τ_*β)|0> for an ordinary partition λ.
FockVector creation_state(const GradedFrobeniusAlgebra& alg, const std::vector<int>& parts, const AlgebraElement& beta) {
  FockVector out;
  TensorElement tensor = alg.coproduct(beta, static_cast<int>(parts.size()));
  for (const auto& [idx, c] : tensor.terms()) {
    std::vector<Factor> f;
    for (std::size_t s = 0; s < parts.size(); ++s) f.push_back(Factor{parts[s], idx[s]});
    out.add(NakajimaMonomial(std::move(f)), c);
  }
  return out;
}

FockVector class_sum(const FockSpace& space, int k, const AlgebraElement& alpha, int n, bool hilbert) {
  const auto& alg = space.algebra();
  const AlgebraElement e_alpha = alg.multiply(alg.euler_class(), alpha);
  FockVector out;
  for (int j = 0; j <= k; ++j) {
    FockVector unit = unit_power(space, n - j - 1);
    if (unit.is_zero()) continue;
    const int size = j + 1;
    const Rational size_fact = factorial(size);
    for (const auto& parts : partitions_with_length(size, k - j + 1)) {
      std::vector<int> neg;
      for (int p : parts) neg.push_back(-p);
      GeneralizedPartition lambda(neg);
      Rational w = (hilbert ? sign_power(size - 1) : sign_power(k)) / (lambda.multiplicity_factorial() * size_fact);
      out += Scalar(w) * unit.concat(creation_state(alg, parts, alpha));
    }
    if (k - j - 1 < 1 || e_alpha.is_zero()) continue;
    for (const auto& parts : partitions_with_length(size, k - j - 1)) {
      std::vector<int> neg;
      for (int p : parts) neg.push_back(-p);
      GeneralizedPartition lambda(neg);
      Rational w = (hilbert ? sign_power(size) : sign_power(k)) * fraction(size + lambda.square_sum() - 2, 24) /
                   (lambda.multiplicity_factorial() * size_fact);
      if (w != 0) out += Scalar(w) * unit.concat(creation_state(alg, parts, e_alpha));
    }
  }
  return out;
}

}  // namespace

FockVector ok_class(const FockSpace& space, int k, const AlgebraElement& alpha, int n) {
  return class_sum(space, k, alpha, n, false);
}

FockVector gtilde_class(const FockSpace& space, int k, const AlgebraElement& alpha, int n) {
  return class_sum(space, k, alpha, n, true);
}

}  // namespace naklab
