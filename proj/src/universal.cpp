#include "naklab/universal.hpp"

#include "naklab/parallel.hpp"

#include <set>

namespace naklab {

std::string to_string(CanonicalPower eps) { return eps == CanonicalPower::K ? "K" : "K2"; }

namespace {

struct Unknown {
  CanonicalPower eps;
  GeneralizedPartition mu;
};

using Equation = std::pair<SparseVec, Scalar>;

}  // namespace

UniversalFit extract_universal_f(const std::vector<AlgebraPtr>& models, int k, CanonicalPower epsilon,
                                 const GeneralizedPartition& lambda, int max_level) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (lambda.empty() || lambda.size() == 0) throw std::invalid_argument("the fit needs |λ| != 0");
  const int m = lambda.size();

  UniversalFit fit;
  fit.k = k;
  fit.epsilon = epsilon;
  fit.lambda = lambda;
  for (const auto& alg : models) fit.models.push_back(alg->name());

  std::vector<Unknown> unknowns;
  for (CanonicalPower eps : {CanonicalPower::K, CanonicalPower::K2}) {
    const int len = k + 1 - static_cast<int>(eps) / 2;
    if (len < 1) continue;
    for (auto& mu : generalized_partitions(len, m, max_level)) unknowns.push_back({eps, std::move(mu)});
  }
  std::optional<std::size_t> target;
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (unknowns[u].eps == epsilon && unknowns[u].mu == lambda) target = u;
  fit.unknowns = unknowns.size();
  if (!target) {
    if (lambda.length() == k + 1 - static_cast<int>(epsilon) / 2)
      throw std::invalid_argument("λ has annihilation parts beyond max_level");
    fit.empty = true;
    return fit;
  }

  Matrix invariants;
  for (const auto& alg : models) {
    const auto& K = alg->canonical_class();
    invariants.push_back({alg->pair(K, K), alg->integrate(alg->euler_class())});
  }
  if (matrix_rank(invariants) < 2) {
    fit.status = SolveStatus::RankDeficient;
    return fit;
  }

  struct Task {
    std::size_t model;
    int alpha;
    NakajimaMonomial state;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < models.size(); ++s)
    for (int a = 0; a < static_cast<int>(models[s]->dim()); ++a)
      for (int level = 0; level <= max_level; ++level)
        for (auto& mono : FockSpace(models[s], CentralSign::Hilbert).basis(level)) tasks.push_back({s, a, mono});

  std::vector<OperatorExpr> boundaries;
  for (const auto& alg : models) boundaries.push_back(boundary_operator(alg));

  std::vector<std::vector<Equation>> rows(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto& task = tasks[t];
    const auto& alg = models[task.model];
    FockSpace space(alg, CentralSign::Hilbert);
    const FockVector v = FockVector::monomial(task.state);
    const AlgebraElement alpha = alg->basis_element(task.alpha);
    const OperatorExpr base = OperatorExpr::from(ModeTerm{Scalar(1), {m}, alg->coproduct(alpha, 1)});

    FockVector rest = derivative_tower(space, boundaries[task.model], base, k, v);
    rest -= space.apply(curly_closed_form(alg, CentralSign::Hilbert, m, alpha, k), v);

    const AlgebraElement k_alpha = alg->multiply(alg->canonical_class(), alpha);
    const AlgebraElement k2_alpha = alg->multiply(alg->canonical_class(), k_alpha);
    std::vector<FockVector> columns;
    std::set<NakajimaMonomial> support;
    for (const auto& [m2, c] : rest.terms()) support.insert(m2);
    for (const auto& u : unknowns) {
      const AlgebraElement& elt = u.eps == CanonicalPower::K ? k_alpha : k2_alpha;
      columns.push_back(space.apply(PartitionTerm{Scalar(1 / u.mu.multiplicity_factorial()), u.mu, elt}, v));
      for (const auto& [m2, c] : columns.back().terms()) support.insert(m2);
    }
    for (const auto& mono : support) {
      SparseVec coeffs;
      for (std::size_t u = 0; u < columns.size(); ++u) {
        Scalar c = columns[u].coefficient(mono);
        if (!c.is_zero()) coeffs[static_cast<int>(u)] = c;
      }
      rows[t].emplace_back(std::move(coeffs), rest.coefficient(mono));
    }
  });

  LinearSystem system(static_cast<int>(unknowns.size()));
  for (const auto& task_rows : rows)
    for (const auto& [coeffs, rhs] : task_rows) {
      system.add_equation(coeffs, rhs);
      ++fit.equations;
    }
  SolveResult result = system.solve();
  fit.status = result.status;
  fit.rank = result.rank;
  if (result.status == SolveStatus::Unique) {
    const Scalar& value = result.solution[*target];
    if (!value.is_real()) {
      fit.status = SolveStatus::Inconsistent;
    } else {
      fit.value = value.re();
    }
  }
  return fit;
}

}  // namespace naklab
