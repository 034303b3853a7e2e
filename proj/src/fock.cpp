#include "naklab/fock.hpp"

#include <algorithm>
#include <mutex>

namespace naklab {

NakajimaMonomial::NakajimaMonomial(std::vector<Factor> factors) : f_(std::move(factors)) {
  for (const auto& f : f_)
    if (f.mode <= 0) throw std::invalid_argument("creation factors need a positive mode");
  std::sort(f_.begin(), f_.end());
}

int NakajimaMonomial::level() const {
  int l = 0;
  for (const auto& f : f_) l += f.mode;
  return l;
}

int NakajimaMonomial::age() const {
  int a = 0;
  for (const auto& f : f_) a += f.mode - 1;
  return a;
}

int NakajimaMonomial::degree(const GradedFrobeniusAlgebra& alg) const {
  int d = 0;
  for (const auto& f : f_) d += alg.degree(f.basis) + 2 * (f.mode - 1);
  return d;
}

void NakajimaMonomial::insert(Factor f) { f_.insert(std::upper_bound(f_.begin(), f_.end(), f), f); }

NakajimaMonomial NakajimaMonomial::without(std::size_t position) const {
  NakajimaMonomial m;
  m.f_.reserve(f_.size() - 1);
  for (std::size_t i = 0; i < f_.size(); ++i)
    if (i != position) m.f_.push_back(f_[i]);
  return m;
}

NakajimaMonomial monomial_concat(const NakajimaMonomial& a, const NakajimaMonomial& b) {
  std::vector<Factor> all = a.factors();
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  return NakajimaMonomial(std::move(all));
}

NakajimaMonomial monomial_divide(const NakajimaMonomial& a, const NakajimaMonomial& b) {
  std::vector<Factor> rest = a.factors();
  for (const auto& f : b.factors()) {
    auto it = std::find(rest.begin(), rest.end(), f);
    if (it == rest.end())
      throw NotASubmonomial("factor (" + std::to_string(-f.mode) + ", " + std::to_string(f.basis) +
                            ") is not present in the numerator");
    rest.erase(it);
  }
  return NakajimaMonomial(std::move(rest));
}

FockVector FockVector::vacuum() { return monomial(NakajimaMonomial{}); }

FockVector FockVector::monomial(NakajimaMonomial m, Scalar c) {
  FockVector v;
  v.add(m, c);
  return v;
}

Scalar FockVector::coefficient(const NakajimaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> FockVector::level() const {
  std::optional<int> l;
  for (const auto& [m, c] : terms_) {
    if (l && *l != m.level()) return std::nullopt;
    l = m.level();
  }
  return l;
}

std::optional<int> FockVector::degree(const GradedFrobeniusAlgebra& alg) const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int md = m.degree(alg);
    if (d && *d != md) return std::nullopt;
    d = md;
  }
  return d;
}

void FockVector::add(const NakajimaMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

FockVector FockVector::concat(const FockVector& o) const {
  FockVector r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add(monomial_concat(a, b), ca * cb);
  return r;
}

std::shared_ptr<const TermList> TermFamily::at_level(int level) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(level);
    if (it != cache_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = cache_.find(level);
  if (it != cache_.end()) return it->second;
  auto terms = std::make_shared<const TermList>(gen_(level));
  cache_.emplace(level, terms);
  return terms;
}

OperatorExpr OperatorExpr::identity(const Scalar& c) {
  TensorElement scalar(0);
  scalar.add({}, Scalar(1));
  return from(ModeTerm{c, {}, scalar});
}

OperatorExpr OperatorExpr::from(ModeTerm t) {
  OperatorExpr op;
  op.add(std::move(t));
  return op;
}

OperatorExpr OperatorExpr::from(PartitionTerm t) {
  OperatorExpr op;
  op.add(std::move(t));
  return op;
}

OperatorExpr OperatorExpr::from(std::shared_ptr<const TermFamily> family, const Scalar& scale) {
  OperatorExpr op;
  op.add(std::move(family), scale);
  return op;
}

void OperatorExpr::add(std::shared_ptr<const TermFamily> family, const Scalar& scale) {
  if (!scale.is_zero()) families_.emplace_back(std::move(family), scale);
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  fixed_.modes.insert(fixed_.modes.end(), o.fixed_.modes.begin(), o.fixed_.modes.end());
  fixed_.partitions.insert(fixed_.partitions.end(), o.fixed_.partitions.begin(), o.fixed_.partitions.end());
  families_.insert(families_.end(), o.families_.begin(), o.families_.end());
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const Scalar& s) {
  for (auto& t : fixed_.modes) t.coeff *= s;
  for (auto& t : fixed_.partitions) t.coeff *= s;
  for (auto& [f, scale] : families_) scale *= s;
  return *this;
}

TermList OperatorExpr::materialize(int level) const {
  TermList out = fixed_;
  for (const auto& [family, scale] : families_) {
    auto terms = family->at_level(level);
    for (auto t : terms->modes) {
      t.coeff *= scale;
      out.modes.push_back(std::move(t));
    }
    for (auto t : terms->partitions) {
      t.coeff *= scale;
      out.partitions.push_back(std::move(t));
    }
  }
  return out;
}

FockSpace::FockSpace(std::shared_ptr<const GradedFrobeniusAlgebra> alg, CentralSign sign)
    : alg_(std::move(alg)), sign_(sign) {}

namespace {

void enumerate_monomials(int remaining, Factor max_factor, int dim, std::vector<Factor>& cur,
                         std::vector<NakajimaMonomial>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  // Factors are generated in canonical (non-decreasing) order.
  for (int mode = std::min(remaining, max_factor.mode); mode >= 1; --mode) {
    int first_basis = (mode == max_factor.mode) ? max_factor.basis : 0;
    for (int b = first_basis; b < dim; ++b) {
      cur.push_back({mode, b});
      enumerate_monomials(remaining - mode, Factor{mode, b}, dim, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<NakajimaMonomial> FockSpace::basis(int level) const {
  std::vector<NakajimaMonomial> out;
  if (level < 0) return out;
  std::vector<Factor> cur;
  enumerate_monomials(level, Factor{std::max(level, 1), 0}, static_cast<int>(alg_->dim()), cur, out);
  const auto& alg = *alg_;
  std::stable_sort(out.begin(), out.end(), [&](const NakajimaMonomial& a, const NakajimaMonomial& b) {
    int da = a.degree(alg), db = b.degree(alg);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

FockVector FockSpace::unit_class(int n) const {
  std::vector<Factor> f(static_cast<std::size_t>(n), Factor{1, alg_->unit_index()});
  return FockVector::monomial(NakajimaMonomial(std::move(f)), Scalar(Rational(1) / factorial(n)));
}

FockVector FockSpace::apply_mode(int mode, int basis_index, const FockVector& v) const {
  if (mode == 0) throw std::invalid_argument("a_0 is not a Heisenberg generator");
  FockVector out;
  if (mode < 0) {
    for (const auto& [m, c] : v.terms()) {
      NakajimaMonomial next = m;
      next.insert(Factor{-mode, basis_index});
      out.add(next, c);
    }
    return out;
  }
  const Scalar central(central_value(sign_) * mode);
  for (const auto& [m, c] : v.terms()) {
    const auto& f = m.factors();
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j].mode != mode) continue;
      const Scalar& g = alg_->pairing(basis_index, f[j].basis);
      if (g.is_zero()) continue;
      out.add(m.without(j), c * central * g);
    }
  }
  return out;
}

FockVector FockSpace::apply_mode(int mode, const AlgebraElement& alpha, const FockVector& v) const {
  FockVector out;
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    if (alpha[i].is_zero()) continue;
    FockVector part = apply_mode(mode, static_cast<int>(i), v);
    part *= alpha[i];
    out += part;
  }
  return out;
}

FockVector FockSpace::apply_modes(const std::vector<int>& modes, const TensorElement& tensor,
                                  const FockVector& v) const {
  if (static_cast<int>(modes.size()) != tensor.arity())
    throw ArityMismatch("mode string of length " + std::to_string(modes.size()) + " with tensor of arity " +
                        std::to_string(tensor.arity()));
  for (int m : modes)
    if (m == 0) throw std::invalid_argument("a_0 is not a Heisenberg generator");
  FockVector out;
  for (const auto& [idx, coeff] : tensor.terms()) {
    FockVector cur = v;
    for (std::size_t s = modes.size(); s-- > 0 && !cur.is_zero();) cur = apply_mode(modes[s], idx[s], cur);
    cur *= coeff;
    out += cur;
  }
  return out;
}

FockVector FockSpace::apply(const ModeTerm& t, const FockVector& v) const {
  FockVector out = apply_modes(t.modes, t.tensor, v);
  out *= t.coeff;
  return out;
}

void FockSpace::apply_partition_to_monomial(const PartitionTerm& t, const NakajimaMonomial& m, const Scalar& c,
                                            FockVector& out) const {
  const auto& alg = *alg_;
  const auto& factors = m.factors();
  const auto& mult = t.partition.multiplicities();

  // Annihilation parts, grouped by mode value: (mode, multiplicity).
  std::vector<std::pair<int, int>> ann;
  for (const auto& [p, r] : mult)
    if (p > 0) ann.emplace_back(p, r);
  const std::vector<int> creation = t.partition.creation_moduli();

  const int central = central_value(sign_);
  Scalar base = c * t.coeff;
  for (const auto& [p, r] : ann) {
    // Slots of equal mode are interchangeable: r! ordered assignments per choice.
    Rational w = factorial(r);
    for (int i = 0; i < r; ++i) w *= central * p;
    base *= Scalar(w);
  }

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t, int)> pick;

  auto finish = [&]() {
    AlgebraElement gamma = t.element;
    std::vector<bool> used(factors.size(), false);
    for (std::size_t pos : chosen) {
      used[pos] = true;
      gamma = alg.multiply(gamma, alg.basis_element(factors[pos].basis));
      if (gamma.is_zero()) return;
    }
    std::vector<Factor> rest;
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (!used[j]) rest.push_back(factors[j]);
    NakajimaMonomial remaining(std::move(rest));

    const int k = static_cast<int>(creation.size());
    if (k == 0) {
      out.add(remaining, base * alg.integrate(gamma));
      return;
    }
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      if (gamma[b].is_zero()) continue;
      auto tensor = alg.basis_coproduct(static_cast<int>(b), k);
      Scalar scale = base * gamma[b];
      for (const auto& [idx, tc] : tensor->terms()) {
        NakajimaMonomial next = remaining;
        for (int s = 0; s < k; ++s) next.insert(Factor{creation[s], idx[s]});
        out.add(next, scale * tc);
      }
    }
  };

  // Choose, for each annihilation mode group g, an r-subset of positions with
  // that mode (positions increasing within the group).
  pick = [&](std::size_t group, std::size_t start, int left) {
    if (group == ann.size()) {
      finish();
      return;
    }
    if (left == 0) {
      pick(group + 1, 0, group + 1 < ann.size() ? ann[group + 1].second : 0);
      return;
    }
    const int mode = ann[group].first;
    for (std::size_t j = start; j < factors.size(); ++j) {
      if (factors[j].mode != mode) continue;
      chosen.push_back(j);
      pick(group, j + 1, left - 1);
      chosen.pop_back();
    }
  };
  pick(0, 0, ann.empty() ? 0 : ann[0].second);
}

FockVector FockSpace::apply(const PartitionTerm& t, const FockVector& v) const {
  FockVector out;
  if (t.coeff.is_zero() || t.element.is_zero()) return out;
  for (const auto& [m, c] : v.terms()) apply_partition_to_monomial(t, m, c, out);
  return out;
}

FockVector FockSpace::apply(const OperatorExpr& op, const FockVector& v) const {
  std::map<int, FockVector> by_level;
  for (const auto& [m, c] : v.terms()) by_level[m.level()].add(m, c);
  FockVector out;
  for (const auto& [level, part] : by_level) {
    TermList terms = op.materialize(level);
    for (const auto& t : terms.modes) out += apply(t, part);
    for (const auto& t : terms.partitions) out += apply(t, part);
  }
  return out;
}

FockVector FockSpace::commutator(const OperatorExpr& f, const OperatorExpr& g, const FockVector& v) const {
  return apply(f, apply(g, v)) - apply(g, apply(f, v));
}

Scalar FockSpace::pair(const NakajimaMonomial& m, const NakajimaMonomial& w) const {
  if (m.level() != w.level() || m.factors().size() != w.factors().size()) return Scalar();
  // Move every creation factor of m across as its adjoint annihilator.
  FockVector cur = FockVector::monomial(w);
  Scalar sign(1);
  for (const auto& f : m.factors()) {
    if (sign_ == CentralSign::Hilbert && f.mode % 2 != 0) sign = -sign;
    cur = apply_mode(f.mode, f.basis, cur);
    if (cur.is_zero()) return Scalar();
  }
  return sign * cur.coefficient(NakajimaMonomial{});
}

Scalar FockSpace::pair(const FockVector& v, const FockVector& w) const {
  Scalar s;
  for (const auto& [m, c] : v.terms())
    for (const auto& [n, d] : w.terms()) {
      Scalar p = pair(m, n);
      if (!p.is_zero()) s += c * d * p;
    }
  return s;
}

OperatorExpr a_lambda_tau(const GradedFrobeniusAlgebra& alg, const GeneralizedPartition& lambda,
                          const AlgebraElement& alpha) {
  if (lambda.empty()) throw EmptyPartition("a_lambda(tau_* alpha) needs a nonempty partition");
  return OperatorExpr::from(ModeTerm{Scalar(1), lambda.ordered_parts(), alg.coproduct(alpha, lambda.length())});
}

OperatorExpr cube_zero_mode(std::shared_ptr<const GradedFrobeniusAlgebra> alg, const AlgebraElement& alpha) {
  auto tensor = std::make_shared<const TensorElement>(alg->coproduct(alpha, 3));
  auto family = std::make_shared<const TermFamily>([tensor](int level) {
    TermList terms;
    const int bound = std::max(level, 1);
    for (int m1 = -2 * bound; m1 <= 2 * bound; ++m1)
      for (int m2 = -2 * bound; m2 <= 2 * bound; ++m2) {
        const int m3 = -m1 - m2;
        if (m1 == 0 || m2 == 0 || m3 == 0) continue;
        std::vector<int> modes{m1, m2, m3};
        std::sort(modes.begin(), modes.end());  // creations left of annihilations
        // Annihilators whose moduli exceed the level kill every input state.
        int ann_sum = 0;
        for (int m : modes)
          if (m > 0) ann_sum += m;
        if (ann_sum > level) continue;
        terms.modes.push_back(ModeTerm{Scalar(1), modes, *tensor});
      }
    return terms;
  });
  return OperatorExpr::from(family);
}

OperatorExpr tau_commutator(const GradedFrobeniusAlgebra& alg, CentralSign sign, const std::vector<int>& left_modes,
                            const AlgebraElement& alpha, const std::vector<int>& right_modes,
                            const AlgebraElement& beta) {
  if (left_modes.empty() || right_modes.empty())
    throw std::invalid_argument("tau_commutator needs nonempty mode lists");
  OperatorExpr out;
  const AlgebraElement product = alg.multiply(alpha, beta);
  const int arity = static_cast<int>(left_modes.size() + right_modes.size()) - 2;
  TensorElement tensor = alg.coproduct(product, arity);
  for (std::size_t t = 0; t < left_modes.size(); ++t)
    for (std::size_t j = 0; j < right_modes.size(); ++j) {
      if (left_modes[t] != -right_modes[j]) continue;
      std::vector<int> modes;
      for (std::size_t l = 0; l < j; ++l) modes.push_back(right_modes[l]);
      for (std::size_t u = 0; u < left_modes.size(); ++u)
        if (u != t) modes.push_back(left_modes[u]);
      for (std::size_t l = j + 1; l < right_modes.size(); ++l) modes.push_back(right_modes[l]);
      // Hilbert: −n_t δ; Orbifold: +n_t δ.
      Scalar coeff(central_value(sign) * left_modes[t]);
      out.add(ModeTerm{coeff, std::move(modes), tensor});
    }
  return out;
}

}  // namespace naklab
