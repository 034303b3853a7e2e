#include "naklab/frobenius.hpp"


namespace naklab {

AlgebraElement AlgebraElement::basis(std::size_t dim, int index, Scalar coeff) {
  AlgebraElement e(dim);
  e.c_[index] = std::move(coeff);
  return e;
}

bool AlgebraElement::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (c_.empty()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (c_.empty()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

void TensorElement::add(const Index& idx, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar TensorElement::coefficient(const Index& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar() : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [idx, v] : o.terms_) add(idx, v);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= s;
  return *this;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OddDegreeBasis: return "OddDegreeBasis";
    case ViolationKind::DegreeViolation: return "DegreeViolation";
    case ViolationKind::NonCommutative: return "NonCommutative";
    case ViolationKind::NonAssociative: return "NonAssociative";
    case ViolationKind::NotUnital: return "NotUnital";
    case ViolationKind::DegeneratePairing: return "DegeneratePairing";
    case ViolationKind::BadCounitSupport: return "BadCounitSupport";
    case ViolationKind::BadPointClass: return "BadPointClass";
    case ViolationKind::BadDistinguishedElement: return "BadDistinguishedElement";
  }
  return "Unknown";
}

GradedFrobeniusAlgebra::GradedFrobeniusAlgebra(AlgebraSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = spec_.basis.size();
  auto as_element = [n](const std::vector<Scalar>& v) {
    AlgebraElement e(n);
    for (std::size_t i = 0; i < n && i < v.size(); ++i) e[i] = v[i];
    return e;
  };
  table_.assign(n, std::vector<AlgebraElement>(n, AlgebraElement(n)));
  for (std::size_t i = 0; i < n && i < spec_.mult.size(); ++i)
    for (std::size_t j = 0; j < n && j < spec_.mult[i].size(); ++j)
      table_[i][j] = as_element(spec_.mult[i][j]);
  counit_ = as_element(spec_.counit);
  canonical_ = as_element(spec_.canonical);
  euler_ = as_element(spec_.euler);

  pairing_.assign(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairing_[i][j] = integrate(table_[i][j]);
  pairing_inverse_ = invert(pairing_);
}

std::optional<int> GradedFrobeniusAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < spec_.basis.size(); ++i)
    if (spec_.basis[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

AlgebraElement GradedFrobeniusAlgebra::multiply(const AlgebraElement& a,
                                                const AlgebraElement& b) const {
  AlgebraElement r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      const AlgebraElement& prod = table_[i][j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!prod[k].is_zero()) r[k] += ab * prod[k];
    }
  }
  return r;
}

Scalar GradedFrobeniusAlgebra::integrate(const AlgebraElement& a) const {
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && !counit_[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Scalar GradedFrobeniusAlgebra::pair(const AlgebraElement& a, const AlgebraElement& b) const {
  return integrate(multiply(a, b));
}

Scalar GradedFrobeniusAlgebra::pair_with_basis(const AlgebraElement& a, int j) const {
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && !pairing_[i][j].is_zero()) s += a[i] * pairing_[i][j];
  return s;
}

std::optional<int> GradedFrobeniusAlgebra::homogeneous_degree(const AlgebraElement& a) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    if (deg && *deg != degree(static_cast<int>(i))) return std::nullopt;
    deg = degree(static_cast<int>(i));
  }
  return deg;
}

AlgebraElement GradedFrobeniusAlgebra::dual_basis(int i) const {
  if (!pairing_inverse_) throw AlgebraError("DegeneratePairing: pairing matrix is singular");
  // e^i = sum_j (G^{-1})_{ji} e_j, so that <e_k, e^i> = (G G^{-1})_{ki}.
  AlgebraElement d(dim());
  for (std::size_t j = 0; j < dim(); ++j) d[j] = (*pairing_inverse_)[j][i];
  return d;
}

std::shared_ptr<const TensorElement> GradedFrobeniusAlgebra::basis_coproduct(int i, int k) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = coproduct_cache_.find({i, k});
    if (it != coproduct_cache_.end()) return it->second;
  }
  TensorElement t(k);
  if (k <= 1) {
    t = coproduct(basis_element(i), k);
  } else {
    if (!pairing_inverse_) throw AlgebraError("DegeneratePairing: coproduct needs a nondegenerate pairing");
    // tau_k(e_i) = sum_j tau_{k-1}(e_i e_j) ⊗ e^j.
    for (std::size_t j = 0; j < dim(); ++j) {
      const AlgebraElement& prod = table_[i][j];
      AlgebraElement dual = dual_basis(static_cast<int>(j));
      for (std::size_t l = 0; l < dim(); ++l) {
        if (prod[l].is_zero()) continue;
        auto head = basis_coproduct(static_cast<int>(l), k - 1);
        for (const auto& [idx, v] : head->terms()) {
          TensorElement::Index full = idx;
          full.push_back(0);
          for (std::size_t m = 0; m < dim(); ++m) {
            if (dual[m].is_zero()) continue;
            full.back() = static_cast<int>(m);
            t.add(full, prod[l] * v * dual[m]);
          }
        }
      }
    }
  }
  auto shared = std::make_shared<const TensorElement>(std::move(t));
  std::lock_guard lock(cache_mutex_);
  return coproduct_cache_.try_emplace({i, k}, std::move(shared)).first->second;
}

TensorElement GradedFrobeniusAlgebra::coproduct(const AlgebraElement& a, int k) const {
  if (k < 0) throw std::invalid_argument("coproduct arity must be non-negative");
  TensorElement t(k);
  if (k == 0) {
    t.add({}, integrate(a));
    return t;
  }
  if (k == 1) {
    for (std::size_t i = 0; i < dim(); ++i) t.add({static_cast<int>(i)}, a[i]);
    return t;
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    TensorElement part = *basis_coproduct(static_cast<int>(i), k);
    part *= a[i];
    t += part;
  }
  return t;
}

std::vector<Violation> validate(const GradedFrobeniusAlgebra& alg) {
  std::vector<Violation> out;
  const int n = static_cast<int>(alg.dim());
  auto name = [&](int i) { return "'" + alg.basis_name(i) + "'"; };
  auto report = [&](ViolationKind k, std::string d) { out.push_back({k, std::move(d)}); };

  if (n == 0) {
    report(ViolationKind::DegeneratePairing, "empty basis");
    return out;
  }
  for (int i = 0; i < n; ++i) {
    int d = alg.degree(i);
    if (d % 2 != 0 || d < 0 || d > alg.top_degree())
      report(ViolationKind::OddDegreeBasis,
             "basis element " + name(i) + " has degree " + std::to_string(d));
  }
  if (alg.unit_index() < 0 || alg.unit_index() >= n || alg.point_index() < 0 ||
      alg.point_index() >= n) {
    report(ViolationKind::BadDistinguishedElement, "unit/point index out of range");
    return out;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const AlgebraElement& p = alg.basis_product(i, j);
      for (int k = 0; k < n; ++k) {
        if (p[k].is_zero()) continue;
        if (alg.degree(k) != alg.degree(i) + alg.degree(j))
          report(ViolationKind::DegreeViolation, name(i) + "*" + name(j) + " has a component along " +
                                                     name(k) + " of the wrong degree");
      }
      if (!(p == alg.basis_product(j, i)))
        report(ViolationKind::NonCommutative, name(i) + "*" + name(j) + " != " + name(j) + "*" + name(i));
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto lhs = alg.multiply(alg.basis_product(i, j), alg.basis_element(k));
        auto rhs = alg.multiply(alg.basis_element(i), alg.basis_product(j, k));
        if (!(lhs == rhs))
          report(ViolationKind::NonAssociative,
                 "(" + name(i) + "*" + name(j) + ")*" + name(k) + " != " + name(i) + "*(" + name(j) + "*" +
                     name(k) + ")");
      }

  for (int i = 0; i < n; ++i)
    if (!(alg.basis_product(alg.unit_index(), i) == alg.basis_element(i)))
      report(ViolationKind::NotUnital, "unit " + name(alg.unit_index()) + " does not fix " + name(i));

  for (int i = 0; i < n; ++i) {
    Scalar t = alg.integrate(alg.basis_element(i));
    if (!t.is_zero() && alg.degree(i) != alg.top_degree())
      report(ViolationKind::BadCounitSupport,
             "T(" + name(i) + ") = " + t.str() + " but deg " + std::to_string(alg.degree(i)) +
                 " != top degree " + std::to_string(alg.top_degree()));
  }

  if (!alg.pairing_nondegenerate()) report(ViolationKind::DegeneratePairing, "pairing matrix T(e_i e_j) is singular");

  const int x = alg.point_index();
  if (alg.degree(x) != alg.top_degree() || !(alg.integrate(alg.point()) == Scalar(1)))
    report(ViolationKind::BadPointClass, "point class " + name(x) + " must have top degree and T(x) = 1");

  auto check_degree = [&](const AlgebraElement& e, int want, const char* what) {
    if (e.is_zero()) return;
    auto d = alg.homogeneous_degree(e);
    if (!d || *d != want)
      report(ViolationKind::BadDistinguishedElement,
             std::string(what) + " must be homogeneous of degree " + std::to_string(want));
  };
  check_degree(alg.canonical_class(), 2, "K");
  check_degree(alg.euler_class(), alg.top_degree(), "e");
  return out;
}

}  // namespace naklab
