#pragma once

// Graded Frobenius algebras A = H*(X) of even-cohomology surfaces, given by
// explicit structure constants.

#include "naklab/linalg.hpp"
#include "naklab/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace naklab {

/// Coefficient vector over the basis of a fixed algebra.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dim) : c_(dim) {}
  explicit AlgebraElement(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

  static AlgebraElement basis(std::size_t dim, int index, Scalar coeff = Scalar(1));

  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coefficients() const { return c_; }

  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<Scalar> c_;
};

/// Element of A^{⊗k}: sparse map from k-tuples of basis indices to scalars.
/// Arity 0 tensors are scalars stored under the empty tuple.
class TensorElement {
 public:
  using Index = std::vector<int>;

  TensorElement() = default;
  explicit TensorElement(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Index, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Index& idx, const Scalar& v);
  Scalar coefficient(const Index& idx) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& s);
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  int arity_ = 0;
  std::map<Index, Scalar> terms_;
};

struct BasisEntry {
  std::string name;
  int degree = 0;
};

/// Raw description of an algebra as read from a model file.
struct AlgebraSpec {
  std::string name;
  int top_degree = 4;
  std::vector<BasisEntry> basis;
  int unit = 0;
  int point = 0;
  /// mult[i][j] = e_i * e_j as coefficients over the basis.
  std::vector<std::vector<std::vector<Scalar>>> mult;
  std::vector<Scalar> counit;
  std::vector<Scalar> canonical;  // K_X
  std::vector<Scalar> euler;      // e_X
};

enum class ViolationKind {
  OddDegreeBasis,
  DegreeViolation,
  NonCommutative,
  NonAssociative,
  NotUnital,
  DegeneratePairing,
  BadCounitSupport,
  BadPointClass,
  BadDistinguishedElement,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

class GradedFrobeniusAlgebra {
 public:
  /// Stores the tables as given; call validate() to check the invariants.
  explicit GradedFrobeniusAlgebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  std::size_t dim() const { return spec_.basis.size(); }
  int top_degree() const { return spec_.top_degree; }
  int degree(int i) const { return spec_.basis[i].degree; }
  const std::string& basis_name(int i) const { return spec_.basis[i].name; }
  std::optional<int> index_of(const std::string& name) const;

  int unit_index() const { return spec_.unit; }
  int point_index() const { return spec_.point; }
  AlgebraElement basis_element(int i) const { return AlgebraElement::basis(dim(), i); }
  AlgebraElement unit() const { return basis_element(spec_.unit); }
  AlgebraElement point() const { return basis_element(spec_.point); }
  const AlgebraElement& canonical_class() const { return canonical_; }
  const AlgebraElement& euler_class() const { return euler_; }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  const AlgebraElement& basis_product(int i, int j) const { return table_[i][j]; }
  Scalar integrate(const AlgebraElement& a) const;
  Scalar pair(const AlgebraElement& a, const AlgebraElement& b) const;
  /// <e_i, e_j>.
  const Scalar& pairing(int i, int j) const { return pairing_[i][j]; }
  /// <a, e_j>.
  Scalar pair_with_basis(const AlgebraElement& a, int j) const;

  /// Degree of a nonzero homogeneous element; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree(const AlgebraElement& a) const;

  bool pairing_nondegenerate() const { return pairing_inverse_.has_value(); }
  /// Dual basis vector e^i with <e_j, e^i> = delta_ij.
  AlgebraElement dual_basis(int i) const;

  /// k-fold coproduct tau_{k*}(a). k = 0 gives the scalar T(a), k = 1 gives a.
  TensorElement coproduct(const AlgebraElement& a, int k) const;
  /// Cached tau_{k*}(e_i).
  std::shared_ptr<const TensorElement> basis_coproduct(int i, int k) const;

 private:
  AlgebraSpec spec_;
  std::vector<std::vector<AlgebraElement>> table_;
  AlgebraElement counit_;
  AlgebraElement canonical_;
  AlgebraElement euler_;
  Matrix pairing_;
  std::optional<Matrix> pairing_inverse_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const TensorElement>> coproduct_cache_;
};

using AlgebraPtr = std::shared_ptr<const GradedFrobeniusAlgebra>;

/// Checks every structural invariant exhaustively; empty result means OK.
std::vector<Violation> validate(const GradedFrobeniusAlgebra& alg);

/// Raised when an operation needs a nondegenerate pairing and the model has none.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace naklab
