#pragma once

// Fock space of the Heisenberg algebra modeled on a graded Frobenius algebra,
// for either central-term sign, with exact application of mode strings.

#include "naklab/frobenius.hpp"
#include "naklab/partition.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace naklab {

/// [a_m(α), a_n(β)] = c · m · δ_{m,-n} · <α,β> with c = -1 (Hilbert) or +1 (Orbifold).
enum class CentralSign { Hilbert = -1, Orbifold = 1 };

inline int central_value(CentralSign s) { return static_cast<int>(s); }
inline char mode_letter(CentralSign s) { return s == CentralSign::Hilbert ? 'a' : 'p'; }

/// One creation factor a_{-n}(e_basis), n > 0.
struct Factor {
  int mode = 1;
  int basis = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
  /// Canonical order: larger mode first, then smaller basis index.
  friend auto operator<=>(const Factor& a, const Factor& b) {
    if (a.mode != b.mode) return b.mode <=> a.mode;
    return a.basis <=> b.basis;
  }
};

class NakajimaMonomial {
 public:
  NakajimaMonomial() = default;
  explicit NakajimaMonomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_vacuum() const { return f_.empty(); }
  int level() const;
  int age() const;
  /// Σ (|e_i| + 2(n − 1)).
  int degree(const GradedFrobeniusAlgebra& alg) const;

  void insert(Factor f);
  NakajimaMonomial without(std::size_t position) const;

  friend bool operator==(const NakajimaMonomial&, const NakajimaMonomial&) = default;
  friend auto operator<=>(const NakajimaMonomial& a, const NakajimaMonomial& b) {
    if (a.f_.size() != b.f_.size()) return a.f_.size() <=> b.f_.size();
    return a.f_ <=> b.f_;
  }

 private:
  std::vector<Factor> f_;
};

class NotASubmonomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ∘ B: all creation factors of both.
NakajimaMonomial monomial_concat(const NakajimaMonomial& a, const NakajimaMonomial& b);
/// A / B: delete the factors of B from A. Throws NotASubmonomial when B ⊄ A.
NakajimaMonomial monomial_divide(const NakajimaMonomial& a, const NakajimaMonomial& b);

/// Sparse exact combination of Nakajima monomials; zero coefficients pruned.
class FockVector {
 public:
  using Map = std::map<NakajimaMonomial, Scalar>;

  FockVector() = default;
  static FockVector vacuum();
  static FockVector monomial(NakajimaMonomial m, Scalar c = Scalar(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const NakajimaMonomial& m) const;
  /// Level of a nonzero level-homogeneous vector.
  std::optional<int> level() const;
  /// Degree of a nonzero degree-homogeneous vector.
  std::optional<int> degree(const GradedFrobeniusAlgebra& alg) const;

  void add(const NakajimaMonomial& m, const Scalar& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& s);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& s, FockVector a) { return a *= s; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// Bilinear extension of monomial_concat.
  FockVector concat(const FockVector& o) const;

 private:
  Map terms_;
};

/// coeff · a_{m_1} ⋯ a_{m_k}(tensor); modes[0] is the leftmost operator.
struct ModeTerm {
  Scalar coeff{1};
  std::vector<int> modes;
  TensorElement tensor;
};

/// coeff · a_λ(τ_* element) with the creation-before-annihilation order of λ.
struct PartitionTerm {
  Scalar coeff{1};
  GeneralizedPartition partition;
  AlgebraElement element;
};

struct TermList {
  std::vector<ModeTerm> modes;
  std::vector<PartitionTerm> partitions;
  bool empty() const { return modes.empty() && partitions.empty(); }
};

/// Locally finite infinite sum, materialized per input level. Materializations
/// are cached: one writer per level, concurrent readers afterwards.
class TermFamily {
 public:
  using Generator = std::function<TermList(int level)>;
  explicit TermFamily(Generator gen) : gen_(std::move(gen)) {}

  std::shared_ptr<const TermList> at_level(int level) const;

 private:
  Generator gen_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, std::shared_ptr<const TermList>> cache_;
};

class OperatorExpr {
 public:
  OperatorExpr() = default;
  static OperatorExpr identity(const Scalar& c = Scalar(1));
  static OperatorExpr from(ModeTerm t);
  static OperatorExpr from(PartitionTerm t);
  static OperatorExpr from(std::shared_ptr<const TermFamily> family, const Scalar& scale = Scalar(1));

  void add(ModeTerm t) { fixed_.modes.push_back(std::move(t)); }
  void add(PartitionTerm t) { fixed_.partitions.push_back(std::move(t)); }
  void add(std::shared_ptr<const TermFamily> family, const Scalar& scale = Scalar(1));

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator*=(const Scalar& s);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator*(const Scalar& s, OperatorExpr a) { return a *= s; }

  const TermList& fixed_terms() const { return fixed_; }
  /// All terms relevant on inputs of the given level.
  TermList materialize(int level) const;
  bool is_zero() const { return fixed_.empty() && families_.empty(); }

 private:
  TermList fixed_;
  std::vector<std::pair<std::shared_ptr<const TermFamily>, Scalar>> families_;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fock space over a fixed algebra with a fixed central sign.
class FockSpace {
 public:
  FockSpace(std::shared_ptr<const GradedFrobeniusAlgebra> alg, CentralSign sign);

  const GradedFrobeniusAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const GradedFrobeniusAlgebra>& algebra_ptr() const { return alg_; }
  CentralSign sign() const { return sign_; }
  FockSpace with_sign(CentralSign s) const { return FockSpace(alg_, s); }

  /// Nakajima basis of the given level, ordered by degree then monomial order.
  std::vector<NakajimaMonomial> basis(int level) const;
  /// Unit class a_{-1}(1)^n |0> / n!.
  FockVector unit_class(int n) const;

  /// a_m(α) v for m != 0.
  FockVector apply_mode(int mode, const AlgebraElement& alpha, const FockVector& v) const;
  FockVector apply_mode(int mode, int basis_index, const FockVector& v) const;
  /// Generic route: expand the tensor and apply modes right to left.
  FockVector apply_modes(const std::vector<int>& modes, const TensorElement& tensor, const FockVector& v) const;
  FockVector apply(const ModeTerm& t, const FockVector& v) const;
  /// Contraction route for a_λ(τ_* α).
  FockVector apply(const PartitionTerm& t, const FockVector& v) const;
  FockVector apply(const OperatorExpr& op, const FockVector& v) const;

  /// [F, G] v = F(G v) − G(F v).
  FockVector commutator(const OperatorExpr& f, const OperatorExpr& g, const FockVector& v) const;

  /// Bilinear pairing with <|0>,|0>> = 1 and a_{-n}(β)† = (−1)^n a_n(β)
  /// (Hilbert) resp. p_{-n}(β)† = p_n(β) (Orbifold).
  Scalar pair(const FockVector& v, const FockVector& w) const;
  Scalar pair(const NakajimaMonomial& m, const NakajimaMonomial& w) const;

 private:
  void apply_partition_to_monomial(const PartitionTerm& t, const NakajimaMonomial& m, const Scalar& c,
                                   FockVector& out) const;

  std::shared_ptr<const GradedFrobeniusAlgebra> alg_;
  CentralSign sign_;
};

/// a_λ(τ_*α) as a single mode string in the fixed creation-first order.
OperatorExpr a_lambda_tau(const GradedFrobeniusAlgebra& alg, const GeneralizedPartition& lambda,
                          const AlgebraElement& alpha);

/// Σ over ordered (m1, m2, m3), all nonzero, m1+m2+m3 = 0, of the normally
/// ordered a_{m1} a_{m2} a_{m3}(τ_{3*}α). No −1/6 prefactor.
OperatorExpr cube_zero_mode(std::shared_ptr<const GradedFrobeniusAlgebra> alg, const AlgebraElement& alpha);

/// Closed form of [a_{n_1}⋯a_{n_k}(τ_{k*}α), a_{m_1}⋯a_{m_s}(τ_{s*}β)].
OperatorExpr tau_commutator(const GradedFrobeniusAlgebra& alg, CentralSign sign, const std::vector<int>& left_modes,
                            const AlgebraElement& alpha, const std::vector<int>& right_modes,
                            const AlgebraElement& beta);

}  // namespace naklab
