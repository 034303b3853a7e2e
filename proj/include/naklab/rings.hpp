#pragma once

// The orbifold ring (𝔒ₖ generators) and the quantum-corrected ring
// (𝔊̃ₖ generators) at a fixed level n, built by constructive reduction of the
// Nakajima basis to generator monomials; Ψ and the isomorphism checks.

#include "naklab/operators.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace naklab {

enum class RingSide { Orbifold, QuantumCorrected };

std::string to_string(RingSide side);
CentralSign central_sign(RingSide side);

/// Raised when the generator monomials of some degree do not span the basis.
class GenerationFailure : public std::runtime_error {
 public:
  GenerationFailure(int degree, std::size_t corank);
  int degree() const { return degree_; }
  std::size_t corank() const { return corank_; }

 private:
  int degree_;
  std::size_t corank_;
};

class NotReduced : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator (k, e_i): the class Oₖ(e_i, n) resp. G̃ₖ(e_i, n).
struct RingGenerator {
  int k = 0;
  int basis = 0;
  int degree = 0;
};

struct StructureConstant {
  int degree = 0;  // degree of the output basis element
  int i = 0, j = 0, k = 0;
  Scalar value;
};

class RingModel {
 public:
  /// Builds the generator reduction; throws GenerationFailure on a rank gap.
  RingModel(AlgebraPtr alg, RingSide side, int n, const OperatorOptions& opts = {});

  RingSide side() const { return side_; }
  int n() const { return n_; }
  const FockSpace& space() const { return space_; }
  const std::vector<NakajimaMonomial>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const NakajimaMonomial& m) const;
  const std::vector<RingGenerator>& generators() const { return generators_; }
  /// Generator multisets used by the reduction table (indices into generators()).
  const std::vector<std::vector<int>>& generator_monomials() const { return monomials_; }
  /// basis index → combination of generator_monomials() indices.
  const std::vector<SparseVec>& reduction() const { return reduction_; }
  /// Per degree: (rank reached, basis size).
  const std::map<int, std::pair<std::size_t, std::size_t>>& rank_certificate() const { return certificate_; }

  /// Multiplication operator of a generator.
  const OperatorExpr& generator_operator(int g) const { return ops_[g]; }
  /// Class of a generator monomial: its operators applied to the unit class.
  FockVector evaluate(const std::vector<int>& generator_multiset) const;
  /// Generator class (k, e_i) itself.
  FockVector generator_class(int g) const;
  std::optional<int> find_generator(int k, int basis) const;

  /// v • w through the reduction of v.
  FockVector product(const FockVector& v, const FockVector& w) const;
  Scalar triple_product(const FockVector& v, const FockVector& w, const FockVector& u) const;

  /// All nonzero structure constants, ordered by (i, j, k).
  std::vector<StructureConstant> structure_constants() const;

 private:
  FockVector apply_monomial(const std::vector<int>& multiset, const FockVector& w) const;

  AlgebraPtr alg_;
  RingSide side_;
  int n_;
  FockSpace space_;
  std::vector<NakajimaMonomial> basis_;
  std::map<NakajimaMonomial, std::size_t> index_;
  std::vector<RingGenerator> generators_;
  std::vector<OperatorExpr> ops_;
  std::vector<std::vector<int>> monomials_;
  std::vector<SparseVec> reduction_;
  std::map<int, std::pair<std::size_t, std::size_t>> certificate_;
};

/// Ψ: p-monomial m ↦ i^{−age(m)} a-monomial m.
FockVector psi(const FockVector& v);
FockVector psi_inverse(const FockVector& v);

struct IsoReport {
  std::size_t checks = 0;
  bool passed = true;
  /// First counterexample: basis indices and both sides.
  std::optional<std::tuple<std::size_t, std::size_t, FockVector, FockVector>> counterexample;
};

/// Ψ(b_i •orb b_j) = Ψ(b_i) •qc Ψ(b_j) over all basis pairs.
IsoReport verify_iso(const RingModel& orbifold, const RingModel& quantum);

/// <v, w>_orb = <Ψv, Ψw>_hilb over all basis pairs of every level ≤ max_level.
IsoReport verify_pairing(const AlgebraPtr& alg, int max_level);

/// CSV with header degree,i,j,k,re,im.
std::string structure_constants_csv(const RingModel& ring);
std::string structure_constants_json(const RingModel& ring);
std::string reduction_table_json(const RingModel& ring);

}  // namespace naklab
