#pragma once

// Exact sparse Gaussian elimination over Gaussian rationals.

#include "naklab/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace naklab {

using SparseVec = std::map<int, Scalar>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

/// Incremental row echelon form that remembers how every stored row was
/// assembled from the tagged input rows.
class Eliminator {
 public:
  /// Adds `row` under tag `id`. Returns false (and stores nothing) when the
  /// row is already in the span.
  bool add(SparseVec row, int id);

  /// Coefficients c with target = sum_id c[id] * row(id), or nullopt when the
  /// target is outside the span.
  std::optional<SparseVec> express(SparseVec target) const;

  std::size_t rank() const { return pivots_.size(); }

 private:
  struct Pivot {
    SparseVec row;    // leading entry at the pivot column equals 1
    SparseVec combo;  // row = sum combo[id] * input(id)
  };
  void reduce(SparseVec& row, SparseVec& combo) const;

  std::map<int, Pivot> pivots_;
};

using Matrix = std::vector<std::vector<Scalar>>;

/// Gauss-Jordan inverse of a square matrix; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

std::size_t matrix_rank(const Matrix& m);

enum class SolveStatus { Unique, RankDeficient, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Unique;
  std::vector<Scalar> solution;  // filled when Unique
  std::size_t rank = 0;
};

/// Streaming exact solver for an overdetermined system A x = b.
/// Each equation is a sparse row over unknown indices [0, unknowns) plus rhs.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns) : unknowns_(unknowns) {}

  void add_equation(const SparseVec& coefficients, const Scalar& rhs);
  SolveResult solve() const;
  bool inconsistent() const { return inconsistent_; }
  int unknowns() const { return unknowns_; }

 private:
  int unknowns_;
  bool inconsistent_ = false;
  std::map<int, SparseVec> pivots_;  // column `unknowns_` holds the rhs
};

}  // namespace naklab
