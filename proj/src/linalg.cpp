#include "naklab/linalg.hpp"

namespace naklab {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [col, v] : x) {
    auto [it, inserted] = y.try_emplace(col);
    it->second += a * v;
    if (it->second.is_zero()) y.erase(it);
  }
}

void Eliminator::reduce(SparseVec& row, SparseVec& combo) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto pivot = pivots_.find(it->first);
    if (pivot == pivots_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    Scalar factor = -it->second;
    axpy(row, factor, pivot->second.row);
    axpy(combo, factor, pivot->second.combo);
    it = row.upper_bound(col);
  }
}

bool Eliminator::add(SparseVec row, int id) {
  SparseVec combo{{id, Scalar(1)}};
  reduce(row, combo);
  if (row.empty()) return false;
  Scalar lead_inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= lead_inv;
  for (auto& [c, v] : combo) v *= lead_inv;
  int col = row.begin()->first;
  pivots_.emplace(col, Pivot{std::move(row), std::move(combo)});
  return true;
}

std::optional<SparseVec> Eliminator::express(SparseVec target) const {
  SparseVec combo;
  reduce(target, combo);
  if (!target.empty()) return std::nullopt;
  // target - sum(combo) == 0, so target == -combo.
  for (auto& [id, v] : combo) v = -v;
  return combo;
}

std::optional<Matrix> invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar s = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::size_t matrix_rank(const Matrix& m) {
  Eliminator e;
  int id = 0;
  for (const auto& row : m) {
    SparseVec v;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) v.emplace(static_cast<int>(j), row[j]);
    e.add(std::move(v), id++);
  }
  return e.rank();
}

void LinearSystem::add_equation(const SparseVec& coefficients, const Scalar& rhs) {
  SparseVec row = coefficients;
  if (!rhs.is_zero()) row[unknowns_] = rhs;
  auto it = row.begin();
  while (it != row.end()) {
    auto pivot = pivots_.find(it->first);
    if (pivot == pivots_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    Scalar factor = -it->second;
    axpy(row, factor, pivot->second);
    it = row.upper_bound(col);
  }
  if (row.empty()) return;
  const int lead = row.begin()->first;
  if (lead == unknowns_) {
    inconsistent_ = true;
    return;
  }
  Scalar inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= inv;
  pivots_.emplace(lead, std::move(row));
}

SolveResult LinearSystem::solve() const {
  SolveResult result;
  result.rank = pivots_.size();
  if (inconsistent_) {
    result.status = SolveStatus::Inconsistent;
    return result;
  }
  if (static_cast<int>(pivots_.size()) < unknowns_) {
    result.status = SolveStatus::RankDeficient;
    return result;
  }
  result.solution.assign(unknowns_, Scalar());
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const SparseVec& row = it->second;
    Scalar value;
    for (const auto& [c, v] : row) {
      if (c == unknowns_) value += v;
      else if (c != it->first) value -= v * result.solution[c];
    }
    result.solution[it->first] = value;
  }
  return result;
}

}  // namespace naklab
