#include "doctest.h"
#include "oracles.hpp"

#include "naklab/linalg.hpp"

using namespace naklab;

namespace {

SparseVec dense_to_sparse(const std::vector<Scalar>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s[static_cast<int>(i)] = v[i];
  return s;
}

}  // namespace

TEST_CASE("eliminator detects dependence and reconstructs combinations") {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int cols = 5;
    std::vector<std::vector<Scalar>> rows;
    for (int r = 0; r < 3; ++r) {
      std::vector<Scalar> v(cols);
      for (auto& x : v) x = gen.scalar(3);
      rows.push_back(v);
    }
    Eliminator e;
    for (int r = 0; r < 3; ++r) e.add(dense_to_sparse(rows[r]), r);
    // A combination of stored rows is dependent and is re-expressed exactly.
    std::vector<Scalar> w(cols);
    std::vector<Scalar> coeffs{gen.scalar(), gen.scalar(), gen.scalar()};
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < 3; ++r) w[c] += coeffs[r] * rows[r][c];
    CHECK_FALSE(e.add(dense_to_sparse(w), 99));
    auto combo = e.express(dense_to_sparse(w));
    REQUIRE(combo.has_value());
    std::vector<Scalar> back(cols);
    for (const auto& [id, c] : *combo)
      for (int k = 0; k < cols; ++k) back[k] += c * rows[id][k];
    CHECK(back == w);
  }
}

TEST_CASE("eliminator rejects targets outside the span") {
  Eliminator e;
  e.add({{0, Scalar(1)}, {1, Scalar(1)}}, 0);
  CHECK_FALSE(e.express({{0, Scalar(1)}}).has_value());
  CHECK(e.rank() == 1);
}

TEST_CASE("matrix inverse") {
  Matrix m{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}};
  auto inv = invert(m);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == Scalar(1));
  CHECK((*inv)[0][1] == Scalar(-1));
  CHECK((*inv)[1][1] == Scalar(2));
  CHECK_FALSE(invert(Matrix{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}).has_value());
  CHECK(matrix_rank(Matrix{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == 1);
}

TEST_CASE("linear system statuses") {
  SUBCASE("unique") {
    LinearSystem s(2);
    s.add_equation({{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(3));
    s.add_equation({{0, Scalar(1)}, {1, Scalar(-1)}}, Scalar(1));
    s.add_equation({{0, Scalar(2)}}, Scalar(4));  // redundant, consistent
    auto r = s.solve();
    REQUIRE(r.status == SolveStatus::Unique);
    CHECK(r.solution[0] == Scalar(2));
    CHECK(r.solution[1] == Scalar(1));
  }
  SUBCASE("rank deficient") {
    LinearSystem s(2);
    s.add_equation({{0, Scalar(1)}, {1, Scalar(1)}}, Scalar(3));
    CHECK(s.solve().status == SolveStatus::RankDeficient);
  }
  SUBCASE("inconsistent") {
    LinearSystem s(1);
    s.add_equation({{0, Scalar(1)}}, Scalar(1));
    s.add_equation({{0, Scalar(1)}}, Scalar(2));
    CHECK(s.solve().status == SolveStatus::Inconsistent);
  }
}

TEST_CASE("random square systems recover a planted solution") {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4;
    std::vector<Scalar> x(n);
    for (auto& v : x) v = gen.scalar();
    LinearSystem s(n);
    for (int r = 0; r < n + 2; ++r) {
      std::vector<Scalar> row(n);
      Scalar rhs;
      for (int c = 0; c < n; ++c) {
        row[c] = gen.scalar(2);
        rhs += row[c] * x[c];
      }
      s.add_equation(dense_to_sparse(row), rhs);
    }
    auto r = s.solve();
    if (r.status == SolveStatus::Unique) CHECK(r.solution == x);
    CHECK(r.status != SolveStatus::Inconsistent);
  }
}
