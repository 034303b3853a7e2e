#include "doctest.h"
#include "oracles.hpp"

#include "naklab/fock.hpp"

using namespace naklab;

namespace {

NakajimaMonomial mono(std::initializer_list<std::pair<int, int>> factors) {
  std::vector<Factor> f;
  for (auto [n, b] : factors) f.push_back(Factor{n, b});
  return NakajimaMonomial(f);
}

FockVector vec(std::initializer_list<std::pair<int, int>> factors) { return FockVector::monomial(mono(factors)); }

OperatorExpr single(const GradedFrobeniusAlgebra& alg, int mode, const AlgebraElement& a) {
  return OperatorExpr::from(ModeTerm{Scalar(1), {mode}, alg.coproduct(a, 1)});
}

}  // namespace

TEST_CASE("Heisenberg examples") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  const int h = 1;
  CHECK(hilb.apply_mode(1, h, vec({{1, h}})) == Scalar(-1) * FockVector::vacuum());
  CHECK(orb.apply_mode(1, h, vec({{1, h}})) == FockVector::vacuum());
  for (int m = 1; m <= 3; ++m) CHECK(hilb.apply_mode(m, 0, FockVector::vacuum()).is_zero());
  CHECK(hilb.apply_mode(2, h, hilb.apply_mode(-2, h, FockVector::vacuum())) == Scalar(-2) * FockVector::vacuum());
  CHECK_THROWS(hilb.apply_mode(0, h, FockVector::vacuum()));
}

TEST_CASE("monomial statistics and basis enumeration") {
  auto alg = oracle::model("p2");
  auto m = mono({{2, 1}, {1, 2}, {3, 0}});
  CHECK(m.level() == 6);
  CHECK(m.age() == 3);
  CHECK(m.degree(*alg) == 2 + 4 + 2 * 3);
  CHECK(m.factors().front().mode == 3);

  const std::vector<std::size_t> p2{1, 3, 9, 22, 51, 108, 221};
  FockSpace s(alg, CentralSign::Hilbert);
  for (int n = 0; n < static_cast<int>(p2.size()); ++n) CHECK(s.basis(n).size() == p2[n]);
  const std::vector<std::size_t> p1p1{1, 4, 14, 40, 105, 252, 574};
  FockSpace t(oracle::model("p1xp1"), CentralSign::Orbifold);
  for (int n = 0; n < static_cast<int>(p1p1.size()); ++n) CHECK(t.basis(n).size() == p1p1[n]);

  auto b = s.basis(4);
  for (std::size_t i = 1; i < b.size(); ++i) {
    CHECK(b[i - 1].degree(*alg) <= b[i].degree(*alg));
    CHECK(b[i - 1] != b[i]);
  }
  CHECK(s.unit_class(3).coefficient(mono({{1, 0}, {1, 0}, {1, 0}})) == Scalar(fraction(1, 6)));
}

TEST_CASE("concatenation and division") {
  auto a = mono({{2, 1}});
  auto b = mono({{1, 2}});
  CHECK(monomial_concat(a, b) == mono({{2, 1}, {1, 2}}));
  CHECK(monomial_divide(monomial_concat(a, b), b) == a);
  CHECK_THROWS_AS(monomial_divide(a, mono({{3, 1}})), NotASubmonomial);
}

TEST_CASE("apply_modes agrees with the polynomial model") {
  oracle::Gen gen(7);
  for (const char* name : {"p2", "p1xp1"})
    for (CentralSign sign : {CentralSign::Hilbert, CentralSign::Orbifold}) {
      auto alg = oracle::model(name);
      FockSpace space(alg, sign);
      oracle::PolynomialFock poly(alg, sign);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> modes;
        for (int i = gen.uniform(1, 3); i > 0; --i) {
          int m = gen.uniform(1, 3);
          modes.push_back(gen.coin() ? m : -m);
        }
        TensorElement t = alg->coproduct(gen.element(*alg), static_cast<int>(modes.size()));
        FockVector v = gen.vector(space, gen.uniform(0, 4));
        CHECK(space.apply_modes(modes, t, v) == poly.apply_modes(modes, t, v));
      }
    }
}

TEST_CASE("contraction route for a_lambda matches the generic route") {
  oracle::Gen gen(8);
  auto alg = oracle::model("p2");
  for (CentralSign sign : {CentralSign::Hilbert, CentralSign::Orbifold}) {
    FockSpace space(alg, sign);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<int> parts;
      for (int i = gen.uniform(1, 4); i > 0; --i) {
        int m = gen.uniform(1, 3);
        parts.push_back(gen.coin() ? m : -m);
      }
      GeneralizedPartition lambda(parts);
      AlgebraElement a = gen.element(*alg);
      Scalar c = gen.scalar();
      FockVector v = gen.vector(space, gen.uniform(0, 4), 4);
      FockVector fast = space.apply(PartitionTerm{c, lambda, a}, v);
      FockVector slow = c * space.apply(a_lambda_tau(*alg, lambda, a), v);
      CAPTURE(lambda.str());
      CHECK(fast == slow);
      if (!fast.is_zero() && v.level()) CHECK(fast.level() == *v.level() - lambda.size());
    }
  }
}

TEST_CASE("a_lambda_tau assembly") {
  auto alg = oracle::model("p2");
  FockSpace space(alg, CentralSign::Hilbert);
  OperatorExpr op = a_lambda_tau(*alg, GeneralizedPartition({-2, -1}), alg->point());
  REQUIRE(op.fixed_terms().modes.size() == 1);
  CHECK(op.fixed_terms().modes[0].modes == std::vector<int>{-2, -1});
  CHECK(space.apply(op, FockVector::vacuum()) == vec({{2, 2}, {1, 2}}));
  OperatorExpr one = a_lambda_tau(*alg, GeneralizedPartition({-1}), alg->basis_element(1));
  CHECK(space.apply(one, FockVector::vacuum()) == vec({{1, 1}}));
  CHECK_THROWS_AS(a_lambda_tau(*alg, GeneralizedPartition(), alg->unit()), EmptyPartition);
  CHECK_THROWS_AS(space.apply_modes({-1, -1}, alg->coproduct(alg->unit(), 1), FockVector::vacuum()), ArityMismatch);
}

TEST_CASE("cube zero mode examples") {
  auto alg = oracle::model("p2");
  FockSpace space(alg, CentralSign::Hilbert);
  OperatorExpr d = Scalar(fraction(-1, 6)) * cube_zero_mode(alg, alg->unit());
  CHECK(space.apply(d, FockVector::vacuum()).is_zero());
  CHECK(space.apply(d, vec({{1, 1}})).is_zero());
  CHECK(space.apply(d, vec({{1, 0}, {1, 0}})) == Scalar(-1) * vec({{2, 0}}));
  // Level grading.
  oracle::Gen gen(9);
  for (int level = 0; level <= 4; ++level) {
    FockVector out = space.apply(d, gen.vector(space, level));
    if (!out.is_zero()) CHECK(out.level() == level);
  }
}

TEST_CASE("commutators") {
  auto alg = oracle::model("p2");
  FockSpace space(alg, CentralSign::Hilbert);
  const auto h = alg->basis_element(1);
  CHECK(space.commutator(single(*alg, 1, h), single(*alg, -1, h), FockVector::vacuum()) ==
        Scalar(-1) * FockVector::vacuum());
  oracle::Gen gen(10);
  OperatorExpr f = single(*alg, 2, h) + single(*alg, -1, alg->unit());
  for (int t = 0; t < 10; ++t) CHECK(space.commutator(f, f, gen.vector(space, gen.uniform(0, 3))).is_zero());

  // k = s = 1 collapse to a scalar.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto ea = alg->basis_element(a), eb = alg->basis_element(b);
      OperatorExpr closed = tau_commutator(*alg, CentralSign::Hilbert, {1}, ea, {-1}, eb);
      CHECK(space.apply(closed, FockVector::vacuum()) == -alg->pair(ea, eb) * FockVector::vacuum());
      CHECK(space.commutator(single(*alg, 1, ea), single(*alg, -1, eb), FockVector::vacuum()) ==
            -alg->pair(ea, eb) * FockVector::vacuum());
    }
  CHECK(tau_commutator(*alg, CentralSign::Hilbert, {1, 2}, h, {1, -3}, h).is_zero());
}

TEST_CASE("closed-form commutator matches direct evaluation") {
  auto alg = oracle::model("p2");
  oracle::Gen gen(12);
  for (CentralSign sign : {CentralSign::Hilbert, CentralSign::Orbifold}) {
    FockSpace space(alg, sign);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> l, r;
      for (int i = gen.uniform(1, 3); i > 0; --i) l.push_back(gen.uniform(1, 2) * (gen.coin() ? 1 : -1));
      for (int i = gen.uniform(1, 3); i > 0; --i) r.push_back(gen.uniform(1, 2) * (gen.coin() ? 1 : -1));
      const auto a = gen.element(*alg), b = gen.element(*alg);
      OperatorExpr f = OperatorExpr::from(ModeTerm{Scalar(1), l, alg->coproduct(a, static_cast<int>(l.size()))});
      OperatorExpr g = OperatorExpr::from(ModeTerm{Scalar(1), r, alg->coproduct(b, static_cast<int>(r.size()))});
      OperatorExpr closed = tau_commutator(*alg, sign, l, a, r, b);
      FockVector v = gen.vector(space, gen.uniform(0, 3));
      CHECK(space.commutator(f, g, v) == space.apply(closed, v));
    }
  }
}

TEST_CASE("pairing") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  CHECK(hilb.pair(FockVector::vacuum(), FockVector::vacuum()) == Scalar(1));
  CHECK(hilb.pair(vec({{2, 1}}), vec({{2, 1}})) == Scalar(-2));
  CHECK(orb.pair(vec({{2, 1}}), vec({{2, 1}})) == Scalar(2));
  CHECK(hilb.pair(vec({{1, 1}}), vec({{2, 1}})).is_zero());

  oracle::Gen gen(13);
  for (int t = 0; t < 30; ++t) {
    // <a_{-1}(β) v, w> = −<v, a_1(β) w> on the Hilbert side.
    const int b = gen.uniform(0, 2);
    const int level = gen.uniform(0, 3);
    FockVector v = gen.vector(hilb, level), w = gen.vector(hilb, level + 1);
    CHECK(hilb.pair(hilb.apply_mode(-1, b, v), w) == -hilb.pair(v, hilb.apply_mode(1, b, w)));
    FockVector v2 = gen.vector(hilb, level), w2 = gen.vector(hilb, level + 2);
    CHECK(hilb.pair(hilb.apply_mode(-2, b, v2), w2) == hilb.pair(v2, hilb.apply_mode(2, b, w2)));
    CHECK(orb.pair(orb.apply_mode(-2, b, v2), w2) == orb.pair(v2, orb.apply_mode(2, b, w2)));
  }
  for (int level = 0; level <= 3; ++level) {
    auto basis = hilb.basis(level);
    for (const auto& x : basis)
      for (const auto& y : basis) {
        CHECK(hilb.pair(x, y) == oracle::matching_pair(*alg, CentralSign::Hilbert, x, y));
        CHECK(orb.pair(x, y) == oracle::matching_pair(*alg, CentralSign::Orbifold, x, y));
      }
  }
}

TEST_CASE("pairing is nondegenerate on P2 levels up to 5") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert);
  for (int level = 0; level <= 5; ++level) {
    auto basis = hilb.basis(level);
    Matrix gram(basis.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) gram[i][j] = hilb.pair(basis[i], basis[j]);
    CHECK(matrix_rank(gram) == basis.size());
  }
}
