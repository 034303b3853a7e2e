#include "doctest.h"
#include "oracles.hpp"

#include "naklab/operators.hpp"

using namespace naklab;

namespace {

FockVector vec(std::initializer_list<std::pair<int, int>> factors, Scalar c = Scalar(1)) {
  std::vector<Factor> f;
  for (auto [n, b] : factors) f.push_back(Factor{n, b});
  return FockVector::monomial(NakajimaMonomial(f), c);
}

OperatorExpr mode(const GradedFrobeniusAlgebra& alg, int m, const AlgebraElement& a) {
  return OperatorExpr::from(ModeTerm{Scalar(1), {m}, alg.coproduct(a, 1)});
}

}  // namespace

TEST_CASE("number operator") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  OperatorExpr g0 = gtilde_operator(alg, 0, alg->unit());
  OperatorExpr o0 = ok_operator(alg, 0, alg->unit());
  for (int level = 0; level <= 4; ++level)
    for (const auto& m : hilb.basis(level)) {
      FockVector v = FockVector::monomial(m);
      CHECK(hilb.apply(g0, v) == Scalar(level) * v);
      CHECK(orb.apply(o0, v) == Scalar(level) * v);
    }
}

TEST_CASE("orbifold and Hilbert operator examples") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  const auto h = alg->basis_element(1);
  CHECK(orb.apply(ok_operator(alg, 0, h), vec({{2, 0}})) == vec({{2, 1}}, Scalar(2)));
  CHECK(hilb.apply(gtilde_operator(alg, 1, alg->unit()), vec({{1, 0}, {1, 0}})) == vec({{2, 0}}, Scalar(-1)));
  CHECK(hilb.apply(lehn_g1(alg, alg->unit()), vec({{1, 1}})).is_zero());

}

TEST_CASE("𝔒₂ e-term coefficients") {
  // On p_{-m}(1)|0> only the quadratic e-term (−m, m) returns a single factor;
  // with e = 3x its coefficient on p_{-m}(x)|0> is 3m(2m²−2)/24.
  auto alg = oracle::model("p2");
  FockSpace orb(alg, CentralSign::Orbifold);
  OperatorExpr o2 = ok_operator(alg, 2, alg->unit());
  for (int m = 1; m <= 4; ++m) {
    FockVector out = orb.apply(o2, vec({{m, 0}}));
    CHECK(out.coefficient(NakajimaMonomial({Factor{m, 2}})) == Scalar(fraction(m * (m * m - 1), 4)));
  }
}

TEST_CASE("empty partition flag") {
  auto alg = oracle::model("p2");
  FockSpace orb(alg, CentralSign::Orbifold);
  OperatorExpr plain = ok_operator(alg, 0, alg->unit());
  OperatorExpr with = ok_operator(alg, 0, alg->unit(), OperatorOptions{true, false});
  CHECK(orb.apply(plain, FockVector::vacuum()).is_zero());
  FockVector v = vec({{1, 1}});
  CHECK(orb.apply(with, v) != orb.apply(plain, v));
}

TEST_CASE("K = 0 model: Lehn operator is the cubic term") {
  auto alg = oracle::model("k0");
  FockSpace hilb(alg, CentralSign::Hilbert);
  OperatorExpr lehn = lehn_g1(alg, alg->unit());
  OperatorExpr cube = curly_boundary(alg);
  for (int level = 0; level <= 4; ++level)
    for (const auto& m : hilb.basis(level)) CHECK(hilb.apply(lehn, FockVector::monomial(m)) == hilb.apply(cube, FockVector::monomial(m)));
}

TEST_CASE("K-term of the Lehn operator") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert);
  for (int b = 0; b < 3; ++b) {
    const auto beta = alg->basis_element(b);
    FockVector round = hilb.commutator(boundary_operator(alg), mode(*alg, -2, beta), FockVector::vacuum());
    FockVector curly = hilb.commutator(curly_boundary(alg), mode(*alg, -2, beta), FockVector::vacuum());
    FockVector k_term = hilb.apply(mode(*alg, -2, alg->multiply(alg->canonical_class(), beta)), FockVector::vacuum());
    CHECK(round - curly == k_term);
  }
}

TEST_CASE("𝔊̃₁(1) coincides with the cubic zero mode") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert);
  OperatorExpr g1 = gtilde_operator(alg, 1, alg->unit());
  OperatorExpr cube = curly_boundary(alg);
  for (int level = 0; level <= 4; ++level)
    for (const auto& m : hilb.basis(level))
      CHECK(hilb.apply(g1, FockVector::monomial(m)) == hilb.apply(cube, FockVector::monomial(m)));
  FockSpace orb(alg, CentralSign::Orbifold);
  OperatorExpr o1 = ok_operator(alg, 1, alg->unit());
  for (int level = 0; level <= 4; ++level)
    for (const auto& m : orb.basis(level))
      CHECK(orb.apply(o1, FockVector::monomial(m)) == orb.apply(cube, FockVector::monomial(m)));
}

TEST_CASE("curly closed form") {
  auto alg = oracle::model("p2");
  const auto h = alg->basis_element(1);
  for (CentralSign sign : {CentralSign::Hilbert, CentralSign::Orbifold}) {
    FockSpace space(alg, sign);
    // k = 0 is the bare mode.
    for (int level = 0; level <= 2; ++level)
      for (const auto& m : space.basis(level)) {
        FockVector v = FockVector::monomial(m);
        CHECK(space.apply(curly_closed_form(alg, sign, -1, h, 0), v) == space.apply(mode(*alg, -1, h), v));
      }
    const OperatorExpr d = curly_boundary(alg);
    for (int m : {-2, -1, 1, 2})
      for (int k = 1; k <= 2; ++k)
        for (int level = 0; level <= 3; ++level)
          for (const auto& mono : space.basis(level)) {
            FockVector v = FockVector::monomial(mono);
            CAPTURE(m);
            CAPTURE(k);
            CHECK(derivative_tower(space, d, mode(*alg, m, h), k, v) == space.apply(curly_closed_form(alg, sign, m, h, k), v));
          }
  }
}

TEST_CASE("classes and their low-k closed forms") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int b = 0; b < 3; ++b) {
        const auto a = alg->basis_element(b);
        CHECK(hilb.apply(gtilde_operator(alg, k, a), hilb.unit_class(n)) == gtilde_class(hilb, k, a, n));
        CHECK(orb.apply(ok_operator(alg, k, a), orb.unit_class(n)) == ok_class(orb, k, a, n));
      }
  for (int n = 1; n <= 5; ++n)
    for (int b = 0; b < 3; ++b) {
      const auto a = alg->basis_element(b);
      for (const FockSpace* s : {&hilb, &orb}) {
        FockVector g0 = unit_power(*s, n - 1).concat(vec({{1, b}}));
        FockVector g1 = n >= 2 ? Scalar(fraction(-1, 2)) * unit_power(*s, n - 2).concat(vec({{2, b}})) : FockVector();
        const bool h = s == &hilb;
        CHECK((h ? gtilde_class(*s, 0, a, n) : ok_class(*s, 0, a, n)) == g0);
        CHECK((h ? gtilde_class(*s, 1, a, n) : ok_class(*s, 1, a, n)) == g1);
      }
    }
  CHECK(unit_power(hilb, -1).is_zero());
  CHECK(unit_power(hilb, 0) == FockVector::vacuum());
}

TEST_CASE("operators are degree homogeneous") {
  auto alg = oracle::model("p1xp1");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  oracle::Gen gen(31);
  for (int t = 0; t < 30; ++t) {
    const int k = gen.uniform(0, 3);
    const int b = gen.uniform(0, static_cast<int>(alg->dim()) - 1);
    const auto a = alg->basis_element(b);
    const int level = gen.uniform(1, 4);
    const auto basis = hilb.basis(level);
    const auto& m = basis[gen.uniform(0, static_cast<int>(basis.size()) - 1)];
    const int expected = m.degree(*alg) + alg->spec().basis[b].degree + 2 * k;
    FockVector x = hilb.apply(gtilde_operator(alg, k, a), FockVector::monomial(m));
    FockVector y = orb.apply(ok_operator(alg, k, a), FockVector::monomial(m));
    if (!x.is_zero()) CHECK(x.degree(*alg) == expected);
    if (!y.is_zero()) CHECK(y.degree(*alg) == expected);
  }
}

TEST_CASE("bracket with a creation mode matches the closed form") {
  auto alg = oracle::model("p2");
  FockSpace hilb(alg, CentralSign::Hilbert), orb(alg, CentralSign::Orbifold);
  for (int k = 0; k <= 2; ++k)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const auto x = alg->basis_element(a), y = alg->basis_element(b);
        const Scalar inv(Rational(1) / factorial(k));
        for (int level = 0; level <= 2; ++level)
          for (const auto& m : hilb.basis(level)) {
            FockVector v = FockVector::monomial(m);
            CHECK(hilb.commutator(gtilde_operator(alg, k, x), mode(*alg, -1, y), v) ==
                  inv * hilb.apply(curly_closed_form(alg, CentralSign::Hilbert, -1, alg->multiply(x, y), k), v));
            CHECK(orb.commutator(ok_operator(alg, k, x), mode(*alg, -1, y), v) ==
                  inv * orb.apply(curly_closed_form(alg, CentralSign::Orbifold, -1, alg->multiply(x, y), k), v));
          }
      }
}
