#include "doctest.h"
#include "oracles.hpp"

#include "naklab/rings.hpp"

#include <sstream>

using namespace naklab;

namespace {

FockVector basis_vec(const RingModel& r, std::size_t i) { return FockVector::monomial(r.basis()[i]); }

// Parses the CSV export back into (i, j, k) → value.
std::map<std::tuple<int, int, int>, Scalar> read_csv(const std::string& text) {
  std::map<std::tuple<int, int, int>, Scalar> out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() == 6);
    out[{std::stoi(cells[1]), std::stoi(cells[2]), std::stoi(cells[3])}] =
        Scalar(parse_rational(cells[4]), parse_rational(cells[5]));
  }
  return out;
}

}  // namespace

TEST_CASE("level one ring is the algebra") {
  auto alg = oracle::model("p2");
  for (RingSide side : {RingSide::Orbifold, RingSide::QuantumCorrected}) {
    RingModel r(alg, side, 1);
    REQUIRE(r.basis().size() == alg->dim());
    for (std::size_t i = 0; i < r.basis().size(); ++i)
      for (std::size_t j = 0; j < r.basis().size(); ++j) {
        const int bi = r.basis()[i].factors()[0].basis, bj = r.basis()[j].factors()[0].basis;
        AlgebraElement prod = alg->multiply(alg->basis_element(bi), alg->basis_element(bj));
        FockVector expected;
        for (std::size_t c = 0; c < prod.dim(); ++c)
          expected.add(NakajimaMonomial({Factor{1, static_cast<int>(c)}}), prod[c]);
        CHECK(r.product(basis_vec(r, i), basis_vec(r, j)) == expected);
      }
  }
}

TEST_CASE("ring examples") {
  auto alg = oracle::model("p2");
  RingModel qc(alg, RingSide::QuantumCorrected, 2);
  for (int b = 0; b < 3; ++b) {
    auto g = qc.find_generator(1, b);
    REQUIRE(g);
    CHECK(FockVector::monomial(NakajimaMonomial({Factor{2, b}})) == Scalar(-2) * qc.generator_class(*g));
  }
  RingModel orb(alg, RingSide::Orbifold, 2);
  auto g = orb.find_generator(0, 1);
  REQUIRE(g);
  FockVector p2_1 = FockVector::monomial(NakajimaMonomial({Factor{2, 0}}));
  CHECK(orb.product(orb.generator_class(*g), p2_1) ==
        FockVector::monomial(NakajimaMonomial({Factor{2, 1}}), Scalar(2)));
  CHECK(!orb.find_generator(0, 0));
  CHECK(orb.find_generator(1, 0));
  CHECK(!orb.find_generator(2, 0));
}

TEST_CASE("ring axioms") {
  oracle::Gen gen(41);
  for (const char* name : {"p2", "p1xp1"})
    for (RingSide side : {RingSide::Orbifold, RingSide::QuantumCorrected})
      for (int n = 2; n <= 3; ++n) {
        auto alg = oracle::model(name);
        RingModel r(alg, side, n);
        const FockSpace& s = r.space();
        const FockVector unit = s.unit_class(n);
        for (const auto& [degree, cert] : r.rank_certificate()) CHECK(cert.first == cert.second);
        for (int t = 0; t < 12; ++t) {
          FockVector v = gen.vector(s, n), w = gen.vector(s, n), u = gen.vector(s, n);
          CHECK(r.product(unit, v) == v);
          CHECK(r.product(v, unit) == v);
          CHECK(r.product(v, w) == r.product(w, v));
          CHECK(r.product(r.product(v, w), u) == r.product(v, r.product(w, u)));
          const Scalar t0 = r.triple_product(v, w, u);
          CHECK(t0 == r.triple_product(w, v, u));
          CHECK(t0 == r.triple_product(u, w, v));
          CHECK(t0 == r.triple_product(v, u, w));
          CHECK(r.triple_product(unit, v, w) == s.pair(v, w));
        }
        // Degree additivity on basis pairs.
        for (std::size_t i = 0; i < r.basis().size(); ++i)
          for (std::size_t j = 0; j < r.basis().size(); ++j) {
            FockVector p = r.product(basis_vec(r, i), basis_vec(r, j));
            if (p.is_zero()) continue;
            const int expected = r.basis()[i].degree(*alg) + r.basis()[j].degree(*alg);
            CHECK(p.degree(*alg) == expected);
          }
      }
}

TEST_CASE("product does not depend on the chosen expression") {
  // Multiplying by a generator monomial's class must equal applying its
  // operators, whichever reduction path the table picked.
  auto alg = oracle::model("p2");
  RingModel r(alg, RingSide::QuantumCorrected, 3);
  oracle::Gen gen(42);
  for (std::size_t m = 0; m < r.generator_monomials().size(); ++m) {
    const auto& ms = r.generator_monomials()[m];
    FockVector w = gen.vector(r.space(), 3);
    FockVector direct = w;
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) direct = r.space().apply(r.generator_operator(*it), direct);
    CHECK(r.product(r.evaluate(ms), w) == direct);
  }
}

TEST_CASE("psi") {
  auto alg = oracle::model("p2");
  FockVector v = FockVector::monomial(NakajimaMonomial({Factor{1, 1}, Factor{1, 1}}));
  CHECK(psi(v) == v);
  FockVector w = FockVector::monomial(NakajimaMonomial({Factor{2, 0}}));
  CHECK(psi(w) == Scalar(Rational(0), Rational(-1)) * w);
  CHECK(psi_inverse(psi(w)) == w);
  oracle::Gen gen(43);
  FockSpace s(alg, CentralSign::Orbifold);
  for (int t = 0; t < 20; ++t) {
    FockVector x = gen.vector(s, gen.uniform(0, 5));
    CHECK(psi_inverse(psi(x)) == x);
  }
}

TEST_CASE("isomorphism and its negative control") {
  auto alg = oracle::model("p2");
  for (int n = 1; n <= 3; ++n) {
    IsoReport rep = verify_iso(RingModel(alg, RingSide::Orbifold, n), RingModel(alg, RingSide::QuantumCorrected, n));
    CHECK(rep.passed);
    CHECK(rep.checks > 0);
  }
  OperatorOptions mutated;
  mutated.mutate_sign = true;
  IsoReport bad =
      verify_iso(RingModel(alg, RingSide::Orbifold, 2), RingModel(alg, RingSide::QuantumCorrected, 2, mutated));
  CHECK(!bad.passed);
  CHECK(bad.counterexample.has_value());
  CHECK(verify_pairing(alg, 3).passed);
}

TEST_CASE("structure constant exports") {
  auto alg = oracle::model("p2");
  RingModel r(alg, RingSide::Orbifold, 2);
  const std::string csv = structure_constants_csv(r);
  CHECK(csv.rfind("degree,i,j,k,re,im\n", 0) == 0);
  CHECK(csv == structure_constants_csv(RingModel(alg, RingSide::Orbifold, 2)));
  auto table = read_csv(csv);
  for (const auto& c : r.structure_constants()) CHECK(table.at({c.i, c.j, c.k}) == c.value);
  CHECK(table.size() == r.structure_constants().size());
  for (std::size_t i = 0; i < r.basis().size(); ++i)
    for (std::size_t j = 0; j < r.basis().size(); ++j) {
      FockVector p = r.product(basis_vec(r, i), basis_vec(r, j));
      for (std::size_t k = 0; k < r.basis().size(); ++k) {
        auto it = table.find({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
        CHECK(p.coefficient(r.basis()[k]) == (it == table.end() ? Scalar() : it->second));
      }
    }
  CHECK(!structure_constants_json(r).empty());
  CHECK(reduction_table_json(r).find("rank_certificate") != std::string::npos);
}
