#include "naklab/rings.hpp"

#include "json.hpp"
#include "naklab/notation.hpp"
#include "naklab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace naklab {

std::string to_string(RingSide side) { return side == RingSide::Orbifold ? "orbifold" : "quantum-corrected"; }

CentralSign central_sign(RingSide side) {
  return side == RingSide::Orbifold ? CentralSign::Orbifold : CentralSign::Hilbert;
}

GenerationFailure::GenerationFailure(int degree, std::size_t corank)
    : std::runtime_error("generator monomials miss " + std::to_string(corank) + " dimension(s) in degree " +
                         std::to_string(degree)),
      degree_(degree),
      corank_(corank) {}

namespace {

// Multisets (non-decreasing generator indices) of the given size and degree,
// in lexicographic order.
void multisets(const std::vector<RingGenerator>& gens, std::size_t size, int degree, int start, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (cur.size() == size) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  for (int g = start; g < static_cast<int>(gens.size()); ++g) {
    if (gens[g].degree > degree) continue;
    cur.push_back(g);
    multisets(gens, size, degree - gens[g].degree, g, cur, out);
    cur.pop_back();
  }
}

SparseVec coordinates(const FockVector& v, const std::map<NakajimaMonomial, std::size_t>& index) {
  SparseVec row;
  for (const auto& [m, c] : v.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw NotReduced("vector leaves the level-n basis");
    row[static_cast<int>(it->second)] = c;
  }
  return row;
}

}  // namespace

RingModel::RingModel(AlgebraPtr alg, RingSide side, int n, const OperatorOptions& opts)
    : alg_(std::move(alg)), side_(side), n_(n), space_(alg_, central_sign(side)) {
  if (n < 1) throw std::invalid_argument("ring level must be at least 1");
  basis_ = space_.basis(n);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  for (int k = 0; k < n; ++k)
    for (int b = 0; b < static_cast<int>(alg_->dim()); ++b) {
      // (0, 1) acts as n·Id and never helps to generate.
      if (k == 0 && b == alg_->unit_index()) continue;
      generators_.push_back({k, b, alg_->degree(b) + 2 * k});
      const AlgebraElement e = alg_->basis_element(b);
      ops_.push_back(side == RingSide::Orbifold ? ok_operator(alg_, k, e, opts) : gtilde_operator(alg_, k, e, opts));
    }

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < basis_.size(); ++i) by_degree[basis_[i].degree(*alg_)].push_back(i);

  std::map<std::vector<int>, FockVector> memo;
  memo.emplace(std::vector<int>{}, space_.unit_class(n));
  std::function<const FockVector&(const std::vector<int>&)> eval = [&](const std::vector<int>& m) -> const FockVector& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<int> rest(m.begin() + 1, m.end());
    FockVector v = space_.apply(ops_[m.front()], eval(rest));
    return memo.emplace(m, std::move(v)).first->second;
  };

  reduction_.resize(basis_.size());
  for (const auto& [degree, members] : by_degree) {
    Eliminator elim;
    for (std::size_t count = 0; elim.rank() < members.size() && 2 * count <= static_cast<std::size_t>(degree);
         ++count) {
      std::vector<std::vector<int>> candidates;
      std::vector<int> cur;
      multisets(generators_, count, degree, 0, cur, candidates);
      for (const auto& m : candidates) {
        if (elim.rank() == members.size()) break;
        const int id = static_cast<int>(monomials_.size());
        if (elim.add(coordinates(eval(m), index_), id)) monomials_.push_back(m);
      }
    }
    certificate_[degree] = {elim.rank(), members.size()};
    if (elim.rank() < members.size()) throw GenerationFailure(degree, members.size() - elim.rank());
    for (std::size_t b : members) {
      auto combo = elim.express(SparseVec{{static_cast<int>(b), Scalar(1)}});
      if (!combo) throw GenerationFailure(degree, 1);
      reduction_[b] = std::move(*combo);
    }
  }
}

std::optional<std::size_t> RingModel::index_of(const NakajimaMonomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FockVector RingModel::apply_monomial(const std::vector<int>& multiset, const FockVector& w) const {
  FockVector cur = w;
  for (auto it = multiset.rbegin(); it != multiset.rend() && !cur.is_zero(); ++it) cur = space_.apply(ops_[*it], cur);
  return cur;
}

FockVector RingModel::evaluate(const std::vector<int>& generator_multiset) const {
  return apply_monomial(generator_multiset, space_.unit_class(n_));
}

FockVector RingModel::generator_class(int g) const { return evaluate({g}); }

std::optional<int> RingModel::find_generator(int k, int basis) const {
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (generators_[g].k == k && generators_[g].basis == basis) return static_cast<int>(g);
  return std::nullopt;
}

FockVector RingModel::product(const FockVector& v, const FockVector& w) const {
  FockVector out;
  for (const auto& [m, c] : v.terms()) {
    auto idx = index_of(m);
    if (!idx) throw NotReduced("monomial is not in the level-" + std::to_string(n_) + " basis");
    for (const auto& [id, coeff] : reduction_[*idx]) {
      FockVector part = apply_monomial(monomials_[id], w);
      part *= c * coeff;
      out += part;
    }
  }
  return out;
}

Scalar RingModel::triple_product(const FockVector& v, const FockVector& w, const FockVector& u) const {
  return space_.pair(product(v, w), u);
}

std::vector<StructureConstant> RingModel::structure_constants() const {
  const std::size_t d = basis_.size();
  std::vector<std::vector<StructureConstant>> rows(d * d);
  parallel_for(d * d, [&](std::size_t cell) {
    const std::size_t i = cell / d, j = cell % d;
    FockVector prod = product(FockVector::monomial(basis_[i]), FockVector::monomial(basis_[j]));
    for (const auto& [m, c] : prod.terms()) {
      auto k = index_of(m);
      if (!k) throw NotReduced("product leaves the level-n basis");
      rows[cell].push_back({m.degree(*alg_), static_cast<int>(i), static_cast<int>(j), static_cast<int>(*k), c});
    }
  });
  std::vector<StructureConstant> out;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

namespace {

FockVector psi_with(const FockVector& v, int direction) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) out.add(m, c * Scalar::i_power(direction * m.age()));
  return out;
}

}  // namespace

FockVector psi(const FockVector& v) { return psi_with(v, -1); }
FockVector psi_inverse(const FockVector& v) { return psi_with(v, 1); }

IsoReport verify_iso(const RingModel& orbifold, const RingModel& quantum) {
  if (orbifold.side() != RingSide::Orbifold || quantum.side() != RingSide::QuantumCorrected)
    throw std::invalid_argument("verify_iso expects (orbifold, quantum-corrected)");
  if (orbifold.n() != quantum.n()) throw std::invalid_argument("verify_iso needs rings of the same level");
  const auto& basis = orbifold.basis();
  const std::size_t d = basis.size();
  std::vector<std::optional<std::pair<FockVector, FockVector>>> mismatch(d * d);
  parallel_for(d * d, [&](std::size_t cell) {
    const auto v = FockVector::monomial(basis[cell / d]);
    const auto w = FockVector::monomial(basis[cell % d]);
    FockVector lhs = psi(orbifold.product(v, w));
    FockVector rhs = quantum.product(psi(v), psi(w));
    if (!(lhs == rhs)) mismatch[cell] = std::make_pair(std::move(lhs), std::move(rhs));
  });
  IsoReport report;
  report.checks = d * d;
  for (std::size_t cell = 0; cell < d * d; ++cell)
    if (mismatch[cell]) {
      report.passed = false;
      report.counterexample = std::make_tuple(cell / d, cell % d, mismatch[cell]->first, mismatch[cell]->second);
      break;
    }
  return report;
}

IsoReport verify_pairing(const AlgebraPtr& alg, int max_level) {
  FockSpace orb(alg, CentralSign::Orbifold), hilb(alg, CentralSign::Hilbert);
  IsoReport report;
  for (int level = 0; level <= max_level; ++level) {
    const auto basis = orb.basis(level);
    const std::size_t d = basis.size();
    std::vector<std::optional<std::pair<Scalar, Scalar>>> mismatch(d * d);
    parallel_for(d * d, [&](std::size_t cell) {
      const auto v = FockVector::monomial(basis[cell / d]);
      const auto w = FockVector::monomial(basis[cell % d]);
      Scalar lhs = orb.pair(v, w);
      Scalar rhs = hilb.pair(psi(v), psi(w));
      if (lhs != rhs) mismatch[cell] = std::make_pair(lhs, rhs);
    });
    report.checks += d * d;
    for (std::size_t cell = 0; cell < d * d && report.passed; ++cell)
      if (mismatch[cell]) {
        report.passed = false;
        report.counterexample = std::make_tuple(cell / d, cell % d, mismatch[cell]->first * FockVector::vacuum(),
                                                mismatch[cell]->second * FockVector::vacuum());
      }
  }
  return report;
}

std::string structure_constants_csv(const RingModel& ring) {
  std::ostringstream out;
  out << "degree,i,j,k,re,im\n";
  for (const auto& sc : ring.structure_constants())
    out << sc.degree << ',' << sc.i << ',' << sc.j << ',' << sc.k << ',' << rational_fraction_string(sc.value.re())
        << ',' << rational_fraction_string(sc.value.im()) << '\n';
  return out.str();
}

namespace {

nlohmann::ordered_json basis_json(const RingModel& ring) {
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  const auto& alg = ring.space().algebra();
  for (std::size_t i = 0; i < ring.basis().size(); ++i)
    basis.push_back({{"index", i},
                     {"degree", ring.basis()[i].degree(alg)},
                     {"monomial", format_monomial(alg, ring.space().sign(), ring.basis()[i])}});
  return basis;
}

}  // namespace

std::string structure_constants_json(const RingModel& ring) {
  nlohmann::ordered_json doc;
  doc["side"] = to_string(ring.side());
  doc["model"] = ring.space().algebra().name();
  doc["n"] = ring.n();
  doc["basis"] = basis_json(ring);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& sc : ring.structure_constants())
    entries.push_back({{"degree", sc.degree},
                       {"i", sc.i},
                       {"j", sc.j},
                       {"k", sc.k},
                       {"re", rational_fraction_string(sc.value.re())},
                       {"im", rational_fraction_string(sc.value.im())}});
  doc["constants"] = entries;
  return doc.dump(2) + "\n";
}

std::string reduction_table_json(const RingModel& ring) {
  nlohmann::ordered_json doc;
  doc["side"] = to_string(ring.side());
  doc["model"] = ring.space().algebra().name();
  doc["n"] = ring.n();
  doc["basis"] = basis_json(ring);
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : ring.generators())
    gens.push_back({{"k", g.k}, {"basis", ring.space().algebra().basis_name(g.basis)}, {"degree", g.degree}});
  doc["generators"] = gens;
  doc["generator_monomials"] = ring.generator_monomials();
  nlohmann::ordered_json red = nlohmann::ordered_json::array();
  for (std::size_t b = 0; b < ring.reduction().size(); ++b) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [id, c] : ring.reduction()[b])
      terms.push_back({{"monomial", id}, {"re", rational_fraction_string(c.re())}, {"im", rational_fraction_string(c.im())}});
    red.push_back({{"basis", b}, {"terms", terms}});
  }
  doc["reduction"] = red;
  nlohmann::ordered_json cert = nlohmann::ordered_json::array();
  for (const auto& [deg, rs] : ring.rank_certificate())
    cert.push_back({{"degree", deg}, {"rank", rs.first}, {"size", rs.second}});
  doc["rank_certificate"] = cert;
  return doc.dump(2) + "\n";
}

}  // namespace naklab
