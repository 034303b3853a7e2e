#include "naklab/suites.hpp"

#include "naklab/notation.hpp"
#include "naklab/parallel.hpp"
#include "naklab/rings.hpp"

#include <random>

namespace naklab {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

struct TaskResult {
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;
};

class Checker {
 public:
  Checker(const GradedFrobeniusAlgebra& alg, CentralSign sign, TaskResult& out) : alg_(alg), sign_(sign), out_(out) {}

  void vectors(const nlohmann::ordered_json& inputs, const FockVector& expected, const FockVector& got) {
    ++out_.checks;
    if (expected == got) return;
    out_.failures.push_back({inputs, format_vector(alg_, sign_, expected), format_vector(alg_, sign_, got)});
  }

  void scalars(const nlohmann::ordered_json& inputs, const Scalar& expected, const Scalar& got) {
    ++out_.checks;
    if (expected == got) return;
    out_.failures.push_back({inputs, expected.str(), got.str()});
  }

 private:
  const GradedFrobeniusAlgebra& alg_;
  CentralSign sign_;
  TaskResult& out_;
};

SuiteReport merge(const std::string& name, std::vector<TaskResult>& results) {
  SuiteReport report;
  report.suite = name;
  for (auto& r : results) {
    report.checks += r.checks;
    report.failure_count += r.failures.size();
    for (auto& f : r.failures)
      if (report.failures.size() < kMaxListedFailures) report.failures.push_back(std::move(f));
  }
  return report;
}

std::vector<NakajimaMonomial> states_up_to(const FockSpace& space, int max_level) {
  std::vector<NakajimaMonomial> out;
  for (int level = 0; level <= max_level; ++level) {
    auto b = space.basis(level);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string state_name(const FockSpace& space, const NakajimaMonomial& m) {
  return format_monomial(space.algebra(), space.sign(), m);
}

const char* side_name(CentralSign s) { return s == CentralSign::Hilbert ? "hilbert" : "orbifold"; }

OperatorExpr single_mode(const GradedFrobeniusAlgebra& alg, int mode, const AlgebraElement& alpha) {
  return OperatorExpr::from(ModeTerm{Scalar(1), {mode}, alg.coproduct(alpha, 1)});
}

SuiteReport heisenberg_suite(const SuiteConfig& cfg) {
  const auto& alg = *cfg.alg;
  const int dim = static_cast<int>(alg.dim());
  std::vector<std::pair<CentralSign, NakajimaMonomial>> tasks;
  for (CentralSign sign : {CentralSign::Hilbert, CentralSign::Orbifold})
    for (auto& m : states_up_to(FockSpace(cfg.alg, sign), cfg.max_n)) tasks.emplace_back(sign, m);
  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto& [sign, mono] = tasks[t];
    FockSpace space(cfg.alg, sign);
    Checker check(alg, sign, results[t]);
    const FockVector v = FockVector::monomial(mono);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (int m = -cfg.max_n; m <= cfg.max_n; ++m)
          for (int n = -cfg.max_n; n <= cfg.max_n; ++n) {
            if (m == 0 || n == 0) continue;
            FockVector got = space.apply_mode(m, a, space.apply_mode(n, b, v)) -
                             space.apply_mode(n, b, space.apply_mode(m, a, v));
            FockVector expected;
            if (m == -n) expected = Scalar(central_value(sign) * m) * alg.pairing(a, b) * v;
            check.vectors({{"side", side_name(sign)},
                           {"m", m},
                           {"alpha", alg.basis_name(a)},
                           {"n", n},
                           {"beta", alg.basis_name(b)},
                           {"state", state_name(space, mono)}},
                          expected, got);
          }
  });
  return merge("heisenberg", results);
}

SuiteReport tau_suite(const SuiteConfig& cfg) {
  const auto& alg = *cfg.alg;
  std::mt19937_64 rng(cfg.seed);
  const int bound = std::max(1, std::min(cfg.max_n, 3));
  auto draw_mode = [&] {
    std::uniform_int_distribution<int> d(1, bound);
    int v = d(rng);
    return std::bernoulli_distribution(0.5)(rng) ? v : -v;
  };
  struct Sample {
    std::vector<int> left, right;
    int alpha, beta;
  };
  std::vector<Sample> samples;
  std::uniform_int_distribution<int> len(1, 3), basis(0, static_cast<int>(alg.dim()) - 1);
  for (int s = 0; s < cfg.samples && cfg.max_n > 0; ++s) {
    Sample smp;
    for (int i = len(rng); i > 0; --i) smp.left.push_back(draw_mode());
    for (int i = len(rng); i > 0; --i) smp.right.push_back(draw_mode());
    // Most samples get at least one contracting pair.
    if (std::bernoulli_distribution(0.75)(rng)) {
      std::uniform_int_distribution<std::size_t> pl(0, smp.left.size() - 1), pr(0, smp.right.size() - 1);
      smp.right[pr(rng)] = -smp.left[pl(rng)];
    }
    smp.alpha = basis(rng);
    smp.beta = basis(rng);
    samples.push_back(std::move(smp));
  }
  std::vector<TaskResult> results(samples.size() * 2);
  parallel_for(results.size(), [&](std::size_t t) {
    const Sample& smp = samples[t / 2];
    const CentralSign sign = t % 2 == 0 ? CentralSign::Hilbert : CentralSign::Orbifold;
    FockSpace space(cfg.alg, sign);
    Checker check(alg, sign, results[t]);
    const auto alpha = alg.basis_element(smp.alpha), beta = alg.basis_element(smp.beta);
    const OperatorExpr f = OperatorExpr::from(
        ModeTerm{Scalar(1), smp.left, alg.coproduct(alpha, static_cast<int>(smp.left.size()))});
    const OperatorExpr g = OperatorExpr::from(
        ModeTerm{Scalar(1), smp.right, alg.coproduct(beta, static_cast<int>(smp.right.size()))});
    const OperatorExpr closed = tau_commutator(alg, sign, smp.left, alpha, smp.right, beta);
    for (const auto& mono : states_up_to(space, cfg.max_n)) {
      const FockVector v = FockVector::monomial(mono);
      check.vectors({{"side", side_name(sign)},
                     {"left", smp.left},
                     {"alpha", alg.basis_name(smp.alpha)},
                     {"right", smp.right},
                     {"beta", alg.basis_name(smp.beta)},
                     {"state", state_name(space, mono)}},
                    space.commutator(f, g, v), space.apply(closed, v));
    }
  });
  return merge("tau", results);
}

struct PairTask {
  int k, a, b;
  NakajimaMonomial state;
};

std::vector<PairTask> pair_tasks(const SuiteConfig& cfg, CentralSign sign) {
  std::vector<PairTask> tasks;
  const int dim = static_cast<int>(cfg.alg->dim());
  const auto states = states_up_to(FockSpace(cfg.alg, sign), cfg.max_n - 1);
  for (int k = 0; k <= cfg.max_k; ++k)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        for (const auto& s : states) tasks.push_back({k, a, b, s});
  return tasks;
}

SuiteReport thm31iii_suite(const SuiteConfig& cfg) {
  const auto& alg = *cfg.alg;
  const CentralSign sign = CentralSign::Orbifold;
  FockSpace space(cfg.alg, sign);
  const auto tasks = pair_tasks(cfg, sign);
  const OperatorExpr d = curly_boundary(cfg.alg);
  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto& task = tasks[t];
    Checker check(alg, sign, results[t]);
    const auto alpha = alg.basis_element(task.a), beta = alg.basis_element(task.b);
    const auto ab = alg.multiply(alpha, beta);
    const FockVector v = FockVector::monomial(task.state);
    const OperatorExpr ok = ok_operator(cfg.alg, task.k, alpha, cfg.options);
    const OperatorExpr creator = single_mode(alg, -1, beta);
    const Scalar inv_fact(1 / factorial(task.k));

    FockVector bracket = space.commutator(ok, creator, v);
    FockVector tower = inv_fact * derivative_tower(space, d, single_mode(alg, -1, ab), task.k, v);
    FockVector closed = inv_fact * space.apply(curly_closed_form(cfg.alg, sign, -1, ab, task.k), v);
    nlohmann::ordered_json in{{"k", task.k},
                              {"alpha", alg.basis_name(task.a)},
                              {"beta", alg.basis_name(task.b)},
                              {"state", state_name(space, task.state)}};
    in["compare"] = "bracket vs tower";
    check.vectors(in, tower, bracket);
    in["compare"] = "closed form vs tower";
    check.vectors(in, tower, closed);
  });
  return merge("thm31iii", results);
}

SuiteReport axiom_a2_suite(const SuiteConfig& cfg) {
  const auto& alg = *cfg.alg;
  const CentralSign sign = CentralSign::Hilbert;
  FockSpace space(cfg.alg, sign);
  const auto tasks = pair_tasks(cfg, sign);
  const OperatorExpr d = curly_boundary(cfg.alg);
  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto& task = tasks[t];
    Checker check(alg, sign, results[t]);
    const auto alpha = alg.basis_element(task.a), beta = alg.basis_element(task.b);
    const auto ab = alg.multiply(alpha, beta);
    const FockVector v = FockVector::monomial(task.state);
    const OperatorExpr gk = gtilde_operator(cfg.alg, task.k, alpha, cfg.options);
    FockVector bracket = space.commutator(gk, single_mode(alg, -1, beta), v);
    FockVector closed =
        Scalar(1 / factorial(task.k)) * space.apply(curly_closed_form(cfg.alg, sign, -1, ab, task.k), v);
    check.vectors({{"k", task.k},
                   {"alpha", alg.basis_name(task.a)},
                   {"beta", alg.basis_name(task.b)},
                   {"state", state_name(space, task.state)},
                   {"compare", "bracket vs closed form"}},
                  closed, bracket);
    // Closed form of the curly tower itself, for a few modes (β unused).
    if (task.b != 0) return;
    for (int m : {-2, -1, 1, 2}) {
      FockVector tower = derivative_tower(space, d, single_mode(alg, m, alpha), task.k, v);
      FockVector form = space.apply(curly_closed_form(cfg.alg, sign, m, alpha, task.k), v);
      check.vectors({{"k", task.k},
                     {"m", m},
                     {"alpha", alg.basis_name(task.a)},
                     {"state", state_name(space, task.state)},
                     {"compare", "curly tower vs closed form"}},
                    tower, form);
    }
  });
  return merge("axiomA2", results);
}

// Closed forms of the k = 0, 1 classes: 1_{−(n−1)}a_{−1}(α) and
// −1/2 · 1_{−(n−2)}a_{−2}(α).
FockVector low_class(const FockSpace& space, int k, int basis, int n) {
  FockVector unit = unit_power(space, n - k - 1);
  FockVector creator = FockVector::monomial(NakajimaMonomial({Factor{k + 1, basis}}));
  FockVector out = unit.concat(creator);
  if (k == 1) out *= Scalar(fraction(-1, 2));
  return out;
}

SuiteReport classes_suite(const SuiteConfig& cfg) {
  const auto& alg = *cfg.alg;
  struct Task {
    CentralSign sign;
    int k, a, n;
  };
  std::vector<Task> tasks;
  for (CentralSign sign : {CentralSign::Orbifold, CentralSign::Hilbert})
    for (int k = 0; k <= cfg.max_k; ++k)
      for (int a = 0; a < static_cast<int>(alg.dim()); ++a)
        for (int n = 1; n <= cfg.max_n; ++n) tasks.push_back({sign, k, a, n});
  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto& task = tasks[t];
    FockSpace space(cfg.alg, task.sign);
    Checker check(alg, task.sign, results[t]);
    const bool orb = task.sign == CentralSign::Orbifold;
    const auto alpha = alg.basis_element(task.a);
    const OperatorExpr op =
        orb ? ok_operator(cfg.alg, task.k, alpha, cfg.options) : gtilde_operator(cfg.alg, task.k, alpha, cfg.options);
    const FockVector cls =
        orb ? ok_class(space, task.k, alpha, task.n) : gtilde_class(space, task.k, alpha, task.n);
    nlohmann::ordered_json in{
        {"side", side_name(task.sign)}, {"k", task.k}, {"alpha", alg.basis_name(task.a)}, {"n", task.n}};
    in["compare"] = "operator on unit vs class";
    check.vectors(in, cls, space.apply(op, space.unit_class(task.n)));
    if (task.k <= 1) {
      in["compare"] = "class vs low-k closed form";
      check.vectors(in, low_class(space, task.k, task.a, task.n), cls);
    }
  });
  return merge("classes", results);
}

SuiteReport psi_suite(const SuiteConfig& cfg) {
  const auto& alg = *cfg.alg;
  FockSpace orb(cfg.alg, CentralSign::Orbifold), hilb(cfg.alg, CentralSign::Hilbert);
  std::vector<TaskResult> results(1);
  Checker check(alg, CentralSign::Hilbert, results[0]);
  for (int n = 1; n <= cfg.max_n; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (int a = 0; a < static_cast<int>(alg.dim()); ++a) {
        const auto alpha = alg.basis_element(a);
        check.vectors({{"k", k}, {"alpha", alg.basis_name(a)}, {"n", n}, {"compare", "psi(i^k O) vs G"}},
                      gtilde_class(hilb, k, alpha, n), psi(Scalar::i_power(k) * ok_class(orb, k, alpha, n)));
      }
  for (const auto& m : states_up_to(orb, cfg.max_n)) {
    const FockVector v = FockVector::monomial(m);
    check.vectors({{"state", state_name(orb, m)}, {"compare", "psi_inverse(psi(v)) vs v"}}, v, psi_inverse(psi(v)));
  }
  return merge("psi", results);
}

SuiteReport pairing_suite(const SuiteConfig& cfg) {
  IsoReport r = verify_pairing(cfg.alg, cfg.max_n);
  SuiteReport report;
  report.suite = "pairing";
  report.checks = r.checks;
  if (!r.passed) {
    const auto& [i, j, lhs, rhs] = *r.counterexample;
    report.failure_count = 1;
    report.failures.push_back({{{"i", i}, {"j", j}}, lhs.coefficient({}).str(), rhs.coefficient({}).str()});
  }
  return report;
}

SuiteReport iso_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.suite = "iso";
  for (int n = 1; n <= cfg.max_n; ++n) {
    RingModel orb(cfg.alg, RingSide::Orbifold, n, cfg.options);
    RingModel qc(cfg.alg, RingSide::QuantumCorrected, n, cfg.options);
    IsoReport r = verify_iso(orb, qc);
    report.checks += r.checks;
    if (!r.passed) {
      const auto& [i, j, lhs, rhs] = *r.counterexample;
      ++report.failure_count;
      const auto& alg = *cfg.alg;
      report.failures.push_back({{{"n", n},
                                  {"left", format_monomial(alg, CentralSign::Orbifold, orb.basis()[i])},
                                  {"right", format_monomial(alg, CentralSign::Orbifold, orb.basis()[j])}},
                                 format_vector(alg, CentralSign::Hilbert, lhs),
                                 format_vector(alg, CentralSign::Hilbert, rhs)});
    }
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"heisenberg", "tau",     "thm31iii", "axiomA2", "classes",
                                              "psi",        "pairing", "iso",      "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!cfg.alg) throw std::invalid_argument("suite needs an algebra");
  if (cfg.max_n < 0 || cfg.max_k < 0) throw InputError("--max-n and --max-k must be nonnegative");
  if (name == "heisenberg") return heisenberg_suite(cfg);
  if (name == "tau") return tau_suite(cfg);
  if (name == "thm31iii") return thm31iii_suite(cfg);
  if (name == "axiomA2") return axiom_a2_suite(cfg);
  if (name == "classes") return classes_suite(cfg);
  if (name == "psi") return psi_suite(cfg);
  if (name == "pairing") return pairing_suite(cfg);
  if (name == "iso") return iso_suite(cfg);
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    for (const auto& sub : suite_names()) {
      if (sub == "all") continue;
      SuiteReport r = run_suite(sub, cfg);
      all.checks += r.checks;
      all.failure_count += r.failure_count;
      for (auto& f : r.failures) {
        if (all.failures.size() >= kMaxListedFailures) break;
        f.inputs["suite"] = sub;
        all.failures.push_back(std::move(f));
      }
    }
    return all;
  }
  throw InputError("unknown suite '" + name + "'");
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["checks"] = report.checks;
  doc["failure_count"] = report.failure_count;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  doc["failures"] = failures;
  return doc;
}

}  // namespace naklab
