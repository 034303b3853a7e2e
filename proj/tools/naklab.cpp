// naklab: command-line front end.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error,
// 3 generator rank failure.

#include "CLI11.hpp"
#include "naklab/model_io.hpp"
#include "naklab/notation.hpp"
#include "naklab/rings.hpp"
#include "naklab/suites.hpp"
#include "naklab/universal.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace naklab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kGeneration = 3;

AlgebraPtr load_valid_model(const std::string& path) {
  auto alg = make_algebra(load_model_file(path));
  auto violations = validate(*alg);
  if (!violations.empty())
    throw InputError("model " + path + " is invalid: " + to_string(violations.front().kind) + " (" +
                     violations.front().detail + ")");
  return alg;
}

void write_output(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InputError("cannot write " + file);
  out << text;
}

CentralSign parse_side(const std::string& side) {
  if (side == "hilbert" || side == "quantum") return CentralSign::Hilbert;
  if (side == "orbifold") return CentralSign::Orbifold;
  throw InputError("unknown side '" + side + "' (expected hilbert or orbifold)");
}

int cmd_validate(const std::string& path) {
  auto alg = make_algebra(load_model_file(path));
  auto violations = validate(*alg);
  if (violations.empty()) {
    std::cout << "OK " << alg->name() << " (dim " << alg->dim() << ")\n";
    return kPass;
  }
  for (const auto& v : violations) std::cout << to_string(v.kind) << ": " << v.detail << "\n";
  return kFail;
}

int cmd_canonicalize(const std::string& path, const std::string& file) {
  write_output(file, model_to_json(load_model_file(path)));
  return kPass;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string model;
  int max_n = 4;
  int max_k = 3;
  std::uint64_t seed = 1;
  int samples = 40;
  std::string out;
  bool mutate = false;
  bool include_empty = false;
};

int cmd_verify(const VerifyArgs& args) {
  SuiteConfig cfg;
  cfg.alg = load_valid_model(args.model);
  cfg.max_n = args.max_n;
  cfg.max_k = args.max_k;
  cfg.seed = args.seed;
  cfg.samples = args.samples;
  cfg.options.mutate_sign = args.mutate;
  cfg.options.include_empty_partition = args.include_empty;
  SuiteReport report = run_suite(args.suite, cfg);
  auto doc = to_json(report);
  doc["model"] = cfg.alg->name();
  doc["max_n"] = cfg.max_n;
  doc["max_k"] = cfg.max_k;
  doc["seed"] = cfg.seed;
  write_output(args.out, doc.dump(2) + "\n");
  std::cerr << report.suite << ": " << report.checks << " checks, " << report.failure_count << " failures (seed "
            << cfg.seed << ")\n";
  return report.passed() ? kPass : kFail;
}

struct TablesArgs {
  std::string side = "orbifold";
  std::string model;
  int n = 2;
  std::string format = "csv";
  std::string file;
  std::string reduction;
};

int cmd_tables(const TablesArgs& args) {
  auto alg = load_valid_model(args.model);
  const RingSide side = parse_side(args.side) == CentralSign::Orbifold ? RingSide::Orbifold : RingSide::QuantumCorrected;
  RingModel ring(alg, side, args.n);
  if (args.format == "csv") {
    write_output(args.file, structure_constants_csv(ring));
  } else if (args.format == "json") {
    write_output(args.file, structure_constants_json(ring));
  } else {
    throw InputError("unknown table format '" + args.format + "' (expected csv or json)");
  }
  if (!args.reduction.empty()) write_output(args.reduction, reduction_table_json(ring));
  return kPass;
}

struct ProductArgs {
  std::string left, right;
  std::string side;
  std::string model;
  int n = 0;
};

// Side implied by the first side-specific token in the operands.
CentralSign infer_side(const std::string& a, const std::string& b) {
  for (const std::string* s : {&a, &b})
    for (std::size_t i = 0; i + 1 < s->size(); ++i) {
      if ((*s)[i + 1] != '[') continue;
      char c = (*s)[i];
      if (c == 'O' || c == 'p') return CentralSign::Orbifold;
      if (c == 'G' || c == 'a') return CentralSign::Hilbert;
    }
  return CentralSign::Orbifold;
}

int cmd_product(const ProductArgs& args) {
  auto alg = load_valid_model(args.model);
  const CentralSign sign = args.side.empty() ? infer_side(args.left, args.right) : parse_side(args.side);
  const RingSide side = sign == CentralSign::Orbifold ? RingSide::Orbifold : RingSide::QuantumCorrected;
  FockSpace space(alg, sign);
  auto left = parse_operand(*alg, sign, args.left);
  auto right = parse_operand(*alg, sign, args.right);

  auto class_op = [&](const ClassRef& r) {
    const auto e = alg->basis_element(r.basis);
    return sign == CentralSign::Orbifold ? ok_operator(alg, r.k, e) : gtilde_operator(alg, r.k, e);
  };
  auto vector_level = [](const FockVector& v) -> std::optional<int> {
    if (v.is_zero()) return std::nullopt;
    auto l = v.level();
    if (!l) throw InputError("operand is not level-homogeneous");
    return l;
  };

  // The level comes from an explicit vector when there is one, else from --n.
  std::optional<int> level;
  if (auto* v = std::get_if<FockVector>(&right)) level = vector_level(*v);
  if (auto* v = std::get_if<FockVector>(&left); v && !level) level = vector_level(*v);
  if (auto* v = std::get_if<FockVector>(&left); v && level && vector_level(*v) && *vector_level(*v) != *level)
    throw InputError("operands live on different levels");
  if (!level) level = args.n;
  if (args.n > 0 && *level != args.n)
    std::cerr << "note: operands live on level " << *level << "; --n " << args.n << " is ignored\n";
  if (*level < 1) throw InputError("the product needs a level n >= 1 (pass --n)");

  auto as_vector = [&](const std::variant<ClassRef, FockVector>& x) {
    if (auto* r = std::get_if<ClassRef>(&x)) return space.apply(class_op(*r), space.unit_class(*level));
    return std::get<FockVector>(x);
  };

  FockVector result;
  if (auto* r = std::get_if<ClassRef>(&left)) {
    result = space.apply(class_op(*r), as_vector(right));
  } else if (auto* r2 = std::get_if<ClassRef>(&right)) {
    result = space.apply(class_op(*r2), std::get<FockVector>(left));
  } else {
    RingModel ring(alg, side, *level);
    result = ring.product(std::get<FockVector>(left), std::get<FockVector>(right));
  }
  std::cout << format_vector(*alg, sign, result) << "\n";
  return kPass;
}

struct ExtractArgs {
  int k = 1;
  std::string lambda;
  std::string epsilon = "K";
  std::vector<std::string> models;
  int max_level = 1;
};

int cmd_extract(const ExtractArgs& args) {
  std::vector<AlgebraPtr> models;
  for (const auto& m : args.models) models.push_back(load_valid_model(m));
  CanonicalPower eps;
  if (args.epsilon == "K") {
    eps = CanonicalPower::K;
  } else if (args.epsilon == "K2") {
    eps = CanonicalPower::K2;
  } else {
    throw InputError("--epsilon must be K or K2");
  }
  GeneralizedPartition lambda = GeneralizedPartition::parse(args.lambda);
  if (lambda.empty() || lambda.size() == 0) throw InputError("--lambda needs |λ| != 0");
  UniversalFit fit = extract_universal_f(models, args.k, eps, lambda, args.max_level);
  std::cerr << "f_" << to_string(eps) << lambda.str() << " at k=" << args.k << ": " << fit.equations
            << " equations, " << fit.unknowns << " unknowns, rank " << fit.rank << "\n";
  if (fit.empty) {
    std::cout << "empty\n";
    return kPass;
  }
  switch (fit.status) {
    case SolveStatus::Unique:
      std::cout << rational_string(*fit.value) << "\n";
      return kPass;
    case SolveStatus::RankDeficient:
      std::cerr << "RankDeficient: the models do not determine the coefficient\n";
      return kFail;
    case SolveStatus::Inconsistent:
      std::cerr << "Inconsistent: no model-independent value exists\n";
      return kFail;
  }
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"naklab: exact Heisenberg-operator computations on Hilbert-scheme and orbifold Fock spaces"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a model file");
  validate_cmd->add_option("model", validate_path, "Model JSON")->required();

  std::string canon_path, canon_out;
  auto* canon_cmd = app.add_subcommand("canonicalize", "Print a model file in canonical form");
  canon_cmd->add_option("model", canon_path, "Model JSON")->required();
  canon_cmd->add_option("--file", canon_out, "Output path (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify_cmd->add_option("--suite", verify.suite, "Suite name")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--model", verify.model, "Model JSON")->required();
  verify_cmd->add_option("--max-n", verify.max_n, "Largest level");
  verify_cmd->add_option("--max-k", verify.max_k, "Largest k");
  verify_cmd->add_option("--seed", verify.seed, "Seed for sampled checks");
  verify_cmd->add_option("--samples", verify.samples, "Sampled mode-list pairs (tau suite)");
  verify_cmd->add_option("--out", verify.out, "Report path (default stdout)");
  verify_cmd->add_flag("--mutate-sign", verify.mutate, "Negative control: mutate one sign of the Hilbert operators");
  verify_cmd->add_flag("--include-empty", verify.include_empty, "Admit the empty partition in the zero-mode sums");

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Export ring structure constants");
  tables_cmd->add_option("--side", tables.side, "orbifold or hilbert");
  tables_cmd->add_option("--model", tables.model, "Model JSON")->required();
  tables_cmd->add_option("--n", tables.n, "Level")->required();
  tables_cmd->add_option("--out", tables.format, "csv or json");
  tables_cmd->add_option("--file", tables.file, "Output path (default stdout)");
  tables_cmd->add_option("--reduction", tables.reduction, "Also write the reduction table (JSON) here");

  ProductArgs product;
  auto* product_cmd = app.add_subcommand("product", "Multiply two classes in the level-n ring");
  product_cmd->add_option("left", product.left, "Vector or O[k](e) / G[k](e)")->required();
  product_cmd->add_option("right", product.right, "Vector or O[k](e) / G[k](e)")->required();
  product_cmd->add_option("--model", product.model, "Model JSON")->required();
  product_cmd->add_option("--side", product.side, "orbifold or hilbert (default: inferred)");
  product_cmd->add_option("--n", product.n, "Level when no operand fixes it");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract-f", "Fit a universal coefficient f_eps(lambda)");
  extract_cmd->add_option("--k", extract.k, "Derivative order")->required();
  extract_cmd->add_option("--lambda", extract.lambda, "Generalized partition, e.g. \"(-3)\"")->required();
  extract_cmd->add_option("--epsilon", extract.epsilon, "K or K2");
  extract_cmd->add_option("--models", extract.models, "Comma-separated model files")->delimiter(',')->required();
  extract_cmd->add_option("--max-level", extract.max_level, "Largest evaluation level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_path);
    if (*canon_cmd) return cmd_canonicalize(canon_path, canon_out);
    if (*verify_cmd) return cmd_verify(verify);
    if (*tables_cmd) return cmd_tables(tables);
    if (*product_cmd) return cmd_product(product);
    if (*extract_cmd) return cmd_extract(extract);
  } catch (const GenerationFailure& e) {
    std::cerr << "GenerationFailure: " << e.what() << "\n";
    return kGeneration;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const AlgebraError& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
