// immw command line: compute immanants and characters, generate certified
// matrix instances, and run the trace-formula / inequality verifiers.
// Exit codes: 0 success or all checks passed, 1 a mathematical check failed
// (counterexample emitted), 2 usage or input error.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "immw/characters.hpp"
#include "immw/immanant.hpp"
#include "immw/inequalities.hpp"
#include "immw/json_io.hpp"
#include "immw/schur_weyl.hpp"

namespace {

using namespace immw;

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw immw::ParseError("expected comma-separated integers, got '" + csv + "'");
    }
  }
  return out;
}

json load_json_argument(const std::string& arg) {
  // Inline JSON starts with '{' or '['; anything else is a file path.
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw immw::ParseError("cannot open file '" + arg + "'");
  return json::parse(in);
}

json normalize_matrix_json(const json& j) {
  if (j.is_array())  // bare [[...], ...] form
    return json{{"n", j.size()}, {"entries", j}};
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw immw::ParseError("cannot write file '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
}

int run_character(int m, const std::string& shape_csv, const std::string& cycle_csv,
                  const std::string& out_path) {
  if (!shape_csv.empty() && !cycle_csv.empty()) {
    const Partition shape(parse_csv_ints(shape_csv));
    const Partition rho(parse_csv_ints(cycle_csv));
    emit(json{{"shape", to_json(shape)},
              {"cycle_type", to_json(rho)},
              {"value", mn_character(shape, rho)}},
         out_path);
    return 0;
  }
  if (m < 1) throw immw::ParseError("character: need --m or both --shape and --cycle-type");
  emit(to_json(CharacterTable::cached(m)), out_path);
  return 0;
}

int run_kostka(const std::string& shape_csv, const std::string& weight_csv) {
  const Partition shape(parse_csv_ints(shape_csv));
  const WeakComposition mu(parse_csv_ints(weight_csv));
  std::cout << kostka(shape, mu) << "\n";
  return 0;
}

int run_dominance(const std::string& lhs_csv, const std::string& rhs_csv) {
  const Partition lhs = Partition::from_unsorted(parse_csv_ints(lhs_csv));
  const Partition rhs = Partition::from_unsorted(parse_csv_ints(rhs_csv));
  std::cout << (dominates(lhs, rhs) ? "true" : "false") << "\n";
  return 0;
}

ImmanantStrategy strategy_from_string(const std::string& s) {
  if (s == "naive") return ImmanantStrategy::naive;
  if (s == "cycle-cached") return ImmanantStrategy::cycle_cached;
  if (s == "parallel") return ImmanantStrategy::parallel;
  throw immw::ParseError("unknown strategy '" + s + "'");
}

template <class S>
json immanant_value(const json& mj, const Partition& shape, const std::string& index_csv,
                    ImmanantStrategy strategy) {
  const DenseMatrix<S> a = matrix_from_json<S>(mj);
  S value;
  if (index_csv.empty()) {
    value = immanant(a, shape, strategy);
  } else {
    const MultisetIndex idx(parse_csv_ints(index_csv));
    value = immanant_of_submatrix(a, shape, idx, strategy);
  }
  return scalar_to_json(value);
}

int run_immanant(const std::string& shape_csv, const std::string& matrix_arg,
                 const std::string& index_csv, const std::string& strategy_name) {
  const Partition shape(parse_csv_ints(shape_csv));
  const json mj = normalize_matrix_json(load_json_argument(matrix_arg));
  const ImmanantStrategy strategy = strategy_from_string(strategy_name);
  json value;
  switch (detect_matrix_mode(mj)) {
    case ScalarMode::rational:
      value = immanant_value<Rational>(mj, shape, index_csv, strategy);
      break;
    case ScalarMode::gaussian:
      value = immanant_value<GaussianRational>(mj, shape, index_csv, strategy);
      break;
    case ScalarMode::floating:
      value = immanant_value<double>(mj, shape, index_csv, strategy);
      break;
  }
  std::cout << value.dump() << "\n";
  return 0;
}

int run_gen_matrix(const std::string& cls, int n, std::uint64_t seed, const std::string& mode,
                   int factors, int zeros, const std::string& out_path) {
  json certificate, matrix;
  if (cls == "tn") {
    const FactoredTN fm = FactoredTN::random(n, seed, factors >= 0 ? factors : 2 * n, zeros);
    certificate = to_json(fm);
    matrix = matrix_to_json(fm.matrix());
  } else if (cls == "pd" || cls == "psd") {
    if (cls == "pd" && zeros > 0)
      throw immw::ParseError("gen-matrix: zero diagonal entries make the instance psd, not pd");
    if (mode == "gaussian") {
      const auto fm = FactoredPD<GaussianRational>::random(n, seed, zeros);
      certificate = to_json(fm);
      matrix = matrix_to_json(fm.matrix());
    } else if (mode == "rational") {
      const auto fm = FactoredPD<Rational>::random(n, seed, zeros);
      certificate = to_json(fm);
      matrix = matrix_to_json(fm.matrix());
    } else {
      throw immw::ParseError("gen-matrix: mode must be rational or gaussian");
    }
  } else {
    throw immw::ParseError("gen-matrix: class must be pd, psd or tn");
  }
  emit(json{{"seed", seed}, {"certificate", certificate}, {"matrix", matrix}}, out_path);
  return 0;
}

int run_verify_trace(int n, int m, std::uint64_t seed, int count, const std::string& format,
                     const std::string& out_path) {
  const TensorSpace space(n, m);
  SeededRng rng(seed);

  struct Row {
    Partition lambda;
    WeakComposition mu;
    bool exact_equal = true;
    double max_float_dev = 0.0;
    double max_vanishing_term = 0.0;
  };
  std::vector<Row> rows;
  for (const auto& shape : enumerate_partitions(m))
    for (const auto& mu : weak_compositions(m, n)) rows.push_back({shape, mu});

  for (int trial = 0; trial < count; ++trial) {
    DenseMatrix<Rational> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.signed_rational(5);
    const DenseMatrix<double> af = to_float(a);
    for (Row& row : rows) {
      const MultisetIndex idx = MultisetIndex::from_weight(row.mu);
      const Rational lhs = detail::exact_real(immanant_of_submatrix(a, row.lambda, idx),
                                              "verify-trace") /
                           Rational(idx.m_of());
      const Rational rhs = trace_formula_rhs_exact(space, a, row.lambda, row.mu);
      if (lhs != rhs) row.exact_equal = false;
      const double dev =
          std::abs(trace_formula_rhs_orthogonal(space, af, row.lambda, row.mu) - lhs.to_double());
      row.max_float_dev = std::max(row.max_float_dev, dev);
    }
  }

  bool all_pass = true;
  json rows_json = json::array();
  for (const Row& row : rows) {
    const bool pass = row.exact_equal && row.max_float_dev < 1e-9;
    all_pass = all_pass && pass;
    rows_json.push_back(json{{"lambda", to_json(row.lambda)},
                             {"mu", to_json(row.mu)},
                             {"exact_equal", row.exact_equal},
                             {"max_float_dev", row.max_float_dev},
                             {"status", pass ? "pass" : "fail"}});
  }
  const json out{{"n", n},       {"m", m},
                 {"seed", seed}, {"count", count},
                 {"rows", rows_json}, {"all_pass", all_pass}};

  if (format == "table") {
    std::cout << "n=" << n << " m=" << m << " seed=" << seed << " count=" << count << "\n";
    std::cout << "lambda\tmu\texact\tfloat_dev\tstatus\n";
    for (const auto& row : rows_json)
      std::cout << row["lambda"].dump() << "\t" << row["mu"].dump() << "\t"
                << (row["exact_equal"].get<bool>() ? "=" : "!=") << "\t"
                << row["max_float_dev"].get<double>() << "\t"
                << row["status"].get<std::string>() << "\n";
    if (!out_path.empty()) emit(out, out_path);
  } else {
    emit(out, out_path);
  }
  return all_pass ? 0 : 1;
}

int run_criterion(const std::string& cls, const std::string& mode, int n, int m, int count,
                  std::uint64_t seed, const std::string& out_path) {
  json failures = json::array();
  long long checks = 0;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t instance_seed = seed * 1000003ULL + static_cast<std::uint64_t>(k);
    auto sweep = [&](const auto& fm) {
      for (const auto& shape : enumerate_partitions(m)) {
        for (const auto& mu : weak_compositions(m, n)) {
          const CheckReport report = check_criterion(fm, shape, mu);
          ++checks;
          if (report.verdict != "pass") failures.push_back(to_json(report));
        }
      }
    };
    if (cls == "tn") {
      sweep(FactoredTN::random(n, instance_seed, 2 * n));
    } else if (cls == "pd") {
      if (mode == "gaussian")
        sweep(FactoredPD<GaussianRational>::random(n, instance_seed));
      else
        sweep(FactoredPD<Rational>::random(n, instance_seed));
    } else {
      throw immw::ParseError("criterion: class must be pd or tn (the theorem needs "
                             "definite or nonsingular instances)");
    }
  }
  emit(json{{"class", cls},   {"n", n},
            {"m", m},         {"seed", seed},
            {"count", count}, {"checks", checks},
            {"failures", failures}},
       out_path);
  return failures.empty() ? 0 : 1;
}

int run_check_inequalities(const std::string& ns_csv, const std::string& ms_csv, int count,
                           std::uint64_t seed, const std::string& cls, const std::string& check,
                           int threads, const std::string& out_path) {
  ScanConfig config;
  config.ns = parse_csv_ints(ns_csv);
  config.ms = parse_csv_ints(ms_csv);
  config.count = count;
  config.seed = seed;
  config.threads = threads;
  config.classes.clear();
  if (cls == "all") {
    config.classes = {MatrixClass::pd, MatrixClass::psd, MatrixClass::tn};
  } else {
    config.classes = {matrix_class_from_string(cls)};
  }
  if (check == "all")
    config.checks = {"criterion", "schur", "orbit"};
  else
    config.checks = {check};

  const auto reports = scan(config);
  long long passes = 0, fails = 0, skips = 0;
  json failures = json::array();
  for (const auto& r : reports) {
    if (r.verdict == "pass") ++passes;
    else if (r.verdict == "skip") ++skips;
    else {
      ++fails;
      failures.push_back(to_json(r));
    }
  }
  json rows = json::array();
  for (const auto& r : reports) rows.push_back(to_json(r));
  emit(json{{"seed", seed},
            {"config", {{"n", config.ns}, {"m", config.ms}, {"count", count},
                        {"class", cls}, {"check", check}}},
            {"pass", passes},
            {"fail", fails},
            {"skip", skips},
            {"failures", failures},
            {"reports", rows}},
       out_path);
  std::cout << "pass=" << passes << " fail=" << fails << " skip=" << skips << "\n";
  return fails == 0 ? 0 : 1;
}

int run_capelli(int n, int m, const std::string& u_csv, const std::string& out_path) {
  const TensorSpace space(n, m);
  const std::vector<int> us = parse_csv_ints(u_csv);
  json rows = json::array();
  bool all_pass = true;
  for (const auto& shape : enumerate_partitions(m)) {
    if (shape.depth() > n) continue;
    for (const auto& mu : weak_compositions(m, n)) {
      for (const auto& tab : enumerate_syt(shape)) {
        if (!theta_mu(tab, mu).is_semistandard) continue;
        if (theta_fiber(tab, mu).size() != 1) continue;
        for (int k = 1; k <= n; ++k) {
          for (int u : us) {
            const bool ok = verify_capelli(space, shape, mu, tab, k, static_cast<double>(u));
            all_pass = all_pass && ok;
            rows.push_back(json{{"lambda", to_json(shape)},
                                {"mu", to_json(mu)},
                                {"tableau", to_json(tab)},
                                {"k", k},
                                {"u", u},
                                {"status", ok ? "pass" : "fail"}});
          }
        }
      }
    }
  }
  emit(json{{"n", n}, {"m", m}, {"tolerance", 1e-8}, {"rows", rows}, {"all_pass", all_pass}},
       out_path);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"immanants of generalized principal submatrices and their weight-space checks"};
  app.require_subcommand(1);

  // character
  auto* character = app.add_subcommand("character", "irreducible character values of S_m");
  int ch_m = 0;
  std::string ch_shape, ch_cycle, ch_out;
  character->add_option("--m", ch_m, "degree: export the full table");
  character->add_option("--shape", ch_shape, "partition, e.g. 2,1");
  character->add_option("--cycle-type", ch_cycle, "cycle type, e.g. 3");
  character->add_option("--out", ch_out, "output file (default stdout)");

  // kostka
  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{λμ}");
  std::string ko_shape, ko_weight;
  kostka_cmd->add_option("--shape", ko_shape)->required();
  kostka_cmd->add_option("--weight", ko_weight)->required();

  // dominance
  auto* dom = app.add_subcommand("dominance", "dominance order on partitions");
  std::string dom_lhs, dom_rhs;
  dom->add_option("--lhs", dom_lhs)->required();
  dom->add_option("--rhs", dom_rhs)->required();

  // immanant
  auto* imm = app.add_subcommand("immanant", "Imm_{χ^λ} of a matrix or generalized submatrix");
  std::string imm_shape, imm_matrix, imm_index, imm_strategy = "cycle-cached";
  imm->add_option("--shape", imm_shape)->required();
  imm->add_option("--matrix", imm_matrix, "file path or inline JSON")->required();
  imm->add_option("--index", imm_index, "multiset index, e.g. 1,2,2");
  imm->add_option("--strategy", imm_strategy, "naive | cycle-cached | parallel");

  // gen-matrix
  auto* gen = app.add_subcommand("gen-matrix", "generate a certified pd/psd/tn instance");
  std::string gen_class, gen_mode = "rational", gen_out;
  int gen_n = 3, gen_factors = -1, gen_zeros = 0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--class", gen_class, "pd | psd | tn")->required();
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--seed", gen_seed);
  gen->add_option("--mode", gen_mode, "rational | gaussian (pd/psd only)");
  gen->add_option("--factors", gen_factors, "bidiagonal factors per side (tn)");
  gen->add_option("--zeros", gen_zeros, "zeroed diagonal entries (singular instances)");
  gen->add_option("--out", gen_out);

  // verify-trace
  auto* vt = app.add_subcommand("verify-trace", "trace formula: exact and float routes");
  int vt_n = 2, vt_m = 3, vt_count = 20;
  std::uint64_t vt_seed = 7;
  std::string vt_format = "json", vt_out;
  vt->add_option("--n", vt_n)->required();
  vt->add_option("--m", vt_m)->required();
  vt->add_option("--seed", vt_seed);
  vt->add_option("--count", vt_count, "random matrices per sweep");
  vt->add_option("--format", vt_format, "json | table");
  vt->add_option("--out", vt_out);

  // criterion
  auto* crit = app.add_subcommand("criterion", "nonvanishing criterion sweep");
  std::string crit_class = "pd", crit_mode = "rational", crit_out;
  int crit_n = 3, crit_m = 3, crit_count = 5;
  std::uint64_t crit_seed = 1;
  crit->add_option("--class", crit_class, "pd | tn");
  crit->add_option("--mode", crit_mode, "rational | gaussian (pd)");
  crit->add_option("--n", crit_n)->required();
  crit->add_option("--m", crit_m)->required();
  crit->add_option("--count", crit_count);
  crit->add_option("--seed", crit_seed);
  crit->add_option("--out", crit_out);

  // check-inequalities
  auto* ineq = app.add_subcommand("check-inequalities", "criterion/schur/orbit scan harness");
  std::string ineq_n = "3", ineq_m = "3", ineq_class = "all", ineq_check = "all", ineq_out;
  int ineq_count = 2, ineq_threads = 0;
  std::uint64_t ineq_seed = 1;
  ineq->add_option("--n", ineq_n, "comma-separated sizes");
  ineq->add_option("--m", ineq_m, "comma-separated orders");
  ineq->add_option("--count", ineq_count, "instances per (class, n)");
  ineq->add_option("--seed", ineq_seed);
  ineq->add_option("--class", ineq_class, "pd | psd | tn | all");
  ineq->add_option("--check", ineq_check, "criterion | schur | orbit | all");
  ineq->add_option("--threads", ineq_threads);
  ineq->add_option("--out", ineq_out, "report file");

  // capelli
  auto* cap = app.add_subcommand("capelli", "Capelli eigenvalue verification");
  int cap_n = 2, cap_m = 2;
  std::string cap_u = "0,1,2", cap_out;
  cap->add_option("--n", cap_n)->required();
  cap->add_option("--m", cap_m)->required();
  cap->add_option("--u", cap_u, "comma-separated shifts");
  cap->add_option("--out", cap_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(character))
      return run_character(ch_m, ch_shape, ch_cycle, ch_out);
    if (app.got_subcommand(kostka_cmd)) return run_kostka(ko_shape, ko_weight);
    if (app.got_subcommand(dom)) return run_dominance(dom_lhs, dom_rhs);
    if (app.got_subcommand(imm))
      return run_immanant(imm_shape, imm_matrix, imm_index, imm_strategy);
    if (app.got_subcommand(gen))
      return run_gen_matrix(gen_class, gen_n, gen_seed, gen_mode, gen_factors, gen_zeros, gen_out);
    if (app.got_subcommand(vt))
      return run_verify_trace(vt_n, vt_m, vt_seed, vt_count, vt_format, vt_out);
    if (app.got_subcommand(crit))
      return run_criterion(crit_class, crit_mode, crit_n, crit_m, crit_count, crit_seed, crit_out);
    if (app.got_subcommand(ineq))
      return run_check_inequalities(ineq_n, ineq_m, ineq_count, ineq_seed, ineq_class, ineq_check,
                                    ineq_threads, ineq_out);
    if (app.got_subcommand(cap)) return run_capelli(cap_n, cap_m, cap_u, cap_out);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const json::parse_error& e) {
    std::cerr << "JSON parse error at byte " << e.byte << ": " << e.what() << "\n";
    return 2;
  } catch (const immw::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << " (limits: n^m <= 1e5, m <= 8)\n";
    return 2;
  } catch (const immw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
