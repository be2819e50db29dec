#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitcert/json_io.hpp"

using nlohmann::json;
using namespace orbitcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitCounterexample = 3;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

int cmd_analyze(const std::string& input, long p_max, bool oracle, bool allow_p0, long budget,
                bool pretty) {
  json in = json::parse(read_input(input));
  AnalysisOptions opt;
  opt.p_max = p_max;
  opt.allow_p0 = allow_p0;
  opt.run_oracle = oracle;
  opt.sample_budget = budget;

  AnalysisReport rep;
  const json& vec = in.at("vector");
  if (vec.contains("strata")) {
    StratifiedVector v = parse_stratified(vec.dump());
    if (in.contains("module")) {
      ModuleSpec given = parse_module_spec(in.at("module").dump(), true);
      if (!(given == v.induced_spec()))
        throw std::invalid_argument("module does not match the vector's summands");
    }
    rep = analyze(v, opt);
  } else {
    ModuleSpec spec = parse_module_spec(in.at("module").dump(), true);
    ComponentMap raw = parse_raw_components(vec.dump());
    rep = analyze_raw(spec, raw, opt);
  }

  json out = json::parse(to_json(rep));
  out["input"] = in;
  emit(out, pretty);
  if (!rep.normal_form && !rep.oracle) return kExitInput;
  return kExitOk;
}

int cmd_verify_theorem(long s_max, long p_max, long l_max, bool pretty) {
  json out;
  long checked = 0;
  json counterexample = nullptr;
  for (long s = 1; s <= s_max && counterexample.is_null(); ++s)
    for (long p = 1; p <= p_max && counterexample.is_null(); ++p)
      for (long l = s; l <= l_max; ++l) {
        auto sol = solve_eq_star(s, p, l);
        bool ok = true;
        for (long j = 0; j <= s; ++j) {
          Rational want =
              (s - j) <= std::min(p, s) ? closed_form_c(s, p, l, s - j) : Rational(0);
          if (sol[static_cast<std::size_t>(j)] != want) {
            ok = false;
            counterexample = {{"s", s}, {"p", p}, {"l", l}, {"index", j},
                              {"solved", sol[static_cast<std::size_t>(j)].str()},
                              {"closed_form", want.str()}};
            break;
          }
        }
        ++checked;
        if (!ok) break;
      }
  out["checked_triples"] = checked;
  out["pass"] = counterexample.is_null();
  out["first_counterexample"] = counterexample;
  emit(out, pretty);
  return counterexample.is_null() ? kExitOk : kExitCounterexample;
}

int cmd_tables(long table, long n_max, long k_max, bool pretty) {
  std::vector<CheckResult> results;
  if (table == 1)
    results = run_table1(n_max);
  else if (table == 2)
    results = run_table2(n_max, k_max);
  else
    throw CLI::ValidationError("--table must be 1 or 2");
  json out = json::parse(to_json(results));
  emit(out, pretty);
  return out.at("pass").get<bool>() ? kExitOk : kExitCounterexample;
}

int cmd_oracle(const std::string& input, long budget, bool pretty) {
  json in = json::parse(read_input(input));
  ModuleSpec spec = parse_module_spec(in.at("module").dump(), true);
  ComponentMap raw = parse_raw_components(in.at("vector").dump());
  OracleResult res = sampled_stabilizer(spec, raw, budget);
  json out = json::parse(to_json(res));
  out["input"] = in;
  emit(out, pretty);
  return kExitOk;
}

int cmd_torus(const std::string& input, long budget, bool pretty) {
  TorusModule tm = parse_torus_module(read_input(input));
  OracleResult res = torus_stabilizer(tm, budget);
  emit(json::parse(to_json(res)), pretty);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for orbit-preserving groups of SL2-modules"};
  app.require_subcommand(1);
  bool pretty = false;
  bool seed_free = true;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--seed-free", seed_free,
               "deterministic sampling (always on; accepted for interface stability)");

  std::string input = "-";
  long p_max = -1, budget = 64;
  bool oracle = false, allow_p0 = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline on a module + vector");
  analyze_cmd->add_option("input", input, "input JSON file, or - for stdin");
  analyze_cmd->add_option("--p-max", p_max, "largest p to try (default: sound bound)");
  analyze_cmd->add_flag("--oracle", oracle, "also run the sampled stabilizer");
  analyze_cmd->add_flag("--allow-p0", allow_p0, "include the trivial summand search");
  analyze_cmd->add_option("--budget", budget, "oracle sample budget");

  long s_max = 8, vp_max = 8, l_max = 20;
  auto* verify_cmd = app.add_subcommand("verify-theorem", "closed form vs triangular solve sweep");
  verify_cmd->add_option("--s-max", s_max, "");
  verify_cmd->add_option("--p-max", vp_max, "");
  verify_cmd->add_option("--l-max", l_max, "");

  long table = 1, n_max = 6, k_max = 4;
  auto* tables_cmd = app.add_subcommand("tables", "verify the factorization tables");
  tables_cmd->add_option("--table", table, "1 or 2")->required();
  tables_cmd->add_option("--n-max", n_max, "");
  tables_cmd->add_option("--k-max", k_max, "");

  std::string oracle_input = "-";
  long oracle_budget = 64;
  auto* oracle_cmd = app.add_subcommand("oracle", "sampled stabilizer of a raw vector");
  oracle_cmd->add_option("input", oracle_input, "input JSON file, or - for stdin");
  oracle_cmd->add_option("--budget", oracle_budget, "sample budget");

  std::string torus_input = "-";
  long torus_budget = 64;
  auto* torus_cmd = app.add_subcommand("torus", "stabilizer of a torus module");
  torus_cmd->add_option("input", torus_input, "input JSON file, or - for stdin");
  torus_cmd->add_option("--budget", torus_budget, "sample budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed())
      return cmd_analyze(input, p_max, oracle, allow_p0, budget, pretty);
    if (verify_cmd->parsed()) return cmd_verify_theorem(s_max, vp_max, l_max, pretty);
    if (tables_cmd->parsed()) return cmd_tables(table, n_max, k_max, pretty);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_input, oracle_budget, pretty);
    if (torus_cmd->parsed()) return cmd_torus(torus_input, torus_budget, pretty);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
