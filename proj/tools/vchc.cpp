#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace vchc;
using namespace vchc::cli;

void add_range(CLI::App* cmd, const std::string& name, RationalRange& range, const std::string& what) {
  cmd->add_option_function<std::string>("--" + name + "-lo", [&range](const std::string& s) { range.lo = Rational::parse(s); },
                                        "lower bound for " + what);
  cmd->add_option_function<std::string>("--" + name + "-hi", [&range](const std::string& s) { range.hi = Rational::parse(s); },
                                        "upper bound for " + what);
  cmd->add_option("--" + name + "-den", range.max_denominator, "largest denominator for " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicriteria primal-dual solver for capacitated vertex cover with hard capacities"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "compute an augmented cover");
  solve_cmd->add_option("--input", solve.input, "instance file (- for stdin)")->required();
  solve_cmd->add_option("--k", solve.k, "augmentation factor, at least 2")->required();
  solve_cmd->add_flag("--certify", solve.certify, "verify the result and embed the certificate");
  solve_cmd->add_option("--trace", solve.trace_path, "write the event trace (JSON lines) here");
  solve_cmd->add_option("--out", solve.out_path, "result file (default stdout)");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by enumeration");
  oracle_cmd->add_option("--input", oracle.input, "instance file (- for stdin)")->required();
  oracle_cmd->add_option("--budget", oracle.budget, "largest allowed search space")->capture_default_str();
  oracle_cmd->add_option("--beta", oracle.beta, "multiply every multiplicity first")->capture_default_str();
  oracle_cmd->add_option("--out", oracle.out_path, "result file (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "solver cost against the exact optimum on generated instances");
  bench_cmd->add_option("--n", bench.n, "vertices")->capture_default_str();
  bench_cmd->add_option("--m", bench.m, "edges")->capture_default_str();
  bench_cmd->add_option("--f", bench.f, "largest edge size")->capture_default_str();
  bench_cmd->add_option("--k", bench.ks, "augmentation factors")->delimiter(',');
  bench_cmd->add_option("--count", bench.count, "instances")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "seed of the first instance")->capture_default_str();
  bench_cmd->add_option("--family", bench.family, "star, tight or heavy_light instead of random instances");
  bench_cmd->add_option("--size", bench.size, "family size")->capture_default_str();
  bench_cmd->add_option("--budget", bench.budget, "oracle budget")->capture_default_str();
  bench_cmd->add_option("--out", bench.out_path, "CSV file (default stdout)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--n", gen.params.n, "vertices")->capture_default_str();
  gen_cmd->add_option("--m", gen.params.m, "edges")->capture_default_str();
  gen_cmd->add_option("--f", gen.params.f, "largest edge size")->capture_default_str();
  gen_cmd->add_option("--seed", gen.params.seed, "seed")->capture_default_str();
  add_range(gen_cmd, "demand", gen.params.demand, "demands");
  add_range(gen_cmd, "capacity", gen.params.capacity, "capacities");
  add_range(gen_cmd, "weight", gen.params.weight, "weights");
  gen_cmd->add_option("--mult-lo", gen.params.multiplicity.lo, "smallest multiplicity");
  gen_cmd->add_option("--mult-hi", gen.params.multiplicity.hi, "largest multiplicity");
  gen_cmd->add_flag("!--raw", gen.params.ensure_feasible, "skip the feasibility repair");
  gen_cmd->add_option("--family", gen.family, "star, tight or heavy_light");
  gen_cmd->add_option("--size", gen.size, "family size")->capture_default_str();
  gen_cmd->add_option("--out", gen.out_path, "instance file (default stdout)");

  ExportOptions lp;
  auto* lp_cmd = app.add_subcommand("export-lp", "write the LP relaxation or its dual in LP format");
  lp_cmd->add_option("--input", lp.input, "instance file (- for stdin)")->required();
  lp_cmd->add_option("--which", lp.which, "primal or dual")->check(CLI::IsMember({"primal", "dual"}))->capture_default_str();
  lp_cmd->add_option("--out", lp.out_path, "LP file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (solve_cmd->parsed()) return guarded([&] { return cmd_solve(solve, std::cerr); }, std::cerr);
  if (oracle_cmd->parsed()) return guarded([&] { return cmd_oracle(oracle, std::cerr); }, std::cerr);
  if (bench_cmd->parsed()) return guarded([&] { return cmd_bench(bench, std::cerr); }, std::cerr);
  if (gen_cmd->parsed()) return guarded([&] { return cmd_gen(gen, std::cerr); }, std::cerr);
  return guarded([&] { return cmd_export_lp(lp, std::cerr); }, std::cerr);
}
