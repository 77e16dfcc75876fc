#pragma once

// Subcommand bodies for the vchc tool. Each returns the process exit code and
// writes diagnostics to `err`, so the test suite can drive them in-process.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vchc/vchc.hpp"

namespace vchc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInfeasible = 3,
  kInvariant = 4,
  kBudget = 5,
};

struct SolveOptions {
  std::string input;
  std::int64_t k = 2;
  bool certify = false;
  std::string trace_path;
  std::string out_path;
};

struct OracleOptions {
  std::string input;
  std::int64_t budget = kDefaultOracleBudget;
  std::int64_t beta = 1;
  std::string out_path;
};

struct BenchOptions {
  int n = 5;
  int m = 6;
  int f = 3;
  std::vector<std::int64_t> ks{2, 3, 4};
  int count = 20;
  std::uint64_t seed = 1;
  std::string family;
  int size = 4;
  std::int64_t budget = kDefaultOracleBudget;
  std::string out_path;
};

struct GenOptions {
  GenParams params;
  std::string family;
  int size = 4;
  std::string out_path;
};

struct ExportOptions {
  std::string input;
  std::string which = "primal";
  std::string out_path;
};

namespace detail {

inline Instance read_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  return parse_instance(in);
}

// Empty path or "-" means stdout.
inline bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace detail

inline CertificateReport certify_result(const Instance& inst, const CoverResult& r) {
  CertificateReport report;
  report.append(check_primal(inst, r.k, r.assignment));
  report.append(check_dual(inst, r.dual));
  report.append(audit_result(inst, r));
  report.checks.push_back(ratio_bound_check(r.cost, r.guaranteed_ratio, r.dual_lower_bound));
  return report;
}

inline int cmd_solve(const SolveOptions& opt, std::ostream& err) {
  if (opt.k < 2) {
    err << "error: --k must be at least 2\n";
    return kUsage;
  }
  const Instance inst = detail::read_instance(opt.input);
  CoverResult result;
  try {
    result = solve_augmented(inst, opt.k);
  } catch (const InfeasibleError& ex) {
    err << "infeasible: " << ex.what() << "\n";
    return kInfeasible;
  }
  Json doc = cover_to_json(result, !opt.trace_path.empty());
  int code = kOk;
  if (opt.certify) {
    const CertificateReport report = certify_result(inst, result);
    doc["certificate"] = report_to_json(report);
    if (!report.overall()) {
      for (const Check& c : report.checks)
        if (c.status == CheckStatus::kFail) err << "certificate check failed: " << c.name << ": " << c.detail << "\n";
      code = kInvariant;
    }
  }
  if (!opt.trace_path.empty() && !detail::write_text(opt.trace_path, trace_to_jsonl(result.trace), err)) return kUsage;
  if (!detail::write_text(opt.out_path, doc.dump(2) + "\n", err)) return kUsage;
  return code;
}

inline int cmd_oracle(const OracleOptions& opt, std::ostream& err) {
  if (opt.beta < 1) {
    err << "error: --beta must be at least 1\n";
    return kUsage;
  }
  const Instance inst = detail::read_instance(opt.input);
  OracleResult result;
  try {
    result = exact_opt_augmented(inst, opt.beta, opt.budget);
  } catch (const BudgetExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kBudget;
  }
  return detail::write_text(opt.out_path, oracle_to_json(result).dump(2) + "\n", err) ? kOk : kUsage;
}

struct BenchRow {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  int f = 0;
  std::int64_t k = 0;
  Rational cost, opt, bound, dual_lb;
  bool pass = false;

  std::string ratio() const {
    if (opt.is_positive()) return (cost / opt).str();
    return cost.is_zero() ? "1" : "inf";
  }
  std::string ratio_approx() const {
    if (opt.is_positive()) return (cost / opt).approx();
    return cost.is_zero() ? "1" : "inf";
  }
};

inline const char* kBenchHeader = "seed,n,m,f,k,solver_cost,opt,ratio,bound,dual_lb,pass,ratio_approx\n";

/// Instance i uses seed + i. Rows are ordered by seed, then by k.
inline int cmd_bench(const BenchOptions& opt, std::ostream& err) {
  if (opt.count < 0) {
    err << "error: --count must be nonnegative\n";
    return kUsage;
  }
  for (std::int64_t k : opt.ks)
    if (k < 2) {
      err << "error: every k must be at least 2\n";
      return kUsage;
    }
  std::ostringstream csv;
  csv << kBenchHeader;
  std::map<std::int64_t, std::pair<Rational, int>> ratio_sum;
  bool all_pass = true;
  for (int i = 0; i < opt.count; ++i) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
    Instance inst = [&] {
      if (!opt.family.empty()) return gen_family(opt.family, opt.size, seed);
      GenParams p;
      p.n = opt.n;
      p.m = opt.m;
      p.f = opt.f;
      p.seed = seed;
      return gen_random(p);
    }();
    OracleResult oracle;
    try {
      oracle = exact_opt(inst, opt.budget);
    } catch (const BudgetExceeded& ex) {
      err << "error: seed " << seed << ": " << ex.what() << "\n";
      return kBudget;
    }
    for (std::int64_t k : opt.ks) {
      const CoverResult r = solve_augmented(inst, k);
      BenchRow row{seed, inst.num_vertices(), inst.num_edges(), r.f, k, r.cost, oracle.opt_cost,
                   r.guaranteed_ratio, r.dual_lower_bound, r.cost <= r.guaranteed_ratio * oracle.opt_cost};
      all_pass = all_pass && row.pass;
      if (row.opt.is_positive()) {
        ratio_sum[k].first += row.cost / row.opt;
        ratio_sum[k].second += 1;
      }
      csv << row.seed << ',' << row.n << ',' << row.m << ',' << row.f << ',' << row.k << ',' << row.cost << ','
          << row.opt << ',' << row.ratio() << ',' << row.bound << ',' << row.dual_lb << ','
          << (row.pass ? "true" : "false") << ',' << row.ratio_approx() << '\n';
    }
  }
  if (!detail::write_text(opt.out_path, csv.str(), err)) return kUsage;
  for (const auto& [k, acc] : ratio_sum)
    err << "k=" << k << ": mean ratio " << (acc.first / Rational(acc.second)).approx() << " over " << acc.second
        << " instances with positive optimum\n";
  return all_pass ? kOk : kInvariant;
}

inline int cmd_gen(const GenOptions& opt, std::ostream& err) {
  const Instance inst = opt.family.empty() ? gen_random(opt.params) : gen_family(opt.family, opt.size, opt.params.seed);
  return detail::write_text(opt.out_path, serialize_instance(inst), err) ? kOk : kUsage;
}

inline int cmd_export_lp(const ExportOptions& opt, std::ostream& err) {
  if (opt.which != "primal" && opt.which != "dual") {
    err << "error: --which must be primal or dual\n";
    return kUsage;
  }
  const Instance inst = detail::read_instance(opt.input);
  const std::string text = opt.which == "primal" ? export_lp(inst) : export_dual_lp(inst);
  return detail::write_text(opt.out_path, text, err) ? kOk : kUsage;
}

/// Runs a subcommand body, mapping library exceptions to exit codes.
template <class Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kParse;
  } catch (const InfeasibleError& ex) {
    err << "infeasible: " << ex.what() << "\n";
    return kInfeasible;
  } catch (const InvariantViolation& ex) {
    err << "invariant violation: " << ex.what() << "\n";
    return kInvariant;
  } catch (const BudgetExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
}

}  // namespace vchc::cli
