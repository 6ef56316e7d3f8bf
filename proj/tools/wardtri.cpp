// wardtri: generate, cross-check and benchmark the Ward-related triangles.
//
// Exit codes: 0 success / agreement, 1 mismatch or identity failure,
// 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ward/ward.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// Partition counts grow superpolynomially; beyond this row the transform
// route needs --force.
constexpr long kPartitionTransformGuard = 40;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ward::TriangleKind kind_arg(const std::string& name) {
  auto kind = ward::parse_kind(name);
  if (!kind) throw UsageError("unknown triangle kind '" + name + "'");
  return *kind;
}

ward::Strategy strategy_arg(const std::string& name) {
  auto s = ward::parse_strategy(name);
  if (!s) throw UsageError("unknown strategy '" + name + "'");
  return *s;
}

std::vector<ward::TriangleKind> kinds_arg(const std::string& list) {
  if (ward::detail::fold_name(list) == "all") {
    return {ward::kAllKinds.begin(), ward::kAllKinds.end()};
  }
  std::vector<ward::TriangleKind> out;
  for (const auto& name : split_list(list)) out.push_back(kind_arg(name));
  if (out.empty()) throw UsageError("no triangle kinds given");
  return out;
}

// "all" expands to the kind's supported strategies.
std::vector<ward::Strategy> strategies_arg(const std::string& list, ward::TriangleKind kind) {
  if (ward::detail::fold_name(list) == "all") {
    auto s = ward::supported_strategies(kind);
    return {s.begin(), s.end()};
  }
  std::vector<ward::Strategy> out;
  for (const auto& name : split_list(list)) {
    auto s = strategy_arg(name);
    ward::require_supported(kind, s);
    out.push_back(s);
  }
  if (out.empty()) throw UsageError("no strategies given");
  return out;
}

void guard_rows(ward::Strategy s, long rows, bool force) {
  if (rows < 0) throw UsageError("rows must be nonnegative");
  if (s == ward::Strategy::PartitionTransform && rows > kPartitionTransformGuard && !force) {
    throw UsageError("partition-transform is limited to " + std::to_string(kPartitionTransformGuard) +
                     " rows (partition counts explode); pass --force to override");
  }
}

// ---------------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  long rows = 0;
  std::string strategy = "recurrence";
  std::string format = "table";
  long offset = 1;
  bool force = false;
};

int run_gen(const GenOptions& o) {
  const auto kind = kind_arg(o.kind);
  const auto strategy = strategy_arg(o.strategy);
  ward::require_supported(kind, strategy);
  guard_rows(strategy, o.rows, o.force);
  const std::string format = ward::detail::fold_name(o.format);
  if (format != "table" && format != "csv" && format != "bfile") {
    throw UsageError("unknown format '" + o.format + "' (table, csv, bfile)");
  }

  const auto t = ward::triangle(kind, o.rows, strategy);
  if (format == "bfile") {
    std::cout << ward::linearize(t, o.offset).render();
    return kOk;
  }
  const char* sep = format == "csv" ? "," : " ";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) std::cout << sep;
      std::cout << row[k];
    }
    std::cout << '\n';
  }
  return kOk;
}

struct CheckOptions {
  std::string kinds = "all";
  long rows = 0;
  std::string strategies = "all";
  std::string inject;
  bool force = false;
};

int run_check(const CheckOptions& o) {
  std::optional<std::pair<long, long>> fault;
  if (!o.inject.empty()) {
    auto parts = split_list(o.inject);
    if (parts.size() != 2) throw UsageError("--inject expects N,K");
    fault = std::make_pair(std::stol(parts[0]), std::stol(parts[1]));
    if (fault->first < 0 || fault->second < 0 || fault->second > fault->first || fault->first > o.rows) {
      throw UsageError("--inject position outside the triangle");
    }
  }

  bool ok = true;
  for (auto kind : kinds_arg(o.kinds)) {
    auto strategies = strategies_arg(o.strategies, kind);
    std::vector<ward::Triangle> built;
    for (auto s : strategies) {
      guard_rows(s, o.rows, o.force);
      built.push_back(ward::triangle(kind, o.rows, s));
    }
    if (fault) built.front().rows[fault->first][fault->second] += 1;
    if (built.size() < 2) {
      std::cout << "SKIP " << ward::to_string(kind) << ": only one strategy selected\n";
      continue;
    }
    for (std::size_t i = 0; i < built.size(); ++i) {
      for (std::size_t j = i + 1; j < built.size(); ++j) {
        auto r = ward::compare_triangles(built[i], built[j]);
        if (r.passed) {
          std::cout << "OK " << r.name << " rows 0.." << o.rows << '\n';
        } else {
          ok = false;
          const auto& c = *r.counterexample;
          std::cout << "MISMATCH " << r.name << " at n=" << c.n << " k=" << *c.k << ": " << c.lhs
                    << " != " << c.rhs << '\n';
        }
      }
    }
  }
  return ok ? kOk : kMismatch;
}

struct IdentitiesOptions {
  long max_n = 30;
  std::string format = "text";
};

void print_report(const ward::CheckReport& r, bool kv) {
  std::cout << (kv ? r.to_key_values() : r.to_line()) << '\n';
}

int run_identities(const IdentitiesOptions& o) {
  if (o.max_n < 2) throw UsageError("--max-n must be at least 2");
  const bool kv = ward::detail::fold_name(o.format) == "kv";
  ward::IdentitySuiteLimits limits;
  limits.max_n = o.max_n;
  auto reports = ward::run_identity_suite(limits);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    print_report(r, kv);
    if (!r.passed) ++failed;
  }
  std::cout << (failed ? "FAILED " : "all ") << reports.size() - failed << "/" << reports.size()
            << " identity checks passed\n";
  return failed ? kMismatch : kOk;
}

struct ConjectureOptions {
  std::string which;
  long max_n = 15;
};

// Evidence only: always exits 0 once the arguments are valid.
int run_conjecture(const ConjectureOptions& o) {
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  const std::string which = ward::detail::fold_name(o.which);
  ward::TriangleKind kind;
  ward::Classical classical;
  if (which == "stirling1") {
    kind = ward::TriangleKind::BinomialWard1;
    classical = ward::Classical::Stirling1;
  } else if (which == "stirling2") {
    kind = ward::TriangleKind::BinomialWard2;
    classical = ward::Classical::Stirling2;
  } else if (which == "centrallah") {
    kind = ward::TriangleKind::BinomialWardLah;
    classical = ward::Classical::Lah;
  } else {
    throw UsageError("unknown conjecture '" + o.which + "' (stirling1, stirling2, central-lah)");
  }

  std::vector<long> disagree;
  for (long n = 0; n <= o.max_n; ++n) {
    ward::Integer sum;
    for (long k = 0; k <= n; ++k) sum += ward::value(kind, n, k, ward::Strategy::Recurrence);
    const auto c = ward::central(classical, n);
    const bool agree = sum == c;
    if (!agree) disagree.push_back(n);
    std::cout << "n=" << n << " rowsum=" << sum << " central=" << c << (agree ? " agree" : " DISAGREE")
              << '\n';
  }
  std::cout << "n=0.." << o.max_n;
  if (disagree.empty()) {
    std::cout << " all agree\n";
  } else {
    std::cout << " disagreements at n=";
    for (std::size_t i = 0; i < disagree.size(); ++i) std::cout << (i ? "," : "") << disagree[i];
    std::cout << '\n';
  }
  return kOk;
}

struct BFileCompareOptions {
  std::string kind;
  std::string strategy = "recurrence";
  std::string path;
  long offset = 1;
};

int run_bfile_compare(const BFileCompareOptions& o) {
  const auto kind = kind_arg(o.kind);
  const auto strategy = strategy_arg(o.strategy);
  ward::require_supported(kind, strategy);
  std::ifstream in(o.path);
  if (!in) throw UsageError("cannot open '" + o.path + "'");
  ward::BFile file;
  try {
    file = ward::BFile::parse(in);
  } catch (const ward::BFileParseError& e) {
    throw UsageError(o.path + ": " + e.what());
  }
  const auto result = ward::compare_bfile(file, kind, strategy, o.offset);
  if (result.mismatch) {
    const auto& m = *result.mismatch;
    std::cout << "MISMATCH at index " << m.index << " (n=" << m.n << " k=" << m.k
              << "): expected " << m.expected << ", found " << m.found << '\n';
    return kMismatch;
  }
  std::cout << "OK " << result.compared << " entries of " << o.path << " agree with "
            << ward::to_string(kind) << " (" << ward::to_string(strategy) << ")\n";
  return kOk;
}

struct BenchOptions {
  std::string kind;
  long rows = 1;
  std::string strategies = "all";
  bool force = false;
};

int run_bench(const BenchOptions& o) {
  if (o.rows < 1) throw UsageError("rows must be at least 1");
  const auto kind = kind_arg(o.kind);
  const auto strategies = strategies_arg(o.strategies, kind);
  for (auto s : strategies) guard_rows(s, o.rows, o.force);

  std::cout << std::left << std::setw(22) << "strategy" << std::right << std::setw(12) << "seconds"
            << std::setw(10) << "entries" << std::setw(10) << "max_bits" << '\n';
  for (auto s : strategies) {
    const auto start = std::chrono::steady_clock::now();
    const auto t = ward::triangle(kind, o.rows, s);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::size_t max_bits = 0;
    for (const auto& row : t.rows) {
      for (const auto& x : row) max_bits = std::max(max_bits, x.bit_length());
    }
    std::cout << std::left << std::setw(22) << ward::to_string(s) << std::right << std::setw(12)
              << std::fixed << std::setprecision(6) << elapsed.count() << std::setw(10)
              << t.entry_count() << std::setw(10) << max_bits << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ward-related integer triangles: generation, cross-validation and identity checks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "print a triangle");
  gen_cmd->add_option("kind,--kind", gen.kind, "triangle kind")->required();
  gen_cmd->add_option("rows,--rows", gen.rows, "last row index")->required();
  gen_cmd->add_option("strategy,--strategy", gen.strategy, "computation route");
  gen_cmd->add_option("format,--format", gen.format, "table, csv or bfile");
  gen_cmd->add_option("--offset", gen.offset, "first b-file index");
  gen_cmd->add_flag("--force", gen.force, "lift the partition-transform row guard");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "cross-validate strategies entrywise");
  check_cmd->add_option("kind,--kind", check.kinds, "comma-separated kinds or 'all'");
  check_cmd->add_option("rows,--rows", check.rows, "last row index")->required();
  check_cmd->add_option("strategies,--strategies,--strategy", check.strategies,
                        "comma-separated strategies or 'all'");
  check_cmd->add_option("--inject", check.inject, "add 1 to entry N,K of the first strategy");
  check_cmd->add_flag("--force", check.force, "lift the partition-transform row guard");

  IdentitiesOptions ident;
  auto* ident_cmd = app.add_subcommand("identities", "verify every recurrence and identity");
  ident_cmd->add_option("max_n,--max-n", ident.max_n, "largest row checked");
  ident_cmd->add_option("--format", ident.format, "text or kv");

  ConjectureOptions conj;
  auto* conj_cmd = app.add_subcommand("conjecture", "row-sum evidence against central numbers");
  conj_cmd->add_option("which,--which", conj.which, "stirling1, stirling2 or central-lah")->required();
  conj_cmd->add_option("max_n,--max-n", conj.max_n, "largest row checked");

  BFileCompareOptions bcmp;
  auto* bcmp_cmd = app.add_subcommand("bfile-compare", "compare a triangle against a b-file");
  bcmp_cmd->add_option("kind,--kind", bcmp.kind, "triangle kind")->required();
  bcmp_cmd->add_option("strategy,--strategy", bcmp.strategy, "computation route");
  bcmp_cmd->add_option("file,--file", bcmp.path, "b-file path")->required();
  bcmp_cmd->add_option("--offset", bcmp.offset, "index of entry (1,1)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time full-triangle construction per strategy");
  bench_cmd->add_option("kind,--kind", bench.kind, "triangle kind")->required();
  bench_cmd->add_option("rows,--rows", bench.rows, "last row index")->required();
  bench_cmd->add_option("strategies,--strategies,--strategy", bench.strategies,
                        "comma-separated strategies or 'all'");
  bench_cmd->add_flag("--force", bench.force, "lift the partition-transform row guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*check_cmd) return run_check(check);
    if (*ident_cmd) return run_identities(ident);
    if (*conj_cmd) return run_conjecture(conj);
    if (*bcmp_cmd) return run_bfile_compare(bcmp);
    if (*bench_cmd) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ward::UnsupportedStrategy& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
