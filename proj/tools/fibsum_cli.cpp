// Command-line front end: sequence values, sum factorisations, the solution
// search and the finite verification engines.
//
// Exit codes: 0 success / pass, 1 verification failure, 2 usage error,
// 3 resource error.

#include "fibsum/fibsum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <system_error>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_index(const std::string& text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw UsageError("malformed integer '" + text + "'");
  return value;
}

fibsum::WideInt parse_wide(const std::string& text) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (!digits) throw UsageError("malformed nonnegative integer '" + text + "'");
  return fibsum::WideInt(text);
}

struct SeqArgs {
  std::string kind;
  std::string index;
  std::string modulus;
};

int run_seq(const SeqArgs& args) {
  const fibsum::Index n = parse_index(args.index);
  const bool is_fib = args.kind == "fib";
  if (args.modulus.empty()) {
    std::cout << (is_fib ? fibsum::fib(n) : fibsum::lucas(n)) << '\n';
  } else {
    const auto modulus = parse_wide(args.modulus);
    std::cout << (is_fib ? fibsum::fib_mod(n, modulus) : fibsum::lucas_mod(n, modulus)) << '\n';
  }
  return exit_ok;
}

struct FactorArgs {
  std::string n;
  std::string m;
  std::string sign;
};

int run_factor(const FactorArgs& args) {
  const std::int64_t n = parse_index(args.n);
  const std::int64_t m = parse_index(args.m);
  const fibsum::Sign sign = fibsum::parse_sign(args.sign);
  const auto np = fibsum::normalize_pair(n, m, sign);
  if (np.high != n || np.low != m || np.inner != sign) {
    std::cout << "normalized: F_" << n << ' ' << as_char(sign) << " F_" << m << " = "
              << (np.outer == fibsum::Sign::minus ? "-" : "") << "(F_" << np.high << ' '
              << as_char(np.inner) << " F_" << np.low << ")\n";
  }
  fibsum::FactorizationResult f;
  try {
    f = fibsum::sum_factorization(np.high, np.low, np.inner);
  } catch (const fibsum::ParityMismatch&) {
    throw UsageError("n and m have opposite parity: no sum factorisation exists");
  }
  const auto fn = fibsum::fib(f.N);
  const auto lm = fibsum::lucas(f.M);
  std::cout << "epsilon=" << as_int(f.epsilon) << '\n'
            << "N=" << f.N << '\n'
            << "M=" << f.M << '\n'
            << "branch="
            << (f.branch == fibsum::FactorBranch::same_class_mod4 ? "n=m (mod 4)" : "n=m+2 (mod 4)")
            << '\n'
            << "F_N=" << fn << '\n'
            << "L_M=" << lm << '\n'
            << "product=" << fn * lm << '\n';
  return exit_ok;
}

struct SearchArgs {
  std::int64_t max_n = 0;
  std::string sign = "both";
  std::string parity = "any";
  std::string format = "jsonl";
  std::size_t workers = 1;
  bool include_degenerate = true;
};

int run_search(const SearchArgs& args) {
  fibsum::SearchConfig config;
  config.max_n = args.max_n;
  config.plus = args.sign != "-";
  config.minus = args.sign != "+";
  static const std::map<std::string, fibsum::Parity> parities{
      {"any", fibsum::Parity::any}, {"same", fibsum::Parity::same}, {"mixed", fibsum::Parity::mixed}};
  static const std::map<std::string, fibsum::OutputFormat> formats{
      {"jsonl", fibsum::OutputFormat::jsonl},
      {"csv", fibsum::OutputFormat::csv},
      {"table", fibsum::OutputFormat::table}};
  config.parity = parities.at(args.parity);
  config.format = formats.at(args.format);
  config.workers = args.workers;
  config.include_degenerate = args.include_degenerate;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto records = fibsum::search(config);
  fibsum::write_records(std::cout, records, config.format);
  return exit_ok;
}

struct VerifyArgs {
  std::string which;
  std::optional<std::int64_t> bound;
  std::size_t workers = 1;
};

int run_verify(const VerifyArgs& args) {
  static const std::map<std::string, std::int64_t> default_bounds{
      {"powers2", 1000}, {"powers3", 1000}, {"ratio-squares", 400},
      {"fnlm", 60},      {"l18", 20000},    {"theorem1", 300}};
  const std::int64_t bound = args.bound.value_or(default_bounds.at(args.which));
  const std::size_t workers = args.workers;

  fibsum::VerificationReport report;
  try {
    if (args.which == "powers2") {
      report = fibsum::verify_powers(2, bound, workers);
    } else if (args.which == "powers3") {
      report = fibsum::verify_powers(3, bound, workers);
    } else if (args.which == "ratio-squares") {
      report = fibsum::verify_ratio_squares_all(bound, workers);
    } else if (args.which == "fnlm") {
      report = fibsum::enumerate_fnlm(bound, bound, workers);
    } else if (args.which == "l18") {
      report = fibsum::check_107(bound, workers);
    } else {
      report = fibsum::verify_theorem1(bound, workers);
    }
  } catch (const fibsum::BoundTooSmall& e) {
    throw UsageError(e.what());
  }
  std::cout << fibsum::to_json(report).dump() << '\n';
  return report.pass ? exit_ok : exit_verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect powers among sums and differences of two Fibonacci numbers"};
  app.set_config("--config", "", "Read options from a TOML/INI file (flags override it)");
  app.require_subcommand(1);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print F_n or L_n (optionally modulo M)");
  seq_cmd->add_option("kind", seq.kind, "fib or lucas")
      ->required()
      ->check(CLI::IsMember({"fib", "lucas"}));
  seq_cmd->add_option("n", seq.index, "Signed index (use -- before a negative index)")->required();
  seq_cmd->add_option("--mod", seq.modulus, "Modulus >= 2");

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "Write F_n +/- F_m as F_N * L_M");
  factor_cmd->add_option("--n", factor.n, "First index")->required();
  factor_cmd->add_option("--m", factor.m, "Second index")->required();
  factor_cmd->add_option("--sign", factor.sign, "+ or -")
      ->required()
      ->check(CLI::IsMember({"+", "-"}));

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Find F_n +/- F_m = y^p for 0 <= m <= n <= B");
  search_cmd->add_option("--max-n", search.max_n, "Largest index B")->required();
  search_cmd->add_option("--sign", search.sign, "+, - or both")
      ->check(CLI::IsMember({"+", "-", "both"}));
  search_cmd->add_option("--parity", search.parity, "any, same or mixed")
      ->check(CLI::IsMember({"any", "same", "mixed"}));
  search_cmd->add_option("--format", search.format, "jsonl, csv or table")
      ->check(CLI::IsMember({"jsonl", "csv", "table"}));
  search_cmd->add_option("--workers", search.workers, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--include-degenerate,!--exclude-degenerate", search.include_degenerate,
                       "Emit rows whose value is 0 or 1 (default on)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a finite verification engine");
  verify_cmd->add_option("which", verify.which, "Engine")
      ->required()
      ->check(CLI::IsMember({"powers2", "powers3", "ratio-squares", "fnlm", "l18", "theorem1"}));
  verify_cmd->add_option("--bound", verify.bound, "Scan bound");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*seq_cmd) return run_seq(seq);
    if (*factor_cmd) return run_factor(factor);
    if (*search_cmd) return run_search(search);
    return run_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return exit_resource;
  } catch (const std::length_error& e) {
    std::cerr << "error: resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
