// acw: exact counts, sequence tables, constructive enumeration, and
// formula-vs-oracle verification for words that have a conjugate at
// Hamming distance exactly 2.
//
// Exit codes: 0 success, 1 precondition violation, 2 budget exceeded,
// 3 verification mismatch.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "acw/budget.hpp"
#include "acw/counting.hpp"
#include "acw/enumeration.hpp"
#include "acw/finewilf.hpp"
#include "acw/word.hpp"

namespace {

using acw::Count;
using acw::Symbol;

std::uint64_t parse_env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " must be an unsigned integer");
  }
}

// Inclusive "a..b" range; a bare integer means a..a.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  try {
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
      const std::size_t n = std::stoull(text);
      return {n, n};
    }
    const std::size_t lo = std::stoull(text.substr(0, sep));
    const std::size_t hi = std::stoull(text.substr(sep + 2));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be a..b with a <= b");
  }
}

bool takes_shift(const std::string& kind) {
  return kind == "h_shift" || kind == "h_overlap" || kind == "h_new";
}

Count dispatch_count(const std::string& kind, Symbol k, std::size_t n,
                     std::size_t i) {
  if (kind == "h") return acw::h_total(k, n);
  if (kind == "h_shift") return acw::h_shift(k, n, i);
  if (kind == "h_overlap") return acw::h_overlap(k, n, i);
  if (kind == "h_new") return acw::h_new(k, n, i);
  if (kind == "h_exactly_one") return acw::h_exactly_one(k, n);
  if (kind == "lyndon") return acw::count_lyndon_in_h(k, n);
  if (kind == "primitive") return acw::count_primitive(k, n);
  if (kind == "powers") return acw::count_powers(k, n);
  if (kind == "prime_form") return acw::h_prime_closed_form(k, n);
  if (kind == "even_bound") return acw::even_lower_bound(k, n);
  throw std::invalid_argument("unknown count kind: " + kind);
}

int run_count(const std::string& kind, Symbol k, std::size_t n,
              const CLI::Option* i_opt, std::size_t i,
              const CLI::Option* m_opt, std::size_t m) {
  if (takes_shift(kind) && i_opt->count() == 0) {
    throw std::invalid_argument("count " + kind + " requires --i");
  }
  if (kind == "pairs") {
    if (m_opt->count() == 0) {
      throw std::invalid_argument("count pairs requires --m");
    }
    std::cout << acw::h_pairs(k, m, n) << "\n";
    return 0;
  }
  std::cout << dispatch_count(kind, k, n, i) << "\n";
  return 0;
}

int run_table(const std::string& kind, Symbol k, const std::string& range,
              const std::string& format) {
  const auto [n_lo, n_hi] = parse_range(range);
  const bool with_shift = takes_shift(kind);

  struct Row {
    std::size_t n, i;
    Count value;
  };
  std::vector<Row> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    if (with_shift) {
      const std::size_t i_hi = kind == "h_shift" ? n - 1 : n / 2;
      for (std::size_t i = 1; i <= i_hi && i < n; ++i) {
        rows.push_back({n, i, dispatch_count(kind, k, n, i)});
      }
    } else {
      rows.push_back({n, 0, dispatch_count(kind, k, n, 0)});
    }
  }

  if (format == "csv") {
    std::cout << (with_shift ? "k,n,i,value" : "k,n,value") << "\n";
    for (const Row& row : rows) {
      std::cout << k << "," << row.n << ",";
      if (with_shift) std::cout << row.i << ",";
      std::cout << row.value << "\n";
    }
  } else {  // jsonl
    for (const Row& row : rows) {
      std::cout << "{\"k\":" << k << ",\"n\":" << row.n;
      if (with_shift) std::cout << ",\"i\":" << row.i;
      std::cout << ",\"kind\":\"" << kind << "\",\"value\":" << row.value
                << "}\n";
    }
  }
  return 0;
}

int run_enumerate(const std::string& kind, Symbol k, std::size_t n,
                  const CLI::Option* i_opt, std::size_t i,
                  const CLI::Option* j_opt, std::size_t j,
                  const CLI::Option* m_opt, std::size_t m,
                  std::uint64_t budget, Symbol glyph_limit) {
  std::size_t count = 0;
  auto emit = [&](const acw::Word& w) {
    std::cout << acw::to_string(w, glyph_limit) << "\n";
    ++count;
  };

  if (kind == "finewilf") {
    if (m_opt->count() == 0) {
      throw std::invalid_argument("enumerate finewilf requires --m");
    }
    for (const auto& [x, y] : acw::search_fine_wilf_pairs(k, m, n, budget)) {
      std::cout << acw::to_string(x, glyph_limit) << " "
                << acw::to_string(y, glyph_limit) << "\n";
      ++count;
    }
  } else if (kind == "h_shift") {
    if (i_opt->count() == 0) {
      throw std::invalid_argument("enumerate h_shift requires --i");
    }
    for (const auto& w : acw::enumerate_h_shift(k, n, i, budget)) emit(w);
  } else if (kind == "intersection") {
    if (i_opt->count() == 0 || j_opt->count() == 0) {
      throw std::invalid_argument("enumerate intersection requires --i and --j");
    }
    for (const auto& w : acw::enumerate_intersection(k, n, i, j, budget)) {
      emit(w);
    }
  } else if (kind == "h") {
    for (const auto& w : acw::enumerate_h(k, n, budget)) emit(w);
  } else {  // exactly_one
    for (const auto& w : acw::enumerate_exactly_one(k, n, budget)) emit(w);
  }
  std::cout << "# count=" << count << "\n";
  return 0;
}

int run_verify(Symbol k_max, std::size_t n_max, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t cases = 0;
  std::uint64_t checks = 0;

  struct CheckCase {
    const char* kind;
    bool has_i;
    std::size_t i;
    Count formula, oracle;
    bool ok;
  };

  for (Symbol k = 1; k <= k_max; ++k) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      if (acw::pow_count(k, n) > budget) continue;
      const acw::HCensus census = acw::oracle_h_census(k, n, budget);

      std::vector<CheckCase> case_checks;
      auto equal = [&](const char* check_kind, bool has_i, std::size_t i,
                       Count formula, const Count& oracle) {
        const bool ok = formula == oracle;
        case_checks.push_back(
            {check_kind, has_i, i, std::move(formula), oracle, ok});
      };

      equal("h", false, 0, acw::h_total(k, n), census.h);
      for (std::size_t i = 1; i < n; ++i) {
        equal("h_shift", true, i, acw::h_shift(k, n, i),
              census.h_by_shift.at(i));
      }
      for (std::size_t i = 1; 2 * i <= n; ++i) {
        equal("h_new", true, i, acw::h_new(k, n, i),
              census.h_new_by_shift.at(i));
      }
      equal("h_exactly_one", false, 0, acw::h_exactly_one(k, n),
            census.h_exactly_one);
      equal("lyndon", false, 0, acw::count_lyndon_in_h(k, n),
            census.lyndon_in_h);
      if (acw::is_prime(n)) {
        equal("prime_form", false, 0, acw::h_prime_closed_form(k, n),
              census.h);
      }
      if (k >= 2 && n % 2 == 0 && n / 2 >= 2) {
        Count bound = acw::even_lower_bound(k, n / 2);
        const bool ok = census.h >= bound;
        case_checks.push_back(
            {"even_bound", false, 0, std::move(bound), census.h, ok});
      }

      for (const CheckCase& c : case_checks) {
        if (c.ok) continue;
        std::cout << "verify: FAIL k=" << k << " n=" << n << " i=";
        if (c.has_i) {
          std::cout << c.i;
        } else {
          std::cout << "-";
        }
        std::cout << " kind=" << c.kind << " formula=" << c.formula
                  << " oracle=" << c.oracle << "\n";
        return 3;
      }

      std::cout << "k=" << k << " n=" << n << " checks=" << case_checks.size()
                << " ok\n";
      ++cases;
      checks += case_checks.size();
    }
  }
  std::cout << "verify: pass cases=" << cases << " checks=" << checks << "\n";
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"words with a conjugate at Hamming distance exactly 2"};
  app.require_subcommand(1);

  Symbol k = 2;
  std::size_t n = 0, i = 0, j = 0, m = 0;
  std::uint64_t budget_flag = 0;
  std::string kind, range;
  std::string table_format = "csv";
  std::string enum_format = "plain";

  auto* count_cmd = app.add_subcommand("count", "print one exact count");
  count_cmd->add_option("kind", kind, "count to compute")
      ->required()
      ->check(CLI::IsMember({"h", "h_shift", "h_overlap", "h_new",
                             "h_exactly_one", "lyndon", "primitive", "powers",
                             "pairs", "prime_form", "even_bound"}));
  count_cmd->add_option("--k", k, "alphabet size")->required();
  count_cmd->add_option("--n", n, "word length")->required();
  auto* count_i = count_cmd->add_option("--i", i, "shift index");
  auto* count_m = count_cmd->add_option("--m", m, "first word length (pairs)");

  auto* table_cmd = app.add_subcommand("table", "print a sequence table");
  table_cmd->add_option("kind", kind, "count to tabulate")
      ->required()
      ->check(CLI::IsMember({"h", "h_shift", "h_overlap", "h_new",
                             "h_exactly_one", "lyndon", "primitive", "powers",
                             "prime_form", "even_bound"}));
  table_cmd->add_option("--k", k, "alphabet size")->required();
  table_cmd->add_option("--n", range, "length range a..b (inclusive)")
      ->required();
  table_cmd->add_option("--format", table_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "list a word set");
  enum_cmd->add_option("kind", kind, "set to enumerate")
      ->required()
      ->check(CLI::IsMember(
          {"h", "h_shift", "intersection", "exactly_one", "finewilf"}));
  enum_cmd->add_option("--k", k, "alphabet size")->required();
  enum_cmd->add_option("--n", n, "word length (second length for finewilf)")
      ->required();
  auto* enum_i = enum_cmd->add_option("--i", i, "shift index");
  auto* enum_j = enum_cmd->add_option("--j", j, "second shift index");
  auto* enum_m = enum_cmd->add_option("--m", m, "first word length (finewilf)");
  auto* enum_budget = enum_cmd->add_option("--budget", budget_flag,
                                           "max words to touch");
  enum_cmd->add_option("--format", enum_format, "output format")
      ->check(CLI::IsMember({"plain"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "sweep formulas against the scan oracle");
  Symbol k_max = 2;
  std::size_t n_max = 2;
  verify_cmd->add_option("--k-max", k_max, "largest alphabet size")
      ->required();
  verify_cmd->add_option("--n-max", n_max, "largest word length")->required();
  auto* verify_budget =
      verify_cmd->add_option("--budget", budget_flag, "max words to scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::uint64_t env_budget =
        parse_env_u64("AC_ORACLE_BUDGET", acw::default_budget);
    const Symbol glyph_limit = static_cast<Symbol>(
        parse_env_u64("AC_OUTPUT_WIDTH", 10));

    if (count_cmd->parsed()) {
      return run_count(kind, k, n, count_i, i, count_m, m);
    }
    if (table_cmd->parsed()) {
      return run_table(kind, k, range, table_format);
    }
    if (enum_cmd->parsed()) {
      const std::uint64_t budget =
          enum_budget->count() > 0 ? budget_flag : env_budget;
      return run_enumerate(kind, k, n, enum_i, i, enum_j, j, enum_m, m,
                           budget, glyph_limit);
    }
    const std::uint64_t budget =
        verify_budget->count() > 0 ? budget_flag : env_budget;
    return run_verify(k_max, n_max, budget);
  } catch (const acw::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
