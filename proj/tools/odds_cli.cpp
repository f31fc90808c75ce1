// odds: command-line front end for the threshold-stopping library.
//
// Subcommands: lambda, xi, winprob, optimal, secretary, bound, simulate,
// verify. Every subcommand takes --format table|json|csv. Exit codes:
// 0 success, 1 invalid input (or failed verification), 2 unknown
// subcommand, 3 computation over budget.

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "odds/asymptotics.hpp"
#include "odds/errors.hpp"
#include "odds/io.hpp"
#include "odds/lambda.hpp"
#include "odds/optimizer.hpp"
#include "odds/oracle.hpp"
#include "odds/patterns.hpp"
#include "odds/rational.hpp"
#include "odds/strategy.hpp"

using json = nlohmann::ordered_json;
using namespace odds;

namespace {

enum class Format { table, json_fmt, csv };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json_fmt;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("format must be table, json or csv");
}

void add_format_flag(CLI::App& app, std::string& fmt) {
  app.add_option("--format", fmt, "output format: table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

// Fixed-width helpers so output bytes do not depend on float printing
// defaults.
std::string fmt_f(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::vector<std::string> to_strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const T& x : v) out.push_back(std::to_string(x));
  return out;
}

// Long cells (big numerators mostly) wrap at 60 characters in table mode;
// JSON and CSV keep them on one line.
constexpr size_t kWrapWidth = 60;

std::vector<std::string> wrap_chunks(const std::string& s, size_t width) {
  std::vector<std::string> out;
  for (size_t i = 0; i < s.size() || out.empty(); i += width)
    out.push_back(s.substr(i, width));
  return out;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  size_t ncol = 0;
  for (const auto& r : rows) ncol = std::max(ncol, r.size());
  std::vector<size_t> width(ncol, 0);
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size(); ++c)
      for (const auto& chunk : wrap_chunks(r[c], kWrapWidth))
        width[c] = std::max(width[c], chunk.size());
  for (const auto& r : rows) {
    std::vector<std::vector<std::string>> cells;
    size_t lines = 1;
    for (const auto& cell : r) {
      cells.push_back(wrap_chunks(cell, kWrapWidth));
      lines = std::max(lines, cells.back().size());
    }
    for (size_t ln = 0; ln < lines; ++ln) {
      std::string line;
      for (size_t c = 0; c < ncol; ++c) {
        std::string chunk = c < cells.size() && ln < cells[c].size() ? cells[c][ln] : "";
        line += chunk;
        if (c + 1 < ncol) line.append(width[c] - chunk.size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      std::printf("%s\n", line.c_str());
    }
  }
}

void print_csv(const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) std::printf("%s\n", join(r, ",").c_str());
}

void print_json(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

int with_parsed(CLI::App& app, int argc, char** argv, const std::function<int()>& body) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 0 is --help; anything else is bad input
  }
  return body();
}

// ---------------------------------------------------------------- lambda

int cmd_lambda(int argc, char** argv) {
  CLI::App app{"exact stage constants, running sums and the asymptotic lower bound"};
  int m = 0, decimals = 10;
  std::string fmt = "table";
  app.add_option("--m", m, "number of stages")->required();
  app.add_option("--decimals", decimals, "printed digits of the bound terms")
      ->check(CLI::Range(1, 200));
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    LambdaSolution sol = solve_lambda_dp(m);
    LowerBound lb = lower_bound(sol, decimals);
    Format f = parse_format(fmt);
    if (f == Format::json_fmt) {
      json j;
      j["m"] = m;
      json lam = json::array(), cs = json::array(), terms = json::array();
      for (const Rational& x : sol.lambda) lam.push_back(rat_to_string(x));
      for (const Rational& x : sol.cumsum) cs.push_back(rat_to_string(x));
      for (const std::string& t : lb.term_decimals) terms.push_back(t);
      j["lambda"] = lam;
      j["cumsum"] = cs;
      j["bound_terms"] = terms;
      j["bound"] = lb.decimal;
      print_json(j);
      return 0;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"k", "lambda", "lambda_decimal", "cumsum", "cumsum_decimal", "bound_term"});
    for (int k = 1; k <= m; ++k) {
      rows.push_back({std::to_string(k), rat_to_string(sol.lambda[k - 1]),
                      rat_to_decimal(sol.lambda[k - 1], 6), rat_to_string(sol.cumsum[k - 1]),
                      rat_to_decimal(sol.cumsum[k - 1], 6), lb.term_decimals[k - 1]});
    }
    rows.push_back({"bound", "", "", "", "", lb.decimal});
    if (f == Format::csv)
      print_csv(rows);
    else
      print_table(rows);
    return 0;
  });
}

// -------------------------------------------------------------------- xi

int cmd_xi(int argc, char** argv) {
  CLI::App app{"winning pattern families of a given order"};
  int k = 0;
  std::string kind = "xi", fmt = "table";
  bool count_only = false;
  app.add_option("--k", k, "pattern order")->required();
  app.add_option("--kind", kind, "family: xi|hat|xi_plus")
      ->check(CLI::IsMember({"xi", "hat", "xi_plus"}));
  app.add_flag("--count-only", count_only, "print only the family size");
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    Format f = parse_format(fmt);
    PatternKind pk = kind == "hat"  ? PatternKind::hat
                     : kind == "xi" ? PatternKind::xi
                                    : PatternKind::xi_plus;
    if (count_only && pk == PatternKind::xi) {
      // counted without enumeration
      long long count = xi_count(k);
      if (f == Format::json_fmt)
        print_json(json{{"k", k}, {"kind", kind}, {"count", count}});
      else if (f == Format::csv)
        print_csv({{"k", "kind", "count"}, {std::to_string(k), kind, std::to_string(count)}});
      else
        std::printf("%lld\n", count);
      return 0;
    }
    PatternSet set = pk == PatternKind::hat  ? enumerate_xi_hat(k)
                     : pk == PatternKind::xi ? enumerate_xi(k)
                                             : enumerate_xi_plus(k);
    if (count_only) {
      long long count = static_cast<long long>(set.vectors.size());
      if (f == Format::json_fmt)
        print_json(json{{"k", k}, {"kind", kind}, {"count", count}});
      else if (f == Format::csv)
        print_csv({{"k", "kind", "count"}, {std::to_string(k), kind, std::to_string(count)}});
      else
        std::printf("%lld\n", count);
      return 0;
    }
    if (f == Format::json_fmt) {
      std::printf("%s\n", pattern_set_to_json(set).c_str());
      return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (f == Format::csv) {
      std::vector<std::string> header;
      for (int j = k; j >= 1; --j) header.push_back("b" + std::to_string(j));
      rows.push_back(header);
    }
    for (const PatternVector& v : set.vectors) rows.push_back(to_strings(v));
    if (f == Format::csv)
      print_csv(rows);
    else
      print_table(rows);
    return 0;
  });
}

// --------------------------------------------------------------- winprob

int cmd_winprob(int argc, char** argv) {
  CLI::App app{"exact win probability of a threshold vector"};
  std::string seq_file, thr_text, fmt = "table";
  int decimals = 6;
  app.add_option("--sequence", seq_file, "sequence file (JSON)")->required();
  app.add_option("--thresholds", thr_text, "comma list, outermost first")->required();
  app.add_option("--decimals", decimals, "digits of the decimal column")->check(CLI::Range(1, 200));
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    OddsSequence seq = sequence_from_json_file(seq_file);
    ThresholdVector t = thresholds_from_csv(thr_text);
    Rational value = win_probability(seq, t);
    Format f = parse_format(fmt);
    std::string dec = rat_to_decimal(value, decimals);
    if (f == Format::json_fmt) {
      json j;
      j["first"] = seq.first();
      j["last"] = seq.last();
      j["m"] = t.m();
      j["thresholds"] = t.values;
      j["value"] = rat_to_string(value);
      j["decimal"] = dec;
      print_json(j);
      return 0;
    }
    std::vector<std::vector<std::string>> rows;
    if (f == Format::csv) {
      rows.push_back({"first", "last", "m", "thresholds", "value", "decimal"});
      rows.push_back({std::to_string(seq.first()), std::to_string(seq.last()),
                      std::to_string(t.m()), join(to_strings(t.values), ";"),
                      rat_to_string(value), dec});
      print_csv(rows);
      return 0;
    }
    rows.push_back({"first", std::to_string(seq.first())});
    rows.push_back({"last", std::to_string(seq.last())});
    rows.push_back({"m", std::to_string(t.m())});
    rows.push_back({"thresholds", join(to_strings(t.values), ",")});
    rows.push_back({"value", rat_to_string(value)});
    rows.push_back({"decimal", dec});
    print_table(rows);
    return 0;
  });
}

// --------------------------------------------------------------- optimal

int cmd_optimal(int argc, char** argv) {
  CLI::App app{"best threshold vector for a sequence"};
  std::string seq_file, method = "ola", fmt = "table";
  int m = 0, decimals = 6;
  app.add_option("--sequence", seq_file, "sequence file (JSON)")->required();
  app.add_option("--m", m, "number of selections")->required();
  app.add_option("--method", method, "search: exhaustive|dp|ola")
      ->check(CLI::IsMember({"exhaustive", "dp", "ola"}));
  app.add_option("--decimals", decimals, "digits of the decimal column")->check(CLI::Range(1, 200));
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    OddsSequence seq = sequence_from_json_file(seq_file);
    OptimalResult res = method == "exhaustive" ? optimal_exhaustive(seq, m)
                        : method == "dp"       ? optimal_dp(seq, m)
                                               : optimal_ola(seq, m);
    Format f = parse_format(fmt);
    std::string dec = rat_to_decimal(res.value, decimals);
    std::string thr =
        res.thresholds ? join(to_strings(res.thresholds->values), f == Format::csv ? ";" : ",")
                       : "-";
    if (f == Format::json_fmt) {
      json j;
      j["method"] = method;
      j["first"] = seq.first();
      j["last"] = seq.last();
      j["m"] = m;
      j["value"] = rat_to_string(res.value);
      j["decimal"] = dec;
      if (res.thresholds)
        j["thresholds"] = res.thresholds->values;
      else
        j["thresholds"] = nullptr;
      print_json(j);
      return 0;
    }
    if (f == Format::csv) {
      print_csv({{"method", "first", "last", "m", "value", "decimal", "thresholds"},
                 {method, std::to_string(seq.first()), std::to_string(seq.last()),
                  std::to_string(m), rat_to_string(res.value), dec, thr}});
      return 0;
    }
    print_table({{"method", method},
                 {"first", std::to_string(seq.first())},
                 {"last", std::to_string(seq.last())},
                 {"m", std::to_string(m)},
                 {"value", rat_to_string(res.value)},
                 {"decimal", dec},
                 {"thresholds", thr}});
    return 0;
  });
}

// ----------------------------------------------- secretary and bound

// Shared rendering of convergence reports. Doubles go out at fixed widths
// so the bytes are stable; the exact columns are empty for fast-path rows.
void render_report(const ConvergenceReport& rep, Format f, bool bound_mode) {
  std::vector<std::string> header = {"instance", "n", "thresholds", "ratios", "value"};
  if (bound_mode) header.push_back("surrogate");
  header.push_back("dev_value");
  header.push_back(bound_mode ? "dev_surrogate" : "dev_ratio_sum");
  header.push_back("value_exact");
  if (bound_mode) header.push_back("surrogate_exact");

  // Exact rationals on common-odds instances easily run to thousands of
  // digits; the table view names their size instead, the machine formats
  // carry them whole.
  auto exact_cell = [&](const Rational& x, bool summarize) -> std::string {
    std::string s = rat_to_string(x);
    if (!summarize || s.size() <= kWrapWidth) return s;
    size_t slash = s.find('/');
    std::string num_digits = std::to_string(slash == std::string::npos ? s.size() : slash);
    std::string den_digits =
        std::to_string(slash == std::string::npos ? size_t{1} : s.size() - slash - 1);
    return "(" + num_digits + "/" + den_digits + " digit rational)";
  };

  auto row_cells = [&](const ConvergenceRow& r, const char* list_sep, bool summarize) {
    std::vector<std::string> ratios;
    for (double x : r.ratios) ratios.push_back(fmt_f(x, 6));
    std::vector<std::string> cells = {r.instance, std::to_string(r.n),
                                      join(to_strings(r.thresholds), list_sep),
                                      join(ratios, list_sep), fmt_f(r.value, 10)};
    if (bound_mode) cells.push_back(fmt_f(r.surrogate, 10));
    cells.push_back(fmt_f(r.dev_value, 10));
    cells.push_back(fmt_f(bound_mode ? r.dev_surrogate : r.dev_ratio_sum, 10));
    cells.push_back(r.exact ? exact_cell(r.value_exact, summarize) : "");
    if (bound_mode) cells.push_back(r.exact ? exact_cell(r.surrogate_exact, summarize) : "");
    return cells;
  };

  if (f == Format::json_fmt) {
    json j;
    j["m"] = rep.m;
    json targets = json::array();
    for (double t : rep.targets) targets.push_back(fmt_f(t, 10));
    j["targets"] = targets;
    j["bound"] = fmt_f(rep.bound, 10);
    j["bound_exact"] = rat_to_string(rep.bound_exact);
    json rows = json::array();
    for (const ConvergenceRow& r : rep.rows) {
      json row;
      row["instance"] = r.instance;
      row["n"] = r.n;
      row["thresholds"] = r.thresholds;
      json ratios = json::array();
      for (double x : r.ratios) ratios.push_back(fmt_f(x, 6));
      row["ratios"] = ratios;
      row["value"] = fmt_f(r.value, 10);
      if (bound_mode) {
        row["surrogate"] = fmt_f(r.surrogate, 10);
        row["dev_value"] = fmt_f(r.dev_value, 10);
        row["dev_surrogate"] = fmt_f(r.dev_surrogate, 10);
      } else {
        row["dev_value"] = fmt_f(r.dev_value, 10);
        row["dev_ratio_sum"] = fmt_f(r.dev_ratio_sum, 10);
      }
      row["exact"] = r.exact;
      if (r.exact) {
        row["value_exact"] = rat_to_string(r.value_exact);
        if (bound_mode) row["surrogate_exact"] = rat_to_string(r.surrogate_exact);
      }
      rows.push_back(row);
    }
    j["rows"] = rows;
    print_json(j);
    return;
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back(header);
  if (f == Format::csv) {
    for (const ConvergenceRow& r : rep.rows) rows.push_back(row_cells(r, ";", false));
    print_csv(rows);
    return;
  }
  for (const ConvergenceRow& r : rep.rows) rows.push_back(row_cells(r, ";", true));
  std::vector<std::string> target_strs;
  for (double t : rep.targets) target_strs.push_back(fmt_f(t, 10));
  print_table({{"m", std::to_string(rep.m)},
               {"targets", join(target_strs, ",")},
               {"bound", fmt_f(rep.bound, 10)}});
  std::printf("\n");
  for (auto& r : rows)
    for (auto& c : r)
      if (c.empty()) c = "-";
  print_table(rows);
}

int cmd_secretary(int argc, char** argv) {
  CLI::App app{"record sequences: optimal thresholds against the limit constants"};
  std::vector<int> ns;
  int m = 0;
  std::string fmt = "table";
  app.add_option("--n", ns, "sequence lengths (repeat or comma list)")
      ->required()
      ->delimiter(',');
  app.add_option("--m", m, "number of selections")->required();
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    ConvergenceReport rep = secretary_convergence(m, ns);
    render_report(rep, parse_format(fmt), false);
    return 0;
  });
}

int cmd_bound(int argc, char** argv) {
  CLI::App app{"common-odds sequences: surrogate and optimal values against the bound"};
  int m = 0;
  std::string schedule_file, fmt = "table";
  app.add_option("--m", m, "number of selections")->required();
  app.add_option("--schedule", schedule_file, "schedule file (JSON)")->required();
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    auto schedule = schedule_from_json_file(schedule_file);
    ConvergenceReport rep = bound_convergence(m, schedule);
    render_report(rep, parse_format(fmt), true);
    return 0;
  });
}

// -------------------------------------------------------------- simulate

int cmd_simulate(int argc, char** argv) {
  CLI::App app{"seeded Monte Carlo estimate of a threshold vector's win probability"};
  std::string seq_file, thr_text, fmt = "table";
  uint64_t trials = 100000, seed = 1;
  int shards = 0;
  app.add_option("--sequence", seq_file, "sequence file (JSON)")->required();
  app.add_option("--thresholds", thr_text, "comma list, outermost first")->required();
  app.add_option("--trials", trials, "number of simulated runs");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--shards", shards, "worker count, 0 = machine default");
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    OddsSequence seq = sequence_from_json_file(seq_file);
    ThresholdVector t = thresholds_from_csv(thr_text);
    OracleResult res = monte_carlo_win_probability(seq, t, trials, seed, shards);
    Format f = parse_format(fmt);
    std::string est = fmt_f(res.estimate, 10), se = fmt_f(res.std_error, 10);
    if (f == Format::json_fmt) {
      json j;
      j["first"] = seq.first();
      j["last"] = seq.last();
      j["m"] = t.m();
      j["thresholds"] = t.values;
      j["trials"] = res.trials;
      j["seed"] = seed;
      j["wins"] = res.wins;
      j["estimate"] = est;
      j["std_error"] = se;
      print_json(j);
      return 0;
    }
    if (f == Format::csv) {
      print_csv(
          {{"first", "last", "m", "thresholds", "trials", "seed", "wins", "estimate",
            "std_error"},
           {std::to_string(seq.first()), std::to_string(seq.last()), std::to_string(t.m()),
            join(to_strings(t.values), ";"), std::to_string(res.trials), std::to_string(seed),
            std::to_string(res.wins), est, se}});
      return 0;
    }
    print_table({{"first", std::to_string(seq.first())},
                 {"last", std::to_string(seq.last())},
                 {"m", std::to_string(t.m())},
                 {"thresholds", join(to_strings(t.values), ",")},
                 {"trials", std::to_string(res.trials)},
                 {"seed", std::to_string(seed)},
                 {"wins", std::to_string(res.wins)},
                 {"estimate", est},
                 {"std_error", se}});
    return 0;
  });
}

// ---------------------------------------------------------------- verify

int cmd_verify(int argc, char** argv) {
  CLI::App app{"randomized cross-checks of formulas, patterns and optimizers"};
  int max_n = 8, m = 3, cases = 25;
  uint64_t seed = 1;
  std::string fmt = "table";
  app.add_option("--max-n", max_n, "largest sequence length drawn");
  app.add_option("--m", m, "largest stage count drawn");
  app.add_option("--cases", cases, "random instances");
  app.add_option("--seed", seed, "RNG seed");
  add_format_flag(app, fmt);
  return with_parsed(app, argc, argv, [&] {
    VerifyReport rep = verify_suite(max_n, m, cases, seed);
    Format f = parse_format(fmt);
    const char* result = rep.all_passed() ? "PASS" : "FAIL";
    if (f == Format::json_fmt) {
      json j;
      j["cases"] = rep.cases;
      j["formula_checks"] = rep.formula_checks;
      j["formula_failures"] = rep.formula_failures;
      j["pattern_checks"] = rep.pattern_checks;
      j["pattern_failures"] = rep.pattern_failures;
      j["witness_checks"] = rep.witness_checks;
      j["witness_failures"] = rep.witness_failures;
      j["optimum_checks"] = rep.optimum_checks;
      j["optimum_failures"] = rep.optimum_failures;
      j["failures"] = rep.failures;
      j["result"] = result;
      print_json(j);
    } else if (f == Format::csv) {
      print_csv({{"cases", "formula_checks", "formula_failures", "pattern_checks",
                  "pattern_failures", "witness_checks", "witness_failures", "optimum_checks",
                  "optimum_failures", "result"},
                 {std::to_string(rep.cases), std::to_string(rep.formula_checks),
                  std::to_string(rep.formula_failures), std::to_string(rep.pattern_checks),
                  std::to_string(rep.pattern_failures), std::to_string(rep.witness_checks),
                  std::to_string(rep.witness_failures), std::to_string(rep.optimum_checks),
                  std::to_string(rep.optimum_failures), result}});
    } else {
      print_table({{"cases", std::to_string(rep.cases)},
                   {"formula_checks", std::to_string(rep.formula_checks)},
                   {"formula_failures", std::to_string(rep.formula_failures)},
                   {"pattern_checks", std::to_string(rep.pattern_checks)},
                   {"pattern_failures", std::to_string(rep.pattern_failures)},
                   {"witness_checks", std::to_string(rep.witness_checks)},
                   {"witness_failures", std::to_string(rep.witness_failures)},
                   {"optimum_checks", std::to_string(rep.optimum_checks)},
                   {"optimum_failures", std::to_string(rep.optimum_failures)},
                   {"result", result}});
      for (const std::string& fmsg : rep.failures) std::printf("failure: %s\n", fmsg.c_str());
    }
    return rep.all_passed() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr,
                 "usage: odds <lambda|xi|winprob|optimal|secretary|bound|simulate|verify> "
                 "[options]\n");
    return 2;
  }
  const std::string sub = argv[1];
  using Runner = int (*)(int, char**);
  Runner runner = nullptr;
  if (sub == "lambda")
    runner = cmd_lambda;
  else if (sub == "xi")
    runner = cmd_xi;
  else if (sub == "winprob")
    runner = cmd_winprob;
  else if (sub == "optimal")
    runner = cmd_optimal;
  else if (sub == "secretary")
    runner = cmd_secretary;
  else if (sub == "bound")
    runner = cmd_bound;
  else if (sub == "simulate")
    runner = cmd_simulate;
  else if (sub == "verify")
    runner = cmd_verify;
  if (!runner) {
    std::fprintf(stderr, "error: unknown subcommand '%s'\n", sub.c_str());
    return 2;
  }
  try {
    return runner(argc - 1, argv + 1);
  } catch (const budget_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
