#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schurkit/combinatorics.hpp"
#include "schurkit/error.hpp"
#include "schurkit/factored_rational.hpp"
#include "schurkit/format.hpp"
#include "schurkit/json_io.hpp"
#include "schurkit/parallel.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/semisimplicity.hpp"

namespace schurkit::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned thread_budget() {
  const char* raw = std::getenv("SCHURKIT_THREADS");
  if (raw == nullptr) return std::max(1U, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1)
    throw UsageError(std::string("SCHURKIT_THREADS must be a positive integer, got '") + raw + "'");
  return static_cast<unsigned>(value);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class value;
  if (text.empty() || value.set_str(text, 10) != 0 || value.get_den() == 0)
    throw UsageError("bad rational value '" + text + "'");
  value.canonicalize();
  return value;
}

Specialization parse_specialization(int m, const std::vector<std::string>& assignments,
                                    std::optional<std::uint64_t> modulus) {
  std::map<int, mpq_class> values;
  for (const auto& entry : assignments) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects qN=value, got '" + entry + "'");
    std::optional<Variable> v;
    try {
      v = Variable::parse(entry.substr(0, eq));
    } catch (const Error&) {
      throw UsageError("--set: unknown parameter '" + entry.substr(0, eq) + "'");
    }
    if (v->is_x() || v->index() > m) throw UsageError("--set: " + v->name() + " is not a parameter of level " + std::to_string(m));
    if (!values.emplace(v->index(), parse_rational(entry.substr(eq + 1))).second)
      throw UsageError("--set: " + v->name() + " assigned twice");
  }
  std::vector<mpq_class> params;
  for (int s = 1; s <= m; ++s) {
    auto it = values.find(s);
    if (it == values.end()) throw UsageError("--set: q" + std::to_string(s) + " is not assigned");
    params.push_back(it->second);
  }
  Field field = Field::rationals();
  if (modulus) {
    try {
      field = Field::prime(*modulus);
    } catch (const Error& e) {
      throw UsageError(std::string("--mod: ") + e.what());
    }
  }
  try {
    return Specialization(field, params);
  } catch (const Error& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
}

std::vector<Multipartition> target_multipartitions(std::optional<int> m, std::optional<int> n,
                                                   const std::string& lambda_json) {
  if (!lambda_json.empty()) {
    if (m || n) throw UsageError("--lambda cannot be combined with --m/--n");
    try {
      return {multipartition_from_json(json::parse(lambda_json))};
    } catch (const json::exception& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    } catch (const Error& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    }
  }
  if (!m || !n) throw UsageError("need --m and --n (or --lambda)");
  return enumerate_multipartitions(*m, *n);
}

std::string latex_row(const std::string& label, const std::string& value) {
  return "$" + label + "$ & $" + value + "$ \\\\";
}

// -- enumerate ------------------------------------------------------------

int run_enumerate(int m, int n, OutputFormat format, std::ostream& out) {
  const auto all = enumerate_multipartitions(m, n);
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& lambda : all) arr.push_back(to_json(lambda));
    out << arr.dump() << '\n';
    return kSuccess;
  }
  for (const auto& lambda : all) {
    if (format == OutputFormat::Latex)
      out << "$" << to_text(lambda) << "$ \\\\\n";
    else
      out << to_text(lambda) << '\n';
  }
  return kSuccess;
}

// -- schur ----------------------------------------------------------------

struct SchurRecord {
  Multipartition lambda;
  FactoredRational value;
  std::optional<SparsePoly> expanded;
};

int run_schur(const std::vector<Multipartition>& targets, const SchurFormula& formula, OutputFormat format,
              bool expand, unsigned threads, std::ostream& out) {
  auto records = parallel_map(
      targets,
      [&](const Multipartition& lambda) {
        SchurRecord record{lambda, schur_element(lambda, formula), std::nullopt};
        if (expand) record.expanded = fr_expand(record.value, Alphabet{lambda.level(), false});
        return record;
      },
      threads);

  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : records) {
      json entry{{"multipartition", to_json(r.lambda)}, {"formula", formula.name()}, {"schur", to_json(r.value)}};
      if (r.expanded) entry["expanded"] = to_json(*r.expanded);
      arr.push_back(std::move(entry));
    }
    out << arr.dump() << '\n';
    return kSuccess;
  }
  for (const auto& r : records) {
    if (format == OutputFormat::Latex) {
      std::string row = "$" + to_text(r.lambda) + "$ & $" + to_latex(r.value) + "$";
      if (r.expanded) row += " & $" + to_latex(*r.expanded) + "$";
      out << row << " \\\\\n";
    } else {
      out << to_text(r.lambda) << '\t' << to_text(r.value);
      if (r.expanded) out << '\t' << to_text(*r.expanded);
      out << '\n';
    }
  }
  return kSuccess;
}

// -- pinv -----------------------------------------------------------------

int run_pinv(int m, int n, OutputFormat format, bool expand, std::ostream& out) {
  const FactoredRational p = p_invariant(m, n);
  std::optional<SparsePoly> expanded;
  if (expand) expanded = fr_expand(p, Alphabet{m, false});
  switch (format) {
    case OutputFormat::Json: {
      json entry{{"m", m}, {"n", n}, {"p_invariant", to_json(p)}};
      if (expanded) entry["expanded"] = to_json(*expanded);
      out << entry.dump() << '\n';
      break;
    }
    case OutputFormat::Latex:
      out << to_latex(p) << '\n';
      if (expanded) out << to_latex(*expanded) << '\n';
      break;
    case OutputFormat::Text:
      out << to_text(p) << '\n';
      if (expanded) out << to_text(*expanded) << '\n';
      break;
  }
  return kSuccess;
}

// -- semisimple -----------------------------------------------------------

int run_semisimple(int m, int n, const Specialization& theta, OutputFormat format, bool scan, std::ostream& out) {
  const SemisimplicityReport report = cross_check_criterion(m, n, theta, scan);
  if (format == OutputFormat::Json)
    out << to_json(report).dump() << '\n';
  else
    out << to_text(report);
  return kSuccess;
}

// -- verify ---------------------------------------------------------------

struct SuiteOptions {
  std::optional<int> m;
  std::optional<int> n;
  std::uint64_t seed = 1;
  int samples = 100;
  std::optional<std::uint64_t> modulus;
  unsigned threads = 1;
};

struct SuiteResult {
  std::size_t checked = 0;
  std::string noun;
  std::vector<json> counterexamples;
};

int need(const std::optional<int>& value, const char* flag, const std::string& suite) {
  if (!value) throw UsageError("suite " + suite + " needs " + flag);
  return *value;
}

// Runs check on each item in parallel; check returns a counterexample or null.
template <typename T>
SuiteResult sweep(const std::vector<T>& items, std::string noun, unsigned threads,
                  const std::function<json(const T&)>& check) {
  SuiteResult result{items.size(), std::move(noun), {}};
  for (auto& failure : parallel_map(items, check, threads))
    if (!failure.is_null()) result.counterexamples.push_back(std::move(failure));
  return result;
}

std::vector<std::pair<Partition, Partition>> partition_pairs(int max_size) {
  const auto all = partitions_up_to(max_size);
  std::vector<std::pair<Partition, Partition>> pairs;
  for (const auto& a : all)
    for (const auto& b : all) pairs.emplace_back(a, b);
  return pairs;
}

json mismatch(const char* what, json context) {
  context["check"] = what;
  return context;
}

SuiteResult suite_three_formulas(const SuiteOptions& o) {
  const auto items = enumerate_multipartitions(need(o.m, "--m", "three-formulas"), need(o.n, "--n", "three-formulas"));
  return sweep<Multipartition>(items, "multipartitions", o.threads, [](const Multipartition& lambda) -> json {
    const FactoredRational reference = schur_element(lambda, SchurFormula::cancellation_free());
    std::vector<SchurFormula> others{SchurFormula::product()};
    for (int extra = 0; extra <= 2; ++extra) others.push_back(SchurFormula::symbol(lambda.length() + extra));
    for (const auto& formula : others) {
      const FactoredRational value = schur_element(lambda, formula);
      if (!fr_equal(value, reference))
        return mismatch("three-formulas", {{"multipartition", to_json(lambda)},
                                           {"formula", formula.name()},
                                           {"expected", to_json(reference)},
                                           {"got", to_json(value)}});
    }
    return nullptr;
  });
}

SuiteResult suite_kernels(const SuiteOptions& o) {
  const auto pairs = partition_pairs(need(o.n, "--n", "kernels"));
  using Pair = std::pair<Partition, Partition>;
  return sweep<Pair>(pairs, "partition pairs", o.threads, [](const Pair& p) -> json {
    const FactoredRational x = x_kernel(p.first, p.second);
    const int base = std::max(p.first.length(), p.second.length());
    json context{{"lambda", to_json(p.first)}, {"mu", to_json(p.second)}};
    if (!fr_equal(x, z_kernel(p.first, p.second))) return mismatch("X=Z", context);
    for (int L = base; L <= base + 2; ++L)
      if (!fr_equal(x, y_kernel(p.first, p.second, L))) {
        context["L"] = L;
        return mismatch("X=Y", context);
      }
    return nullptr;
  });
}

SuiteResult suite_beta_shift(const SuiteOptions& o) {
  const auto pairs = partition_pairs(need(o.n, "--n", "beta-shift"));
  using Pair = std::pair<Partition, Partition>;
  return sweep<Pair>(pairs, "partition pairs", o.threads, [](const Pair& p) -> json {
    const int base = std::max(p.first.length(), p.second.length());
    for (int L = base; L <= base + 2; ++L)
      if (!fr_equal(y_kernel(p.first, p.second, L), y_kernel(p.first, p.second, L + 1)))
        return mismatch("beta-shift", {{"lambda", to_json(p.first)}, {"mu", to_json(p.second)}, {"L", L}});
    return nullptr;
  });
}

SuiteResult suite_x_symmetry(const SuiteOptions& o) {
  const auto pairs = partition_pairs(need(o.n, "--n", "x-symmetry"));
  using Pair = std::pair<Partition, Partition>;
  return sweep<Pair>(pairs, "partition pairs", o.threads, [](const Pair& p) -> json {
    if (!verify_x_symmetry(p.first, p.second))
      return mismatch("x-symmetry", {{"lambda", to_json(p.first)}, {"mu", to_json(p.second)}});
    return nullptr;
  });
}

SuiteResult suite_mu_identity(const SuiteOptions& o) {
  std::vector<std::pair<Partition, int>> cases;
  for (const auto& mu : partitions_up_to(need(o.n, "--n", "mu-identity")))
    for (int ell = 1; ell <= mu.first(); ++ell) cases.emplace_back(mu, ell);
  using Case = std::pair<Partition, int>;
  return sweep<Case>(cases, "cases", o.threads, [](const Case& c) -> json {
    if (!verify_mu_identity(c.first, c.second))
      return mismatch("mu-identity", {{"mu", to_json(c.first)}, {"ell", c.second}});
    return nullptr;
  });
}

SuiteResult suite_hook_beta(const SuiteOptions& o) {
  std::vector<std::pair<Partition, int>> cases;
  for (const auto& lambda : partitions_up_to(need(o.n, "--n", "hook-beta")))
    for (int L = lambda.length(); L <= lambda.length() + 3; ++L) cases.emplace_back(lambda, L);
  using Case = std::pair<Partition, int>;
  return sweep<Case>(cases, "cases", o.threads, [](const Case& c) -> json {
    if (!verify_hook_beta_identity(c.first, c.second))
      return mismatch("hook-beta", {{"lambda", to_json(c.first)}, {"L", c.second}});
    return nullptr;
  });
}

SuiteResult suite_sm_action(const SuiteOptions& o) {
  const int m = need(o.m, "--m", "sm-action");
  const auto items = enumerate_multipartitions(m, need(o.n, "--n", "sm-action"));
  std::vector<std::vector<int>> group;
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 1);
  do group.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));

  return sweep<Multipartition>(items, "multipartitions", o.threads, [&group](const Multipartition& lambda) -> json {
    const FactoredRational base = schur_element(lambda, SchurFormula::cancellation_free());
    for (const auto& s : group) {
      const FactoredRational moved = schur_element(permute_components(lambda, s), SchurFormula::cancellation_free());
      if (!fr_equal(moved, apply_permutation(s, base)))
        return mismatch("sm-action", {{"multipartition", to_json(lambda)}, {"sigma", s}});
    }
    return nullptr;
  });
}

SuiteResult suite_integrality(const SuiteOptions& o) {
  const int m = need(o.m, "--m", "integrality");
  const int n = need(o.n, "--n", "integrality");
  const auto items = enumerate_multipartitions(m, n);
  return sweep<Multipartition>(items, "multipartitions", o.threads, [m, n](const Multipartition& lambda) -> json {
    json context{{"multipartition", to_json(lambda)}};
    try {
      const SparsePoly poly = fr_expand(schur_element(lambda, SchurFormula::cancellation_free()), Alphabet{m, false});
      if (poly.total_degree() > n * (m - 1)) {
        context["degree"] = poly.total_degree();
        return mismatch("degree-bound", context);
      }
    } catch (const Error& e) {
      context["error"] = e.what();
      return mismatch("integrality", context);
    }
    return nullptr;
  });
}

SuiteResult suite_trace_identity(const SuiteOptions& o) {
  const int m = need(o.m, "--m", "trace-identity");
  const int n = need(o.n, "--n", "trace-identity");
  SuiteResult result;
  result.noun = "multipartitions";
  for_each_multipartition(m, n, [&](const Multipartition&) { ++result.checked; });
  if (!verify_trace_identity(m, n))
    result.counterexamples.push_back(mismatch("trace-identity", {{"m", m}, {"n", n}}));
  return result;
}

SuiteResult suite_criterion(const SuiteOptions& o) {
  const int m = need(o.m, "--m", "criterion");
  const int n = need(o.n, "--n", "criterion");
  if (n < 1) throw UsageError("suite criterion needs --n >= 1");
  Field field = Field::rationals();
  if (o.modulus) {
    try {
      field = Field::prime(*o.modulus);
    } catch (const Error& e) {
      throw UsageError(std::string("--mod: ") + e.what());
    }
  }
  std::mt19937_64 rng(o.seed);
  std::vector<Specialization> samples;
  for (int k = 0; k < o.samples; ++k) samples.push_back(random_specialization(m, n, field, rng));
  return sweep<Specialization>(samples, "specializations", o.threads, [m, n](const Specialization& theta) -> json {
    const SemisimplicityReport report = cross_check_criterion(m, n, theta);
    if (report.agreement.value_or(false)) return nullptr;
    json values = json::array();
    for (int s = 1; s <= m; ++s) values.push_back(theta.param(s).to_string());
    json context = to_json(report);
    context["q"] = std::move(values);
    return mismatch("criterion", context);
  });
}

const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& suites() {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> table{
      {"three-formulas", suite_three_formulas}, {"kernels", suite_kernels},
      {"beta-shift", suite_beta_shift},         {"x-symmetry", suite_x_symmetry},
      {"mu-identity", suite_mu_identity},       {"hook-beta", suite_hook_beta},
      {"sm-action", suite_sm_action},           {"integrality", suite_integrality},
      {"trace-identity", suite_trace_identity}, {"criterion", suite_criterion},
  };
  return table;
}

int run_verify(const std::string& suite, const SuiteOptions& options, std::ostream& out) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw UsageError("unknown suite '" + suite + "'");
  const SuiteResult result = it->second(options);
  for (const auto& failure : result.counterexamples) out << failure.dump() << '\n';
  out << "checked " << result.checked << ' ' << result.noun << ", " << result.counterexamples.size()
      << " mismatches\n";
  return result.counterexamples.empty() ? kSuccess : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur elements of degenerate cyclotomic Hecke algebras", "schurkit"};
  app.require_subcommand(1);

  std::optional<int> m;
  std::optional<int> n;
  std::string format_name = "text";
  const auto level_check = CLI::Range(1, 64);
  const auto size_check = CLI::Range(0, 64);

  auto* enumerate = app.add_subcommand("enumerate", "List the m-multipartitions of n");
  enumerate->add_option("--m", m, "Level m")->required()->check(level_check);
  enumerate->add_option("--n", n, "Size n")->required()->check(size_check);
  enumerate->add_option("--format", format_name, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));

  std::string formula_name = "cancellation";
  std::string lambda_json;
  bool expand = false;
  auto* schur = app.add_subcommand("schur", "Schur elements of one multipartition or all of P_{m,n}");
  schur->add_option("--m", m, "Level m")->check(level_check);
  schur->add_option("--n", n, "Size n")->check(size_check);
  schur->add_option("--lambda", lambda_json, "One multipartition as JSON, e.g. [[2],[1,1]]");
  schur->add_option("--formula", formula_name, "product | symbol | symbol:L | cancellation");
  schur->add_option("--format", format_name, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));
  schur->add_flag("--expand", expand, "Also print the expanded polynomial");

  std::string suite;
  SuiteOptions suite_options;
  std::uint64_t modulus = 0;
  auto* verify = app.add_subcommand("verify", "Check an identity over a finite range");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--m", m, "Level m")->check(level_check);
  verify->add_option("--n", n, "Size n (or maximal partition size)")->check(size_check);
  verify->add_option("--seed", suite_options.seed, "Random seed");
  verify->add_option("--samples", suite_options.samples, "Random specializations per run")->check(CLI::Range(1, 1000000));
  auto* verify_mod = verify->add_option("--mod", modulus, "Work over F_p");

  std::vector<std::string> assignments;
  bool no_scan = false;
  auto* semisimple = app.add_subcommand("semisimple", "Decide semisimplicity of a specialization");
  semisimple->add_option("--m", m, "Level m")->required()->check(level_check);
  semisimple->add_option("--n", n, "Size n")->required()->check(CLI::Range(1, 64));
  semisimple->add_option("--set", assignments, "qN=value (value a or a/b)")->required();
  auto* semisimple_mod = semisimple->add_option("--mod", modulus, "Work over F_p");
  semisimple->add_option("--format", format_name, "json | text")->check(CLI::IsMember({"json", "text"}));
  semisimple->add_flag("--no-scan", no_scan, "Skip the exhaustive vanishing scan");

  auto* pinv = app.add_subcommand("pinv", "The separation polynomial n! prod (d + q_i - q_j)");
  pinv->add_option("--m", m, "Level m")->required()->check(level_check);
  pinv->add_option("--n", n, "Size n")->required()->check(CLI::Range(1, 64));
  pinv->add_option("--format", format_name, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));
  pinv->add_flag("--expand", expand, "Also print the expanded polynomial");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const unsigned threads = thread_budget();
    const OutputFormat format = parse_output_format(format_name);
    if (enumerate->parsed()) return run_enumerate(*m, *n, format, out);
    if (schur->parsed()) {
      SchurFormula formula;
      try {
        formula = SchurFormula::parse(formula_name);
      } catch (const Error& e) {
        throw UsageError(std::string("--formula: ") + e.what());
      }
      const auto targets = target_multipartitions(m, n, lambda_json);
      try {
        return run_schur(targets, formula, format, expand, threads, out);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::LTooSmall) throw UsageError(std::string("--formula: ") + e.what());
        throw;
      }
    }
    if (verify->parsed()) {
      suite_options.m = m;
      suite_options.n = n;
      suite_options.threads = threads;
      if (verify_mod->count() > 0) suite_options.modulus = modulus;
      return run_verify(suite, suite_options, out);
    }
    if (semisimple->parsed()) {
      std::optional<std::uint64_t> mod;
      if (semisimple_mod->count() > 0) mod = modulus;
      const Specialization theta = parse_specialization(*m, assignments, mod);
      if (!theta.field().is_rationals() && theta.field().modulus() <= static_cast<std::uint64_t>(*n))
        err << "warning: p <= n, so n! vanishes in F_p and no specialization is semisimple\n";
      return run_semisimple(*m, *n, theta, format, !no_scan, out);
    }
    if (pinv->parsed()) return run_pinv(*m, *n, format, expand, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace schurkit::cli
