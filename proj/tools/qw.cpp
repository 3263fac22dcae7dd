// qw: command-line front end.
//
//   qw eval EXPR            parse, evaluate, render
//   qw verify SUITE         jacobi | cocycle | hopf | relations | confluence | limit
//   qw solve-cocycle        re-derive the L-W cocycle on a window
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qw/cocycle.hpp"
#include "qw/textio.hpp"
#include "qw/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct CliConfig {
  std::string mode = "central";
  std::string format = "text";
  int window = 4;
  long long seed = 0;
  long long samples = 500;
};

int cmd_eval(const std::string& expr, const CliConfig& cfg) {
  try {
    const qw::Value v = qw::evaluate(expr, qw::parse_relation_mode(cfg.mode));
    std::cout << qw::render(v, qw::parse_output_format(cfg.format)) << "\n";
    return kOk;
  } catch (const qw::ParseError& e) {
    std::cerr << "qw: " << e.what() << "\n";
    std::cerr << "  " << expr << "\n  " << std::string(e.where().offset, ' ') << "^\n";
    return kUsage;
  } catch (const qw::EvalError& e) {
    std::cerr << "qw: evaluation error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "qw: evaluation error: " << e.what() << "\n";
    return kUsage;
  }
}

json instance_json(const qw::CheckInstance& c, const qw::SuiteReport& r) {
  json j;
  j["check"] = c.check;
  j["instance"] = c.instance;
  j["window"] = r.config.window;
  j["mode"] = qw::to_string(r.config.mode);
  j["pass"] = c.pass;
  if (c.counterexample) j["counterexample"] = *c.counterexample;
  return j;
}

int cmd_verify(const std::string& suite, const CliConfig& cfg) {
  qw::SuiteConfig sc;
  sc.mode = qw::parse_relation_mode(cfg.mode);
  sc.window = cfg.window;
  sc.seed = static_cast<std::uint64_t>(cfg.seed);
  sc.samples = static_cast<std::size_t>(cfg.samples);
  const qw::SuiteReport r = qw::run_suite(suite, sc);
  const qw::CheckInstance* first = r.first_failure();

  if (cfg.format == "json") {
    json j;
    j["suite"] = r.suite;
    j["mode"] = qw::to_string(r.config.mode);
    j["window"] = r.config.window;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["pass"] = r.passed();
    j["instance_count"] = r.instances.size();
    j["failure_count"] = r.failure_count();
    j["first_failure"] = first ? instance_json(*first, r) : json(nullptr);
    j["notes"] = r.notes;
    json all = json::array();
    for (const auto& c : r.instances) all.push_back(instance_json(c, r));
    j["instances"] = std::move(all);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "suite " << r.suite << ", mode " << qw::to_string(r.config.mode) << ", window "
              << r.config.window << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
              << r.instances.size() - r.failure_count() << "/" << r.instances.size()
              << " instances hold)\n";
    if (first)
      std::cout << "first failure: " << first->check << " " << first->instance << "\n  "
                << first->counterexample.value_or("") << "\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  }
  return r.passed() ? kOk : kFailed;
}

json table_json(const qw::SolutionVector& v, int N) {
  json out = json::array();
  const auto pairs = qw::window_pairs(N);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    if (v[c].is_zero()) continue;
    out.push_back({{"i", pairs[c].first}, {"j", pairs[c].second}, {"value", v[c].to_text()}});
  }
  return out;
}

int cmd_solve_cocycle(const CliConfig& cfg) {
  if (cfg.window < 2) {
    std::cerr << "qw: solve-cocycle needs --window of at least 2\n";
    return kUsage;
  }
  const int N = cfg.window;
  const qw::CocycleSolveReport r = qw::solve_cocycle(N);
  const auto* match = std::get_if<qw::ClosedFormMatch>(&r.comparison);
  const auto* miss = std::get_if<qw::ClosedFormMismatch>(&r.comparison);

  // Multiple once both the solution and the closed form are scaled to a leading 1.
  std::optional<qw::QScalar> normalized_multiple;
  if (match) {
    const auto nb = qw::compare_closed_form(
        {qw::normalize_first_nonzero(r.gauge_fixed.front())}, N);
    const auto nc = qw::compare_closed_form({qw::normalize_first_nonzero(qw::closed_form_vector(N))}, N);
    if (auto a = std::get_if<qw::ClosedFormMatch>(&nb))
      if (auto b = std::get_if<qw::ClosedFormMatch>(&nc)) normalized_multiple = a->multiple / b->multiple;
  }

  if (cfg.format == "json") {
    json j;
    j["window"] = N;
    json order = json::array();
    for (const auto& [i, k] : r.unknown_order) order.push_back({i, k});
    j["unknown_order"] = std::move(order);
    j["row_count"] = r.row_count;
    j["nullspace_dimension"] = r.nullspace_dimension;
    j["gauge_fixed_dimension"] = r.gauge_fixed_dimension;
    j["residual_check"] = r.residual_ok ? "ok" : "failed";
    json cmp;
    if (match) {
      cmp["status"] = "match";
      cmp["multiple"] = match->multiple.to_text();
      cmp["normalized_multiple"] =
          normalized_multiple ? json(normalized_multiple->to_text()) : json(nullptr);
    } else {
      cmp["status"] = "mismatch";
      cmp["dimension"] = miss->dimension;
      cmp["first_difference"] =
          miss->first_difference
              ? json::array({miss->first_difference->first, miss->first_difference->second})
              : json(nullptr);
    }
    j["comparison"] = std::move(cmp);
    j["gauge_fixed_table"] = r.gauge_fixed.size() == 1
                                 ? table_json(qw::normalize_first_nonzero(r.gauge_fixed.front()), N)
                                 : json::array();
    j["pass"] = r.passed();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "window " << N << "\n"
              << "unknowns " << r.unknown_order.size() << "\n"
              << "rows " << r.row_count << "\n"
              << "nullspace dimension " << r.nullspace_dimension << "\n"
              << "gauge-fixed dimension " << r.gauge_fixed_dimension << "\n"
              << "residual check " << (r.residual_ok ? "ok" : "failed") << "\n";
    if (match) {
      std::cout << "multiple " << match->multiple << "\n";
      if (normalized_multiple) std::cout << "normalized multiple " << *normalized_multiple << "\n";
      std::cout << "closed form: match\n";
    } else {
      std::cout << "closed form: mismatch (dimension " << miss->dimension;
      if (miss->first_difference)
        std::cout << ", first difference at (" << miss->first_difference->first << ", "
                  << miss->first_difference->second << ")";
      std::cout << ")\n";
    }
  }
  return r.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  if (const char* env = std::getenv("QW_DEFAULT_WINDOW")) {
    try {
      std::size_t used = 0;
      cfg.window = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "qw: QW_DEFAULT_WINDOW must be an integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Exact kernel for the q-deformed W(2,2) algebra and its Hopf algebra"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--mode", cfg.mode, "Relation between C and T")
      ->check(CLI::IsMember({"central", "strict_paper"}))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_option("--window", cfg.window, "Index window")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Number of sampled instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr, "Expression")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(qw::suite_names()));

  auto* solve = app.add_subcommand("solve-cocycle", "Re-derive the cocycle on a window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(expr, cfg);
    if (cfg.window < 1) {
      std::cerr << "qw: --window must be positive\n";
      return kUsage;
    }
    if (*verify) return cmd_verify(suite, cfg);
    if (*solve) return cmd_solve_cocycle(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "qw: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
