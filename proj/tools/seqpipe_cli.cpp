// Command-line front end: seqpipe eval | triangle | fixtures.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqpipe/dsl/eval.hpp"
#include "seqpipe/dsl/format.hpp"
#include "seqpipe/errors.hpp"
#include "seqpipe/fixtures.hpp"

namespace {

using namespace seqpipe;

constexpr int kOk = 0;
constexpr int kMathError = 1;
constexpr int kUsage = 2;

void show_location(const std::string& text, std::size_t begin, std::size_t end) {
  std::cerr << "  " << text << "\n  " << std::string(std::min(begin, text.size()), ' ')
            << std::string(std::max<std::size_t>(end > begin ? end - begin : 1, 1), '^') << "\n";
}

/// Runs `body`, mapping failures to exit codes and diagnostics on stderr.
template <class F>
int guarded(const std::string& expr, F body) {
  try {
    body();
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: parse error at offset " << e.offset() << ": " << e.what() << "\n";
    show_location(expr, e.offset(), e.offset() + 1);
    return kUsage;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what();
    if (e.span()) std::cerr << " (at offset " << e.span()->begin << ")";
    std::cerr << "\n";
    if (e.span()) show_location(expr, e.span()->begin, e.span()->end);
    return e.is_usage_error() ? kUsage : kMathError;
  }
}

std::optional<mpq_class> parse_binding(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || s.substr(0, eq) != "r") return std::nullopt;
  mpq_class q;
  if (q.set_str(s.substr(eq + 1), 10) != 0 || q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generating-function pipeline calculator"};
  app.require_subcommand(1);

  std::string expr;
  std::size_t order = 10;
  std::string binding;
  std::string format_name = "table";

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("EXPR", expr, "Expression")->required();
  eval_cmd->add_option("--order", order, "Number of series coefficients")
      ->check(CLI::Range(std::size_t{1}, std::size_t{2000}));
  eval_cmd->add_option("--set", binding, "Bind the parameter after evaluation, r=p/q");
  eval_cmd->add_option("--format", format_name, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::size_t rows = 0;
  std::string mode = "ogf";
  auto* tri_cmd = app.add_subcommand("triangle", "Coefficient triangle of a bivariate gf");
  tri_cmd->add_option("EXPR", expr, "Generating function in x and r")->required();
  tri_cmd->add_option("--rows", rows, "Number of rows")->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{500}));
  tri_cmd->add_option("--mode", mode, "ogf or egf")->check(CLI::IsMember({"ogf", "egf"}));
  tri_cmd->add_option("--set", binding, "Bind the parameter after evaluation, r=p/q");
  tri_cmd->add_option("--format", format_name, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  bool list = false;
  std::vector<std::string> run_ids;
  unsigned jobs = 0;
  auto* fx_cmd = app.add_subcommand("fixtures", "List or run the built-in reference fixtures");
  auto* list_opt = fx_cmd->add_flag("--list", list, "List fixture ids");
  auto* run_opt = fx_cmd->add_option("--run", run_ids, "Run the given ids (all when none)")
                      ->expected(0, -1);
  list_opt->excludes(run_opt);
  fx_cmd->add_option("--format", format_name, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  fx_cmd->add_option("--jobs", jobs, "Worker threads (0: one per core)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const dsl::Format fmt = *dsl::parse_format(format_name);
  dsl::Env env;
  if (!binding.empty()) {
    env.r_value = parse_binding(binding);
    if (!env.r_value) {
      std::cerr << "error: --set expects r=p/q, got '" << binding << "'\n";
      return kUsage;
    }
  }

  if (eval_cmd->parsed()) {
    env.order = order;
    return guarded(expr, [&] { std::cout << dsl::format(dsl::evaluate(expr, env), fmt); });
  }

  if (tri_cmd->parsed()) {
    const std::string wrapped =
        "triangle(" + expr + ", " + std::to_string(rows) + ", " + mode + ")";
    return guarded(expr, [&] {
      dsl::NodePtr ast;
      try {
        ast = dsl::parse(wrapped);
      } catch (const ParseError& e) {
        // Report offsets relative to the user's text.
        const std::size_t shift = std::string("triangle(").size();
        throw ParseError(e.offset() >= shift ? e.offset() - shift : 0, e.expected(), e.what());
      }
      std::cout << dsl::format(dsl::evaluate(*ast, env), fmt);
    });
  }

  if (list) {
    for (const auto& f : fixtures()) std::cout << f.id << "\t" << f.locus << "\n";
    return kOk;
  }
  std::erase(run_ids, std::string());
  std::optional<std::vector<std::string>> ids;
  if (!run_ids.empty()) ids = run_ids;
  const Report report = run_fixtures(ids, jobs);
  if (fmt == dsl::Format::Json) {
    nlohmann::ordered_json j;
    j["kind"] = "report";
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
      j["cases"].push_back({{"id", c.id}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
    }
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& c : report.cases) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.id;
      if (!c.pass) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.ok() ? kOk : kMathError;
}
