#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tcode_cli/problem.hpp"

using namespace tcode;
using namespace tcode::cli;

namespace {

constexpr int kOk = 0, kInvalid = 2, kBudget = 3, kParse = 4;

ProblemSpec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

int run(const std::string& action, const ProblemSpec& s, unsigned long long budget, const std::string& out) {
  if (action == "render") {
    std::cout << render(s);
    return kOk;
  }
  bool ok = false;
  std::string report = validate_report(s, &ok);
  if (action == "validate") {
    std::cout << report;
    return ok ? kOk : kInvalid;
  }
  if (!ok) {
    std::cerr << report;
    return kInvalid;
  }
  if (action == "info") {
    std::cout << info_report(s);
  } else if (action == "genmat") {
    std::string text = matrix_text(build_code(to_setup(s)));
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      f << text;
    }
  } else if (action == "distance") {
    std::cout << distance_report(s, budget);
  } else {
    throw std::invalid_argument("unknown action '" + action + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"T-codes on complexity-one T-varieties"};
  app.require_subcommand(1);
  std::string file, out, name, curve, action = "info";
  long long p = 0;
  unsigned long long budget = kDefaultBudget;
  long long cq = 0, cg = 0, cl = 0, ck1 = 0, ctau = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the divisorial polytope conditions");
  auto* info_cmd = app.add_subcommand("info", "code parameters, bounds and divisor data");
  auto* genmat_cmd = app.add_subcommand("genmat", "write the generator matrix");
  auto* distance_cmd = app.add_subcommand("distance", "exact minimum distance by enumeration");
  auto* render_cmd = app.add_subcommand("render", "print the problem in canonical form");
  for (auto* c : {validate_cmd, info_cmd, genmat_cmd, distance_cmd, render_cmd})
    c->add_option("file", file, "problem file")->required();
  genmat_cmd->add_option("-o,--out", out, "output file");
  distance_cmd->add_option("--budget", budget, "maximum number of projective messages");

  auto* compare_cmd = app.add_subcommand("compare", "ruled-surface code against the RS x one-point product code");
  compare_cmd->add_option("--q", cq)->required();
  compare_cmd->add_option("--g", cg)->default_val(0);
  compare_cmd->add_option("--l", cl)->required();
  compare_cmd->add_option("--k1", ck1)->required();
  compare_cmd->add_option("--tau", ctau)->required();

  auto* example_cmd = app.add_subcommand("example", "built-in instance");
  example_cmd->add_option("name", name, "surface | threefold | elliptic")
      ->required()
      ->check(CLI::IsMember({"surface", "threefold", "elliptic"}));
  example_cmd->add_option("action", action, "validate | info | genmat | distance | render")
      ->check(CLI::IsMember({"validate", "info", "genmat", "distance", "render"}));
  example_cmd->add_option("--curve", curve, "p1 | elliptic:A,B");
  example_cmd->add_option("--p", p, "field characteristic");
  example_cmd->add_option("--budget", budget, "maximum number of projective messages");
  example_cmd->add_option("-o,--out", out, "output file for genmat");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compare_cmd) {
      std::cout << compare_report(compare_product(cq, cg, cl, ck1, ctau));
      return kOk;
    }
    if (*example_cmd) return run(action, example(name, curve, p), budget, out);
    ProblemSpec s = load(file);
    for (auto [cmd, act] : {std::pair{validate_cmd, "validate"}, {info_cmd, "info"}, {genmat_cmd, "genmat"},
                            {distance_cmd, "distance"}, {render_cmd, "render"}})
      if (*cmd) return run(act, s, budget, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
