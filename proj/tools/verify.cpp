#include "sb/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Batch verification of the superbosonisation identity and its calculus"};
  app.require_subcommand(1);

  sb::SuiteConfig cfg;
  std::string p, q, n, method = "quad";
  std::vector<std::string> ms;
  double tol = -1.0;

  for (const auto& name : sb::suite_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " suite");
    sub->add_option("--p", p, "even rank: value, list 0,1 or range 0..2");
    sub->add_option("--q", q, "odd rank: value, list or range");
    sub->add_option("--n", n, "number of copies: value, list or range");
    sub->add_option("--m", ms, "multi-index such as 1,0 (repeatable)")->take_all();
    sub->add_option("--method", method, "quad or mc");
    sub->add_option("--nodes", cfg.nodes, "quadrature nodes per direction (0 = defaults)");
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples");
    sub->add_option("--seed", cfg.seed, "Monte Carlo seed");
    sub->add_option("--tol", tol, "tolerance override");
    sub->add_option("--degree", cfg.degree, "oscillator degree cap");
    sub->add_option("--out", cfg.out, "report path (stdout when omitted)");
  }
  std::vector<std::string> paths;
  CLI::App* summary = app.add_subcommand("summary", "aggregate report files");
  summary->add_option("paths", paths, "report files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (summary->parsed()) {
    try {
      const sb::Summary s = sb::report_summary(paths);
      std::cout << s.table();
      return s.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  try {
    cfg.suite = app.get_subcommands().front()->get_name();
    cfg.p = sb::parse_int_list(p);
    cfg.q = sb::parse_int_list(q);
    cfg.n = sb::parse_int_list(n);
    for (const auto& s : ms) cfg.m.push_back(sb::parse_multi_index(s));
    cfg.method = sb::method_from_string(method);
    if (tol >= 0.0) cfg.tolerance = tol;
  } catch (const std::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  }
  return sb::run(cfg, std::cerr);
}
