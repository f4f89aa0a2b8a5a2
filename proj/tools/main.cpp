// Command-line surface for the Gamma_H(G) verification toolkit.
//
// Exit codes: 0 success, 1 assertion failure (verify), 2 usage or
// construction error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "qsrg/harness.hpp"

namespace {

int run_analyze(const qsrg::RunConfig& config, const std::string& adjacency_path) {
  const qsrg::AnalyzeResult res = qsrg::analyze(config);
  std::cout << res.render(config.format);
  if (config.format == "json") std::cout << "\n";
  if (!adjacency_path.empty()) {
    const qsrg::FiniteGroup g = qsrg::build_family(qsrg::parse_group_spec(config.group_spec));
    const qsrg::SubgroupData h = qsrg::parse_subgroup(g, config.subgroup_spec);
    const qsrg::FiniteGroup gsq = qsrg::direct_square(g);
    const qsrg::CayleyGraph gamma = qsrg::gamma_H(gsq, g, h);
    std::ofstream out(adjacency_path);
    if (!out) throw qsrg::Error("cannot open " + adjacency_path);
    out << qsrg::export_adjacency(gamma, res.instance.group_name,
                                  res.instance.subgroup_desc);
  }
  return 0;
}

int run_verify(const qsrg::RunConfig& config) {
  const qsrg::VerifyReport report = qsrg::verify(config);
  std::cout << report.render(config.format);
  if (config.format == "json") std::cout << "\n";
  return report.ok() ? 0 : 1;
}

int run_sweep(const qsrg::RunConfig& config) {
  std::cout << qsrg::render_sweep(qsrg::sweep(config), config.format);
  if (config.format == "json") std::cout << "\n";
  return 0;
}

int run_compare(const qsrg::RunConfig& config) {
  const qsrg::CompareResult res = qsrg::compare(config);
  std::cout << res.render(config.format);
  if (config.format == "json") std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);

  CLI::App app{"Verification toolkit for the Cayley graph family Gamma_H(G)"};
  app.require_subcommand(1);

  qsrg::RunConfig config;
  std::string adjacency_path;

  auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_val("text");
    cmd->add_option("--jobs", config.jobs, "Worker count")->default_val(1);
    cmd->add_option("--max-order", config.max_order, "Largest base group order")
        ->check(CLI::Range(1, qsrg::kHardOrderCap))
        ->default_val(12);
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one (G, H) instance");
  analyze->add_option("--group", config.group_spec, "Group spec, e.g. Z6, D4, Z4xZ2, @file")
      ->required();
  analyze->add_option("--subgroup", config.subgroup_spec,
                      "Comma-separated generator element indices")
      ->required();
  analyze->add_option("--adjacency", adjacency_path, "Write adjacency export to this file");
  add_common(analyze);

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite on the corpus");
  verify->add_option("--theorem", config.theorem_filter, "Restrict to one theorem tag");
  verify->add_flag("--inject-fault", config.inject_fault,
                   "Test mode: flip one adjacency bit per instance");
  add_common(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate every corpus (G, H) instance");
  add_common(sweep);

  CLI::App* compare = app.add_subcommand("compare", "Compare two (G, H) instances");
  compare->add_option("--group", config.group_spec, "First group spec")->required();
  compare->add_option("--subgroup", config.subgroup_spec, "First subgroup generators")
      ->required();
  compare->add_option("--group2", config.group_spec2, "Second group spec")->required();
  compare->add_option("--subgroup2", config.subgroup_spec2, "Second subgroup generators")
      ->required();
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(config, adjacency_path);
    if (verify->parsed()) return run_verify(config);
    if (sweep->parsed()) return run_sweep(config);
    return run_compare(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
