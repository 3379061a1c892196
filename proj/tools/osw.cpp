#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osw/harness.hpp"
#include "osw/serialize.hpp"

namespace {

// Attaches the flags shared by several subcommands.
void add_common(CLI::App* cmd, osw::ExperimentConfig& config) {
  cmd->add_option("--seed", config.seed, "64-bit master seed");
  cmd->add_option("--threads", config.threads, "worker pool size")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", config.strict,
                "exit 2 on undelivered routes");
  cmd->add_flag("--json", config.json_output, "JSON output to stdout");
}

CLI::Option* add_n(CLI::App* cmd, std::vector<int>& n_list,
                   bool list_allowed) {
  auto* opt = cmd->add_option("--n", n_list,
                              list_allowed ? "size parameter list (comma separated)"
                                           : "size parameter")
                  ->delimiter(',')
                  ->check(CLI::PositiveNumber);
  if (!list_allowed) opt->expected(1);
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octahedral small-world graphs: generation, routing, triangle census"};
  app.require_subcommand(1);

  osw::ExperimentConfig config;
  std::string src_text;
  std::string dst_text;
  double r_value = 0.0;

  auto* generate = app.add_subcommand("generate", "emit the graph as JSON");
  add_n(generate, config.n_list, false)->required();
  generate->add_flag("--osw", config.osw_sample,
                     "include sampled long-range targets");
  add_common(generate, config);

  auto* route = app.add_subcommand("route", "greedy-route one pair");
  add_n(route, config.n_list, false)->required();
  route->add_option("--src", src_text, "source vertex \"x,y,z\"")->required();
  route->add_option("--dst", dst_text, "target vertex \"x,y,z\"")->required();
  add_common(route, config);

  auto* census = app.add_subcommand("census", "triangle census of one sample");
  add_n(census, config.n_list, false);
  census->add_option("--csv", config.csv_path, "append one CSV row");
  census->add_flag("--exact-n1", config.exact_n1,
                   "print the exact n=1 enumeration instead");
  add_common(census, config);

  auto* sphere = app.add_subcommand("sphere-check",
                                    "edge angles and sphere distances");
  add_n(sphere, config.n_list, false)->required();
  sphere->add_option("--lambda", config.lambda, "distance cap")
      ->check(CLI::PositiveNumber);
  auto* r_opt = sphere->add_option("--r", r_value,
                                   "sphere radius (default: radius bound)");
  add_common(sphere, config);

  auto* bounds = app.add_subcommand("bounds", "closed-form bound values");
  add_n(bounds, config.n_list, false)->required();
  add_common(bounds, config);

  auto* experiment = app.add_subcommand("experiment", "multi-trial sweeps");
  experiment->require_subcommand(1);
  auto* exp_routing = experiment->add_subcommand("routing",
                                                 "greedy routing trials");
  add_n(exp_routing, config.n_list, true)->required();
  exp_routing->add_option("--trials", config.trials, "trials per n")
      ->check(CLI::PositiveNumber);
  exp_routing->add_option("--csv", config.csv_path, "append per-trial rows");
  add_common(exp_routing, config);
  auto* exp_census = experiment->add_subcommand("census",
                                                "triangle census trials");
  add_n(exp_census, config.n_list, true)->required();
  exp_census->add_option("--trials", config.trials, "trials per n")
      ->check(CLI::PositiveNumber);
  exp_census->add_option("--csv", config.csv_path, "append per-trial rows");
  add_common(exp_census, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? osw::kExitOk : osw::kExitUsage;
  }

  if (generate->parsed()) config.command = "generate";
  if (route->parsed()) config.command = "route";
  if (census->parsed()) config.command = "census";
  if (sphere->parsed()) config.command = "sphere-check";
  if (bounds->parsed()) config.command = "bounds";
  if (experiment->parsed()) {
    config.command = "experiment";
    config.experiment_kind = exp_routing->parsed() ? "routing" : "census";
  }

  if (route->parsed()) {
    const auto src = osw::parse_vertex(src_text);
    const auto dst = osw::parse_vertex(dst_text);
    if (!src || !dst) {
      std::cerr << "error: --src/--dst must be \"x,y,z\" integer triples\n";
      return osw::kExitUsage;
    }
    config.src = src;
    config.dst = dst;
  }
  if (census->parsed() && !config.exact_n1 && config.n_list.empty()) {
    std::cerr << "error: census requires --n (or --exact-n1)\n";
    return osw::kExitUsage;
  }
  if (sphere->parsed() && r_opt->count() > 0) config.r = r_value;

  return osw::run(config, std::cout);
}
