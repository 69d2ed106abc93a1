#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "okounkov/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = okounkov::cli;
  CLI::App app{"Mixed volumes, Newton-Okounkov bodies and root-count checks"};
  app.set_version_flag("--version", std::string(cli::kToolName) + " " + cli::kVersion);
  app.require_subcommand(1);

  cli::Command cmd;
  double tol = 0;
  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name != "selftest") sub->add_option("input", cmd.input_path, "input JSON document (- for stdin)")->required();
    sub->add_option("--seed", cmd.seed, "base seed for all random streams")->default_val(0);
    sub->add_option("--trials", cmd.trials, "random systems per support tuple")->default_val(5);
    sub->add_option("--kmax", cmd.kmax, "number of graded levels")->default_val(12);
    sub->add_option("--max-dim", cmd.max_subspace_dim, "cap on subspace dimension")->default_val(8);
    sub->add_option("--tol", tol, "residual tolerance (steiner: perimeter slack)");
    sub->add_option("--out", cmd.output_path, "write the report here instead of stdout");
    sub->add_option("--format", cmd.format, "json or csv")->default_val("json")->check(CLI::IsMember({"json", "csv"}));
    sub->callback([&cmd, &tol, sub, name] {
      cmd.name = name;
      if (sub->count("--tol") > 0) cmd.tol = tol;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::input_error;
  }
  return cli::run(cmd, std::cout, std::cerr);
}
