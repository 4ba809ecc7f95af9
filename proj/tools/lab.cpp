// Batch driver: lab run <config>..., lab list, lab verify-all.
#include <iostream>

#include <CLI11.hpp>

#include "lplab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lp-homology laboratory"};
  app.require_subcommand(1);

  std::vector<std::string> configs;
  auto* run = app.add_subcommand("run", "run experiment config files");
  run->add_option("configs", configs, "key=value config files")->required()->check(CLI::ExistingFile);

  app.add_subcommand("list", "list groups, resolutions and experiments");

  std::string out_dir = "lab-verify";
  auto* verify = app.add_subcommand("verify-all", "run every built-in invariant suite");
  verify->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lplab::cli::kExitConfig;
  }

  if (*run) return lplab::cli::run_configs(configs, std::cout, std::cerr);
  if (app.got_subcommand("list")) {
    std::cout << lplab::cli::catalog_listing();
    return 0;
  }
  return lplab::cli::verify_all(out_dir, std::cout, std::cerr);
}
