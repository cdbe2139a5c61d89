#include <CLI11.hpp>

#include <iostream>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "sinc_iterint/cli.hpp"
#include "sinc_iterint/errors.hpp"

namespace cli = sinc_iterint::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certified DE-Sinc iterated integration of the built-in examples"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  int example = 0;
  std::vector<double> h_list;
  std::string formula = "modified";
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "CSV convergence table over a list of mesh sizes");
  sweep->add_option("--example", example, "Example id")->required()->check(CLI::Range(1, 3));
  sweep->add_option("--h-list", h_list, "Comma-separated mesh sizes")
      ->required()
      ->delimiter(',');
  sweep->add_option("--formula", formula, "modified|original")
      ->check(CLI::IsMember({"modified", "original"}));
  sweep->add_option("--out", out_path, "Write CSV to this file instead of stdout");

  double h = 0.0;
  std::optional<double> k_override;
  auto* bound = app.add_subcommand("bound", "Mesh plan and error certificate at one h");
  bound->add_option("--example", example, "Example id")->required()->check(CLI::Range(1, 3));
  bound->add_option("--h", h, "Mesh size")->required();
  bound->add_option("--K", k_override, "Override the bound constant K");

  auto* verify = app.add_subcommand("verify", "Check the certificate on the built-in h grid");
  verify->add_option("--example", example, "Example id")->required()->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitUsage;
  }

  try {
    if (*sweep) {
      const auto f = formula == "original" ? sinc_iterint::Formula::Original
                                           : sinc_iterint::Formula::Modified;
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
          std::cerr << "error: cannot open " << out_path << '\n';
          return cli::kExitUsage;
        }
        return cli::cmd_sweep(example, h_list, f, file, std::cerr);
      }
      return cli::cmd_sweep(example, h_list, f, std::cout, std::cerr);
    }
    if (*bound) return cli::cmd_bound(example, h, std::cout, std::cerr, k_override);
    return cli::cmd_verify(example, std::cout, std::cerr);
  } catch (const sinc_iterint::UnsupportedCaseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
