#include <iostream>

#include <CLI11.hpp>

#include "polecalc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of pole posets, pole lattices and lattice endomorphism algebras"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  int set_size = 4;
  std::string suite = "all";
  int max_size = 4;
  int jobs = 1;

  CLI::App* check = app.add_subcommand("check-pole", "recognize a pole poset and print its blocks");
  check->add_option("path", path, "poset file (JSON)")->required();

  CLI::App* dec = app.add_subcommand("decompose", "matrix-algebra decomposition of the pole part of End");
  dec->add_option("path", path, "lattice file (JSON)")->required();
  dec->add_flag("--json", json, "emit the report as JSON");

  CLI::App* rank = app.add_subcommand("rank", "ranks of the quotient evaluations of a pole lattice");
  rank->add_option("path", path, "lattice file (JSON)")->required();
  rank->add_option("--set-size", set_size, "largest set size in the table")->check(CLI::NonNegativeNumber);

  CLI::App* ver = app.add_subcommand("verify", "run identity suites");
  ver->add_option("path", path, "lattice file (JSON); unused by --suite corpus");
  ver->add_option("--suite", suite, "idempotents|orthogonality|independence|centrality|span|all|corpus");
  ver->add_option("--max-size", max_size, "corpus bound")->check(CLI::PositiveNumber);
  ver->add_option("--jobs", jobs, "parallel workers for the corpus suite")->check(CLI::PositiveNumber);
  ver->add_flag("--json", json, "emit results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return polecalc::cmd_check_pole(path, std::cout, std::cerr);
    if (dec->parsed()) return polecalc::cmd_decompose(path, json, std::cout, std::cerr);
    if (rank->parsed()) return polecalc::cmd_rank(path, set_size, std::cout, std::cerr);
    if (ver->parsed()) {
      if (suite != "corpus" && path.empty()) {
        std::cerr << "error: this suite needs a lattice file\n";
        return 2;
      }
      return polecalc::cmd_verify(path, suite, max_size, jobs, json, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
