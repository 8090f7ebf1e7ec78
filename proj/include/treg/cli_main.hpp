#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treg/cli.hpp"

namespace treg {

// Testable entry point: argv without the program name.
// Exit codes: 0 = success, 1 = a verify suite reported failures,
// 2 = usage error (bad flags or domain preconditions).
inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"equivariant weight polynomials of regular-torus complements"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* betti = app.add_subcommand("betti", "per-degree cohomology dimensions");
  betti->add_option("--n", cfg.n, "rank parameter")->required();
  betti->add_option("--chi-order", cfg.r, "scalar character order (omit for total)");
  betti->add_option("--format", cfg.format, "json | csv | latex");

  auto* character = app.add_subcommand("character", "isotypic character of one degree");
  character->add_option("--n", cfg.n, "rank parameter")->required();
  character->add_option("--chi-order", cfg.r, "scalar character order")->required();
  character->add_option("--degree", cfg.j, "cohomological degree")->required();
  character->add_option("--format", cfg.format, "json | csv | latex");

  auto* verify = app.add_subcommand("verify", "run a consistency suite");
  verify->add_option("--suite", cfg.suite, "identities | induction | oracle")->required();
  verify->add_option("--max-n", cfg.max_n, "sweep bound");
  verify->add_option("--truncate", cfg.N, "series truncation order");
  verify->add_option("--q-list", cfg.q_list, "prime field sizes for the oracle suite")
      ->delimiter(',');

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (betti->parsed()) {
      out << render_betti(cmd_betti(cfg.n, cfg.r), cfg.format) << "\n";
      return 0;
    }
    if (character->parsed()) {
      out << render_character(cmd_character(cfg.n, cfg.r, cfg.j), cfg.format) << "\n";
      return 0;
    }
    SuiteReport rep = cmd_verify(cfg);
    for (const std::string& line : rep.lines) out << line << "\n";
    out << (rep.pass ? "all checks passed" : "checks FAILED") << "\n";
    return rep.pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace treg
