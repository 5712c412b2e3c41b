#pragma once

#include "hopfcore/io.hpp"
#include "hopfcore/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hopfcore {

struct RunConfig {
  std::string command;
  std::string instance;
  std::optional<unsigned> degree;
  std::string ring = "q";
  std::string action;
  std::string ideal;
  unsigned core_degree = 4;
  unsigned probe_bound = 3;
  std::string probe_mode = "domain";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string out;
};

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_format = 2, exit_inconclusive = 3 };

struct CommandResult {
  json report;
  Report checks;
  int exit_code = exit_pass;
};

// fail > inconclusive > pass; skipped lines do not count.
int exit_code_for(const Report& r);

// Each command throws FormatError (and the other hopfcore errors) on bad
// input; run_cli maps those to exit code 2.
CommandResult cmd_build(const RunConfig& c);
CommandResult cmd_verify(const RunConfig& c);
CommandResult cmd_conv(const RunConfig& c);
CommandResult cmd_hcore(const RunConfig& c);
CommandResult run_command(const RunConfig& c);

int run_cli(int argc, char** argv);

} // namespace hopfcore
