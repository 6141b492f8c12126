#pragma once

// Command-line front end. The executable in tools/ only forwards argv to
// run_cli, so the whole interface is testable in-process.
//
// Exit status: 0 all checks pass, 1 a verification failed, 2 parse or
// configuration error, 3 capacity guard exceeded.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synmon/freemon.hpp"
#include "synmon/limits.hpp"
#include "synmon/synalg.hpp"

namespace synmon::cli {

  enum class Command { syn, min, dual, check, corpus };
  enum class Format { table, json, dot, csv };

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_verification = 1;
  inline constexpr int exit_config       = 2;
  inline constexpr int exit_capacity     = 3;

  struct RunConfig {
    Command command = Command::syn;
    // Unset means every variety (check, corpus) or set (syn, min).
    std::optional<Variety>     variety;
    std::uint32_t              prime    = 2;
    std::string                alphabet = "ab";
    std::optional<std::string> regex;
    std::optional<std::string> dfa_path;
    Format                     format = Format::table;
    Limits                     limits;
    std::uint64_t              seed = 0;
    // Test hook: applied to the syntactic algebra of `syn` before it is
    // verified, to check that corrupted tables are reported.
    std::function<void(SynAlgebra&)> tamper;
  };

  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

  // Parses `args` (without the program name) and runs the command.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace synmon::cli
