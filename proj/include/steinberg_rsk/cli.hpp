#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steinberg_rsk/json_io.hpp"

namespace srsk {

struct CliOptions {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  int pmax = 3;
  int qmax = 3;
  bool strict = false;
};

enum class ExitCode : int { Ok = 0, Failure = 1, InputError = 2 };

struct CommandResult {
  ExitCode code = ExitCode::Ok;
  std::optional<Json> payload;  ///< absent unless code == Ok
  std::vector<std::string> diagnostics;

  bool ok() const { return code == ExitCode::Ok; }
  static CommandResult error(ExitCode code, std::string message);
};

const std::vector<std::string>& command_names();

/// Commands that read a JSON (or, for tauhat, CSV) document.
bool command_reads_input(const std::string& command);

/// Runs one subcommand on the given input text. Never throws.
CommandResult run_command(const CliOptions& options, const std::string& input);

}  // namespace srsk
