#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "steinberg_rsk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Partial permutations to signed Young diagrams and tableau pairs"};
  srsk::CliOptions options;
  std::string in_file;
  std::uint64_t seed = 0;
  int trials = 0;
  app.add_option("command", options.command, "Subcommand")
      ->required()
      ->check(CLI::IsMember(srsk::command_names()));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the oracle's random source");
  auto* trials_opt = app.add_option("--trials", trials, "Independent samples per genericity certificate");
  app.add_option("--pmax", options.pmax, "Largest p for verify")->check(CLI::PositiveNumber);
  app.add_option("--qmax", options.qmax, "Largest q for verify")->check(CLI::PositiveNumber);
  app.add_flag("--strict", options.strict, "Refuse --trials without --seed");
  app.add_option("--in", in_file, "Read input from FILE instead of stdin")->check(CLI::ExistingFile);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (*seed_opt) options.seed = seed;
  if (*trials_opt) options.trials = trials;

  std::string input;
  if (srsk::command_reads_input(options.command)) {
    if (in_file.empty()) {
      input.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(in_file);
      input.assign(std::istreambuf_iterator<char>(f), {});
    }
  }
  const srsk::CommandResult result = srsk::run_command(options, input);
  if (result.payload) std::cout << result.payload->dump(2) << '\n';
  for (const auto& d : result.diagnostics) std::cerr << d << '\n';
  return static_cast<int>(result.code);
}
