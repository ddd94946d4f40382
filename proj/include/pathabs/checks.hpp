#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized and exhaustive property suites over the library, runnable
// headlessly (the CLI `check` subcommand) and from the test binaries.
namespace pathabs::checks {

struct Options {
  std::uint64_t seed = 0;
  // Multiplies every suite's case count; 1.0 runs the documented sizes.
  double scale = 1.0;
};

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && cases > 0; }
};

std::vector<std::string> names();
// Throws ValidationError for an unknown name.
Result run(const std::string& name, const Options& options = {});
std::vector<Result> run_all(const Options& options = {});

}  // namespace pathabs::checks
