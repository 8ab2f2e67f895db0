#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with string streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace beattylab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_check = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> out_path;
  std::optional<std::string> format; // csv or json; unset picks per subcommand
  bool explain = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  unsigned precision_digits = 50;
  std::uint64_t enumeration_cap = 10000;
  std::uint64_t sieve_limit = 10000000;
};

/// Workers from BEATTYLAB_WORKERS when set and positive, else 1.
unsigned default_workers();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace beattylab::cli
