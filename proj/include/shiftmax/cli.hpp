#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shiftmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

struct CliConfig {
  std::string subcommand;
  std::optional<unsigned> n;
  bool faces = false;
  std::string emit;  // output file for graph / polytope
  std::string out;
  std::string csv;
  std::string function;
  std::string head;
  std::string gauge;
  std::optional<unsigned> max_level;
  std::string config;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> depth;
  std::string mode;
  unsigned threads = 0;
  std::string a = "default";
  std::string b = "2^-n*a_n";
  std::optional<unsigned> horizon;
};

/// Level cap for cycle enumeration: SHIFTMAX_MAX_LEVEL if set, else the library default.
unsigned level_cap();

/// Runs one subcommand. Returns 0 on success, 1 when a reported check fails,
/// 2 on invalid input (the failing check is written to `err`).
int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftmax::cli
