#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heisred {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;      // non-member within bounds, failed verification
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;    // equation or file content rejected
inline constexpr int kExitNoInput = 66;      // input file unreadable
inline constexpr int kExitSoftware = 70;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;  // equation text or file paths, in order
  std::optional<std::int64_t> box;
  std::optional<std::size_t> search_len;
  std::optional<std::string> coord_bound;
  std::optional<std::size_t> state_cap;
  std::optional<std::string> output;
  std::optional<std::string> assign;  // "x=2,y=3"
  std::string format;  // table | json; empty picks the subcommand default
};

/// Executes one subcommand; reports go to out, diagnostics to err.
int run(RunConfig const &config, std::ostream &out, std::ostream &err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

}  // namespace heisred
