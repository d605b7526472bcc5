#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heisred/diophantine.hpp"
#include "heisred/search.hpp"

namespace heisred {

struct RoundtripOptions {
  std::int64_t box = 0;
  std::optional<std::size_t> search_len;
  std::optional<Integer> coord_bound;
  std::size_t state_cap = 1'000'000;
};

struct StageFailure {
  std::string stage;  // parse, skolemize, compile, solve, lift, witness, verify, search
  std::string message;
};

struct RoundtripReport {
  std::string equation;
  std::int64_t box = 0;
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  std::size_t q = 0;
  std::size_t generator_count = 0;
  std::optional<Assignment> solution;
  std::optional<Integer> witness_length;
  bool verified = false;
  std::optional<SearchResult> search;
  std::vector<std::pair<std::string, double>> timings;  // stage, milliseconds
  std::optional<StageFailure> failure;

  bool ok() const { return !failure.has_value(); }
  bool solvable() const { return solution.has_value(); }
};

/// Parse, skolemize, compile, then either lift the first box solution to a
/// witness and verify it, or (no solution and search_len given) check that
/// bounded search finds no witness. Failures are recorded, not thrown.
RoundtripReport reduction_roundtrip(std::string const &text, RoundtripOptions const &options);

std::string render(RoundtripReport const &report);

}  // namespace heisred
