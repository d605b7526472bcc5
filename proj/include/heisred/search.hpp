#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heisred/gadgets.hpp"
#include "heisred/membership.hpp"
#include "heisred/witness.hpp"

namespace heisred {

inline constexpr std::size_t kDefaultStateCap = 10'000'000;

/// HEISRED_STATE_CAP when set to a positive integer, kDefaultStateCap otherwise.
std::size_t default_state_cap();

enum class SearchStatus { Found, Absent, Inconclusive };

std::string to_string(SearchStatus status);

struct SearchLimits {
  std::size_t max_len = 0;
  std::optional<Integer> coord_bound;  // default_coord_bound when absent
  std::size_t state_cap = kDefaultStateCap;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  Word word;  // lexicographically first among the shortest, when found
  std::size_t states = 0;
  std::size_t pruned = 0;  // products dropped for leaving the coordinate box
  std::size_t depth = 0;   // last level fully expanded
  Integer coord_bound{0};
  std::string note;
};

/// Largest |coordinate| of the target plus max_len times the largest
/// |coordinate| of any generator.
Integer default_coord_bound(MembershipProblem const &problem, std::size_t max_len);

/// Level-synchronous breadth-first search over products of at most max_len
/// generators with exact deduplication of states. Absent means no product in
/// the explored region equals the target; it says nothing about longer words
/// or about states pruned by the coordinate bound. Inconclusive means the
/// state cap was hit first.
SearchResult bounded_membership_search(MembershipProblem const &problem, SearchLimits const &limits);

struct WitnessEnumeration {
  std::vector<Word> words;  // lexicographic in the generator sequence
  bool truncated = false;   // stopped at the word limit
  bool inconclusive = false;  // stopped at the state cap
};

/// Every word of length <= max_len evaluating to the target, found by
/// depth-first search that memoizes dead (state, remaining length) pairs.
WitnessEnumeration enumerate_witnesses(MembershipProblem const &problem, SearchLimits const &limits,
                                       std::size_t word_limit = 100'000);

/// Exponents (z, z', z'') when w is the gadget's template word up to runs of
/// length zero, nullopt otherwise.
std::optional<std::array<Integer, 3>> match_template(Gadget const &gadget, Word const &w);

}  // namespace heisred
