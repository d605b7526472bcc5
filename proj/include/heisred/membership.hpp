#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heisred/heisenberg.hpp"

namespace heisred {

/// Which exponent of a gadget template a generator is raised to.
enum class ExponentRole { First, Second, Third, Once };

/// "ζ", "ζ′", "ζ″" or "" for generators used exactly once.
std::string exponent_symbol(ExponentRole role);
std::string to_string(ExponentRole role);
ExponentRole exponent_role_from_string(std::string const &text);

enum class BlockKind { Mul, Add, Chain, Conjugation, Degenerate };

std::string to_string(BlockKind kind);
BlockKind block_kind_from_string(std::string const &text);

struct GeneratorOrigin {
  BlockKind block = BlockKind::Mul;
  std::size_t block_index = 1;
  std::string slot;  // g1..g10 / f1..f4 within the block
  ExponentRole role = ExponentRole::Once;
  std::size_t variable = 0;  // Skolem variable carried as exponent, 0 if none

  friend bool operator==(GeneratorOrigin const &, GeneratorOrigin const &) = default;
};

struct Generator {
  std::string name;
  PowerElem element;
  GeneratorOrigin origin;

  friend bool operator==(Generator const &, Generator const &) = default;
};

/// Is `target` a product of `generators` (with repetition, no inverses)?
struct MembershipProblem {
  std::size_t ambient = 1;
  std::vector<Generator> generators;
  PowerElem target{1};

  friend bool operator==(MembershipProblem const &, MembershipProblem const &) = default;
};

}  // namespace heisred
