#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heisred/heisenberg.hpp"
#include "heisred/membership.hpp"

namespace heisred {

/// One generator of a gadget in block-local coordinates.
struct GadgetGenerator {
  std::string slot;
  ExponentRole role;
  std::vector<std::pair<std::size_t, HeisElem>> factors;  // local component -> element
};

/// A block of `width` Heisenberg copies whose generators, multiplied in list
/// order with the exponents given by their roles, reproduce `target` exactly
/// when the block's arithmetic relation holds.
struct Gadget {
  BlockKind kind;
  std::size_t width;
  std::vector<GadgetGenerator> generators;  // template order
  std::vector<std::pair<std::size_t, HeisElem>> target;
};

/// H^1 with ac, b, a^-1: (ac)^z b a^-z = b for every z.
Gadget const &conjugation_gadget();

/// H^4 block interpreting z + z' = z''.
Gadget const &addition_gadget();

/// H^6 block chaining three conjugations with shared exponents.
Gadget const &chain_gadget();

/// H^8 block interpreting z z' = z''.
Gadget const &multiplication_gadget();

/// Generator placed in H^ambient with local copy k at global component offset + k.
PowerElem place(std::vector<std::pair<std::size_t, HeisElem>> const &factors, std::size_t ambient,
                std::size_t offset);

/// Template word of the gadget evaluated at (z, z', z''); roles without a
/// matching exponent are ignored.
PowerElem template_product(Gadget const &gadget, std::array<Integer, 3> const &exponents);

PowerElem gadget_target(Gadget const &gadget);

/// The gadget as a standalone membership problem over H^width.
MembershipProblem gadget_problem(Gadget const &gadget);

}  // namespace heisred
