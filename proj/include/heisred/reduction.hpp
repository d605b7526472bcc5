#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "heisred/gadgets.hpp"
#include "heisred/membership.hpp"
#include "heisred/skolem.hpp"

namespace heisred {

/// Placement of one gadget block inside H^n.
struct BlockLayout {
  BlockKind kind = BlockKind::Mul;
  std::size_t index = 1;            // 1-based within its kind
  std::size_t first_component = 1;  // global index of local copy 1
  std::size_t width = 0;
  std::size_t first_generator = 0;  // 0-based position in the generator list
  std::size_t generator_count = 0;
  std::array<std::size_t, 3> operands{};  // Skolem variables for z, z', z''

  friend bool operator==(BlockLayout const &, BlockLayout const &) = default;
};

/// Central c^{+1} on the carrier of `left`, c^{-1} on the carrier of `right`,
/// both in `component`; trivial in a template product iff the two agree.
struct EqualityMarker {
  std::size_t k = 0;  // 1-based equality number
  std::size_t component = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t left_carrier = 0;  // 0-based generator positions
  std::size_t right_carrier = 0;

  friend bool operator==(EqualityMarker const &, EqualityMarker const &) = default;
};

struct ConstantMarker {
  std::size_t component = 0;
  std::size_t variable = 0;
  std::size_t carrier = 0;
  Integer value{0};

  friend bool operator==(ConstantMarker const &, ConstantMarker const &) = default;
};

/// Submonoid membership instance in H^n equivalent to a Skolem system.
struct ReductionInstance {
  MembershipProblem problem;
  std::size_t e = 0;
  std::size_t d = 0;
  std::size_t q = 0;
  Integer upsilon{0};
  bool degenerate = false;
  std::vector<BlockLayout> layout;
  std::vector<EqualityMarker> equality_markers;
  ConstantMarker constant_marker;

  std::size_t n() const { return problem.ambient; }

  friend bool operator==(ReductionInstance const &, ReductionInstance const &) = default;
};

/// 8e + 4d + q + 1, or 1 for the degenerate system.
std::size_t ambient_power(NormalizedSkolem const &ns);

/// The 14 generators of multiplication block i (1-based) in template order
/// g1 g2 f1 g3 g4 f2 g5 g6 f3 g7 g8 g9 f4 g10, occupying components
/// 8(i-1)+1 .. 8i. Throws std::out_of_range for i outside [1, e].
std::vector<Generator> mul_block_generators(std::size_t i, NormalizedSkolem const &ns);

/// The 7 generators of addition block j in template order
/// g1 g2 g3 f1 g4 g5 g6, occupying components 8e+4(j-1)+1 .. 8e+4j.
std::vector<Generator> add_block_generators(std::size_t j, NormalizedSkolem const &ns);

/// 0-based position of the generator whose template exponent is `variable`:
/// g1 / g2 / g9 of a multiplication block, g1 / g2 / g3 of an addition block.
std::size_t carrier_of(std::size_t variable, NormalizedSkolem const &ns);

/// Multiplies the equality and constant markers into the carriers. gens must
/// be the unmarked block generators in compile order.
std::vector<Generator> apply_markers(std::vector<Generator> gens, NormalizedSkolem const &ns);

/// b(1) b(2) c_n^{|upsilon|}.
PowerElem target_element(NormalizedSkolem const &ns);

ReductionInstance compile(NormalizedSkolem const &ns);

/// Broken instance invariants (counts, target shape, generator supports);
/// empty for a well-formed instance.
std::vector<std::string> instance_violations(ReductionInstance const &inst);

/// Human description of what a component of H^n encodes.
std::string component_role(ReductionInstance const &inst, std::size_t component);

/// Block-by-block table: one row per component, one column per generator in
/// template order, cells holding the generator's component.
std::string table_view(ReductionInstance const &inst);
std::string table_view(ReductionInstance const &inst, std::size_t block_position);

}  // namespace heisred
