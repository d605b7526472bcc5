#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "heisred/gadgets.hpp"
#include "heisred/membership.hpp"
#include "heisred/reduction.hpp"
#include "heisred/skolem.hpp"

namespace heisred {

/// generator^multiplicity, generator being a 0-based position.
struct WordEntry {
  std::size_t generator = 0;
  Integer multiplicity{0};

  friend bool operator==(WordEntry const &, WordEntry const &) = default;
};

/// Run-length word over the generators, evaluated left to right.
using Word = std::vector<WordEntry>;

/// Total number of generator occurrences.
Integer word_length(Word const &w);

/// Run-length encoding of a plain generator sequence.
Word compress(std::vector<std::size_t> const &sequence);

/// "g1^3 b g2^3"; zero multiplicities are shown as ^0, the empty word as "1".
std::string render(Word const &w, MembershipProblem const &problem);

/// Concatenation of every block's template word, multiplication blocks first,
/// with exponents read from s through the generators' provenance. Zero
/// multiplicities are kept so the template shape stays visible.
Word build_witness(ReductionInstance const &inst, SkolemAssignment const &s);

/// Template word of a standalone gadget at (z, z', z'').
Word template_word(Gadget const &gadget, std::array<Integer, 3> const &exponents);

/// Throws std::out_of_range for an unknown generator and
/// std::invalid_argument for a negative multiplicity.
PowerElem evaluate_word(MembershipProblem const &problem, Word const &w);

struct Discrepancy {
  std::size_t component = 0;
  HeisElem got;
  HeisElem want;
  std::string role;
};

struct DiscrepancyReport {
  std::vector<Discrepancy> entries;

  bool empty() const { return entries.empty(); }
  std::vector<std::size_t> components() const;
};

DiscrepancyReport verify_witness(ReductionInstance const &inst, Word const &w);
DiscrepancyReport verify_witness(MembershipProblem const &problem, Word const &w);

/// Table keyed by component role; "verified" when empty.
std::string render(DiscrepancyReport const &report);

}  // namespace heisred
