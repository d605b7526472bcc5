#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heisred/integer.hpp"
#include "heisred/polynomial.hpp"

namespace heisred {

struct Monomial {
  Integer coefficient;
  PowerProduct powers;

  friend bool operator==(Monomial const &, Monomial const &) = default;
};

/// D(z_1, ..., z_t) = upsilon with a zero constant term on the left.
///
/// Monomials are collected (no two share a power product), nonzero, and kept
/// in graded lexicographic order; variables are sorted by name.
class DiophEquation {
 public:
  /// Collects lhs - rhs, moves its constant to the right-hand side. Throws
  /// std::invalid_argument if no variable survives collection.
  static DiophEquation from_sides(Polynomial const &lhs, Polynomial const &rhs);

  DiophEquation(Polynomial const &lhs, Integer rhs);

  std::vector<std::string> const &variables() const { return variables_; }
  std::vector<Monomial> const &monomials() const { return monomials_; }
  Integer const &rhs() const { return rhs_; }

  Polynomial lhs() const;
  bool is_linear() const;

  friend bool operator==(DiophEquation const &, DiophEquation const &) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> monomials_;
  Integer rhs_;
};

using Assignment = std::map<std::string, Integer>;

/// Grammar: variables [a-zA-Z][a-zA-Z0-9_]*, integer literals, + - * ^,
/// parentheses, exactly one '='. Throws ParseError.
DiophEquation parse_equation(std::string_view text);

/// Canonical text form, e.g. "3*x^2*y - y = 12". parse_equation inverts it.
std::string render(DiophEquation const &eq);
std::string render(Assignment const &s);

/// Value of the left-hand side. Throws std::out_of_range on a missing variable.
Integer eval_poly(DiophEquation const &eq, Assignment const &s);
bool satisfies(DiophEquation const &eq, Assignment const &s);

bool all_coefficients_negative(DiophEquation const &eq);

/// Multiplies both sides by -1 when every coefficient is negative; otherwise
/// returns eq unchanged.
DiophEquation orient_signs(DiophEquation const &eq);

/// z = positive - negative, both parts nonnegative.
struct VariableSplit {
  std::string original;
  std::string positive;
  std::string negative;

  friend bool operator==(VariableSplit const &, VariableSplit const &) = default;
};

struct NonnegativeEquation {
  DiophEquation equation;
  std::vector<VariableSplit> splits;
  bool negated = false;
};

/// Substitutes z = z_p - z_m for every variable, keeping the right-hand side,
/// then orients signs. Nonnegative solutions project onto integer solutions.
NonnegativeEquation nonnegativize(DiophEquation const &eq);

/// z = max(z, 0) - max(-z, 0) for every split variable.
Assignment split_assignment(NonnegativeEquation const &nn, Assignment const &s);

/// z = z_p - z_m.
Assignment project_assignment(NonnegativeEquation const &nn, Assignment const &s);

inline constexpr std::uint64_t kBruteForceCandidateCap = 100'000'000;

/// Visits solutions in the box [-bound, bound]^t (or [0, bound]^t when
/// nonneg) in lexicographic order of eq.variables(); stops when visit returns
/// false. Throws LimitExceeded if the box holds more than `cap` candidates.
void enumerate_solutions(DiophEquation const &eq, std::int64_t bound, bool nonneg,
                         std::function<bool(Assignment const &)> const &visit,
                         std::uint64_t cap = kBruteForceCandidateCap);

/// First solution in lexicographic order, if any.
std::optional<Assignment> brute_solve(DiophEquation const &eq, std::int64_t bound, bool nonneg,
                                      std::uint64_t cap = kBruteForceCandidateCap);

}  // namespace heisred
