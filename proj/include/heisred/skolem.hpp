#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "heisred/diophantine.hpp"
#include "heisred/integer.hpp"

namespace heisred {

enum class SkolemKind { Mul, Add, Eq, Const };

/// z_i z_j = z_l, z_i + z_j = z_l, z_i = z_j or z_i = value. Operands are
/// 1-based variable indices; unused operand slots are zero.
struct SkolemEquation {
  SkolemKind kind;
  std::array<std::size_t, 3> operands{};
  Integer value{0};

  friend bool operator==(SkolemEquation const &, SkolemEquation const &) = default;
};

enum class VariableOrigin { Original, Product, Sum, Constant, Zero };

std::string to_string(VariableOrigin origin);

struct SkolemVariable {
  std::string name;
  VariableOrigin origin = VariableOrigin::Original;
  // For Original variables: the integer variable this one stands for, and
  // +1 / -1 for its positive / negative part, 0 when it is that variable.
  std::string source;
  int sign = 0;

  friend bool operator==(SkolemVariable const &, SkolemVariable const &) = default;
};

/// Skolem system over symbolic variables, as produced by skolemize.
struct SkolemSystem {
  std::vector<SkolemVariable> variables;  // index i refers to variables[i - 1]
  std::vector<SkolemEquation> equations;
  Integer upsilon{0};
};

/// Reduces every monomial to a single variable through product equations,
/// then the signed sum through addition equations, and finishes with the
/// constant equation. The left-hand side must not be all negative (see
/// orient_signs). Variables of eq are treated as nonnegative; `splits`
/// records which integer variable each one is a part of.
SkolemSystem skolemize(DiophEquation const &eq, std::span<VariableSplit const> splits = {});
SkolemSystem skolemize(NonnegativeEquation const &nn);

struct Equality {
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(Equality const &, Equality const &) = default;
};

struct VariableProvenance {
  SkolemVariable variable;
  std::size_t representative = 0;  // first index of the copy class

  friend bool operator==(VariableProvenance const &, VariableProvenance const &) = default;
};

/// Ordered nonnegative Skolem system. Multiplication equation m reads
/// z_{3m-2} z_{3m-1} = z_{3m}; addition equation m reads
/// z_{3e+3m-2} + z_{3e+3m-1} = z_{3e+3m}; every index in [1, 3(e+d)] fills
/// exactly one slot. Copies of one variable are tied together by a path of
/// equalities. The degenerate system "z_1 = value" has e = d = 0.
struct NormalizedSkolem {
  std::vector<std::array<std::size_t, 3>> mul;
  std::vector<std::array<std::size_t, 3>> add;
  std::vector<Equality> equalities;
  std::size_t const_var = 0;
  Integer const_value{0};
  Integer upsilon{0};
  bool degenerate = false;
  std::vector<VariableProvenance> provenance;  // provenance[i - 1] describes z_i

  std::size_t e() const { return mul.size(); }
  std::size_t d() const { return add.size(); }
  std::size_t q() const { return equalities.size(); }
  std::size_t variable_count() const { return degenerate ? 1 : 3 * (e() + d()); }

  /// Back to equation form: MUL block, ADD block, equalities, constant.
  SkolemSystem to_system() const;

  friend bool operator==(NormalizedSkolem const &, NormalizedSkolem const &) = default;
};

/// Splits multiply-used variables into copies, numbers multiplication slots
/// first and addition slots second, links copies by equality paths and
/// records the constant variable. Throws std::invalid_argument on systems
/// that do not have exactly one constant equation.
NormalizedSkolem normalize(SkolemSystem const &sys);

/// Violated structural invariants, empty when ns is well formed.
std::vector<std::string> structural_violations(NormalizedSkolem const &ns);

using SkolemAssignment = std::map<std::size_t, Integer>;

/// Every equation holds and every value is nonnegative. Throws
/// std::out_of_range when an index in [1, variable_count()] is missing.
bool check_assignment(NormalizedSkolem const &ns, SkolemAssignment const &s);

/// Lifts an integer solution of eq to a solution of ns: splits each integer
/// value into nonnegative parts and evaluates the introduced variables.
/// Throws std::invalid_argument when s does not solve eq.
SkolemAssignment lift_solution(DiophEquation const &eq, Assignment const &s,
                               NormalizedSkolem const &ns);

/// Numbered multiplication block, addition block, equalities and constant,
/// followed by the origin of every variable.
std::string render(NormalizedSkolem const &ns);

/// One-shot front end: orient, nonnegativize, skolemize, normalize.
struct CompiledSkolem {
  DiophEquation equation;
  NonnegativeEquation nonnegative;
  NormalizedSkolem system;
};

CompiledSkolem compile_skolem(DiophEquation const &eq);

}  // namespace heisred
