#include "heisred/gadgets.hpp"

#include <stdexcept>

namespace heisred {

std::string exponent_symbol(ExponentRole role) {
  switch (role) {
    case ExponentRole::First: return "ζ";
    case ExponentRole::Second: return "ζ′";
    case ExponentRole::Third: return "ζ″";
    case ExponentRole::Once: return "";
  }
  return "";
}

std::string to_string(ExponentRole role) {
  switch (role) {
    case ExponentRole::First: return "first";
    case ExponentRole::Second: return "second";
    case ExponentRole::Third: return "third";
    case ExponentRole::Once: return "once";
  }
  return "?";
}

ExponentRole exponent_role_from_string(std::string const &text) {
  for (auto role : {ExponentRole::First, ExponentRole::Second, ExponentRole::Third, ExponentRole::Once}) {
    if (to_string(role) == text) {
      return role;
    }
  }
  throw std::invalid_argument("unknown exponent role '" + text + "'");
}

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Mul: return "mul";
    case BlockKind::Add: return "add";
    case BlockKind::Chain: return "chain";
    case BlockKind::Conjugation: return "conjugation";
    case BlockKind::Degenerate: return "degenerate";
  }
  return "?";
}

BlockKind block_kind_from_string(std::string const &text) {
  for (auto kind : {BlockKind::Mul, BlockKind::Add, BlockKind::Chain, BlockKind::Conjugation,
                    BlockKind::Degenerate}) {
    if (to_string(kind) == text) {
      return kind;
    }
  }
  throw std::invalid_argument("unknown block kind '" + text + "'");
}

namespace {

HeisElem A() { return HeisElem::a(); }
HeisElem B() { return HeisElem::b(); }
HeisElem C() { return HeisElem::c(); }
HeisElem AC() { return {1L, 0L, 1L}; }
HeisElem A_INV() { return {-1L, 0L, 0L}; }
HeisElem B_INV() { return {0L, -1L, 0L}; }
HeisElem C_INV() { return {0L, 0L, -1L}; }

using R = ExponentRole;

}  // namespace

Gadget const &conjugation_gadget() {
  static Gadget const gadget{
      BlockKind::Conjugation,
      1,
      {
          {"g1", R::First, {{1, AC()}}},
          {"b", R::Once, {{1, B()}}},
          {"g2", R::First, {{1, A_INV()}}},
      },
      {{1, B()}},
  };
  return gadget;
}

Gadget const &addition_gadget() {
  static Gadget const gadget{
      BlockKind::Add,
      4,
      {
          {"g1", R::First, {{1, AC()}, {4, C()}}},
          {"g2", R::Second, {{2, AC()}, {4, C()}}},
          {"g3", R::Third, {{3, AC()}, {4, C_INV()}}},
          {"f1", R::Once, {{1, B()}, {2, B()}, {3, B()}}},
          {"g4", R::First, {{1, A_INV()}}},
          {"g5", R::Second, {{2, A_INV()}}},
          {"g6", R::Third, {{3, A_INV()}}},
      },
      {{1, B()}, {2, B()}, {3, B()}},
  };
  return gadget;
}

Gadget const &chain_gadget() {
  static Gadget const gadget{
      BlockKind::Chain,
      6,
      {
          {"g1", R::First, {{1, AC()}}},
          {"g2", R::Second, {{2, AC()}}},
          {"f1", R::Once, {{1, B()}, {2, B()}}},
          {"g3", R::First, {{1, A_INV()}, {3, AC()}}},
          {"g4", R::Second, {{2, A_INV()}, {4, AC()}}},
          {"f2", R::Once, {{3, B()}, {4, B()}}},
          {"g5", R::First, {{3, A_INV()}, {5, AC()}}},
          {"g6", R::Second, {{4, A_INV()}, {6, AC()}}},
          {"f3", R::Once, {{5, B()}, {6, B()}}},
          {"g7", R::First, {{5, A_INV()}}},
          {"g8", R::Second, {{6, A_INV()}}},
      },
      {{1, B()}, {2, B()}, {3, B()}, {4, B()}, {5, B()}, {6, B()}},
  };
  return gadget;
}

// Copy 7 accumulates a^z b^z' a^-z b^-z' = c^(-z z'), which g9 cancels with
// c^z'' exactly when z z' = z''.
Gadget const &multiplication_gadget() {
  static Gadget const gadget{
      BlockKind::Mul,
      8,
      {
          {"g1", R::First, {{1, AC()}, {7, A()}}},
          {"g2", R::Second, {{2, AC()}}},
          {"f1", R::Once, {{1, B()}, {2, B()}}},
          {"g3", R::First, {{1, A_INV()}, {3, AC()}}},
          {"g4", R::Second, {{2, A_INV()}, {4, AC()}, {7, B()}}},
          {"f2", R::Once, {{3, B()}, {4, B()}}},
          {"g5", R::First, {{3, A_INV()}, {5, AC()}, {7, A_INV()}}},
          {"g6", R::Second, {{4, A_INV()}, {6, AC()}}},
          {"f3", R::Once, {{5, B()}, {6, B()}}},
          {"g7", R::First, {{5, A_INV()}}},
          {"g8", R::Second, {{6, A_INV()}, {7, B_INV()}}},
          {"g9", R::Third, {{7, C()}, {8, AC()}}},
          {"f4", R::Once, {{8, B()}}},
          {"g10", R::Third, {{8, A_INV()}}},
      },
      {{1, B()}, {2, B()}, {3, B()}, {4, B()}, {5, B()}, {6, B()}, {8, B()}},
  };
  return gadget;
}

PowerElem place(std::vector<std::pair<std::size_t, HeisElem>> const &factors, std::size_t ambient,
                std::size_t offset) {
  PowerElem u(ambient);
  for (auto const &[local, x] : factors) {
    u.multiply_component(offset + local, x);
  }
  return u;
}

namespace {

Integer exponent_for(ExponentRole role, std::array<Integer, 3> const &exponents) {
  switch (role) {
    case ExponentRole::First: return exponents[0];
    case ExponentRole::Second: return exponents[1];
    case ExponentRole::Third: return exponents[2];
    case ExponentRole::Once: return 1;
  }
  return 0;
}

}  // namespace

PowerElem template_product(Gadget const &gadget, std::array<Integer, 3> const &exponents) {
  PowerElem out(gadget.width);
  for (auto const &g : gadget.generators) {
    out = out * power(place(g.factors, gadget.width, 0), exponent_for(g.role, exponents));
  }
  return out;
}

PowerElem gadget_target(Gadget const &gadget) { return place(gadget.target, gadget.width, 0); }

MembershipProblem gadget_problem(Gadget const &gadget) {
  MembershipProblem problem;
  problem.ambient = gadget.width;
  for (auto const &g : gadget.generators) {
    problem.generators.push_back(
        {g.slot, place(g.factors, gadget.width, 0), {gadget.kind, 1, g.slot, g.role, 0}});
  }
  problem.target = gadget_target(gadget);
  return problem;
}

}  // namespace heisred
