#include "heisred/skolem.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "heisred/errors.hpp"

namespace heisred {

std::string to_string(VariableOrigin origin) {
  switch (origin) {
    case VariableOrigin::Original: return "original";
    case VariableOrigin::Product: return "product";
    case VariableOrigin::Sum: return "sum";
    case VariableOrigin::Constant: return "constant";
    case VariableOrigin::Zero: return "zero";
  }
  return "?";
}

namespace {

// Upper bound on the number of unit terms the linear phase may expand
// coefficients into.
constexpr unsigned long kMaxUnitTerms = 100'000;

class SystemBuilder {
 public:
  std::size_t add_variable(SkolemVariable v) {
    sys_.variables.push_back(std::move(v));
    return sys_.variables.size();
  }

  std::size_t product(std::size_t x, std::size_t y) {
    auto key = std::minmax(x, y);
    if (auto it = products_.find(key); it != products_.end()) {
      return it->second;
    }
    std::size_t w = add_variable({"w" + std::to_string(++product_count_), VariableOrigin::Product, {}, 0});
    sys_.equations.push_back({SkolemKind::Mul, {x, y, w}, 0});
    products_.emplace(key, w);
    return w;
  }

  std::size_t sum(std::size_t x, std::size_t y) {
    std::size_t s = add_variable({"s" + std::to_string(++sum_count_), VariableOrigin::Sum, {}, 0});
    sys_.equations.push_back({SkolemKind::Add, {x, y, s}, 0});
    return s;
  }

  // Left-to-right pairwise reduction of a nonempty list.
  std::size_t fold_sum(std::vector<std::size_t> const &terms) {
    std::size_t acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
      acc = sum(acc, terms[i]);
    }
    return acc;
  }

  void constant(std::size_t var, Integer value) {
    sys_.equations.push_back({SkolemKind::Const, {var, 0, 0}, std::move(value)});
  }

  SkolemSystem &system() { return sys_; }

 private:
  SkolemSystem sys_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> products_;
  unsigned product_count_ = 0;
  unsigned sum_count_ = 0;
};

}  // namespace

SkolemSystem skolemize(DiophEquation const &eq, std::span<VariableSplit const> splits) {
  if (all_coefficients_negative(eq)) {
    throw std::invalid_argument("all coefficients negative; orient the equation first");
  }
  SystemBuilder builder;
  std::map<std::string, std::size_t> index_of;
  for (auto const &name : eq.variables()) {
    SkolemVariable v{name, VariableOrigin::Original, name, 0};
    for (auto const &split : splits) {
      if (split.positive == name) {
        v.source = split.original;
        v.sign = 1;
      } else if (split.negative == name) {
        v.source = split.original;
        v.sign = -1;
      }
    }
    index_of[name] = builder.add_variable(std::move(v));
  }

  // Nonlinear phase: collapse the leftmost pair of factors until one is left.
  std::vector<std::pair<Integer, std::size_t>> linear;
  for (auto const &m : eq.monomials()) {
    std::vector<std::size_t> factors;
    for (auto const &[name, exponent] : m.powers) {
      factors.insert(factors.end(), exponent, index_of.at(name));
    }
    while (factors.size() > 1) {
      std::size_t w = builder.product(factors[0], factors[1]);
      factors.erase(factors.begin());
      factors[0] = w;
    }
    linear.emplace_back(m.coefficient, factors[0]);
  }

  // Linear phase: a coefficient k contributes |k| unit terms.
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
  unsigned long units = 0;
  for (auto const &[coefficient, var] : linear) {
    Integer magnitude = abs(coefficient);
    if (magnitude > kMaxUnitTerms || (units += magnitude.get_ui()) > kMaxUnitTerms) {
      throw LimitExceeded("coefficients expand to more than " + std::to_string(kMaxUnitTerms) +
                          " unit terms");
    }
    auto &side = coefficient > 0 ? positive : negative;
    side.insert(side.end(), magnitude.get_ui(), var);
  }

  Integer const &upsilon = eq.rhs();
  Integer magnitude = abs(upsilon);
  std::size_t p = builder.fold_sum(positive);
  if (negative.empty()) {
    if (upsilon >= 0) {
      builder.constant(p, upsilon);
    } else {
      // p + |upsilon| = z together with z + z = z forces z = 0, so the
      // system is unsolvable exactly like p = upsilon < 0.
      std::size_t k = builder.add_variable({"k", VariableOrigin::Constant, {}, 0});
      std::size_t z = builder.add_variable({"z", VariableOrigin::Zero, {}, 0});
      builder.system().equations.push_back({SkolemKind::Add, {p, k, z}, 0});
      builder.system().equations.push_back({SkolemKind::Add, {z, z, z}, 0});
      builder.constant(k, magnitude);
    }
  } else {
    std::size_t n = builder.fold_sum(negative);
    std::size_t k = builder.add_variable({"k", VariableOrigin::Constant, {}, 0});
    if (upsilon >= 0) {
      builder.system().equations.push_back({SkolemKind::Add, {n, k, p}, 0});
    } else {
      builder.system().equations.push_back({SkolemKind::Add, {p, k, n}, 0});
    }
    builder.constant(k, magnitude);
  }
  builder.system().upsilon = upsilon;
  return std::move(builder.system());
}

SkolemSystem skolemize(NonnegativeEquation const &nn) { return skolemize(nn.equation, nn.splits); }

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent_[std::max(x, y)] = std::min(x, y);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_operand(SkolemSystem const &sys, std::size_t index) {
  if (index == 0 || index > sys.variables.size()) {
    throw std::invalid_argument("operand " + std::to_string(index) + " outside [1, " +
                                std::to_string(sys.variables.size()) + "]");
  }
}

}  // namespace

NormalizedSkolem normalize(SkolemSystem const &sys) {
  std::size_t var_total = sys.variables.size();
  UnionFind classes(var_total + 1);
  std::vector<SkolemEquation const *> muls;
  std::vector<SkolemEquation const *> adds;
  SkolemEquation const *constant = nullptr;
  for (auto const &eq : sys.equations) {
    switch (eq.kind) {
      case SkolemKind::Mul:
      case SkolemKind::Add:
        for (std::size_t v : eq.operands) {
          check_operand(sys, v);
        }
        (eq.kind == SkolemKind::Mul ? muls : adds).push_back(&eq);
        break;
      case SkolemKind::Eq:
        check_operand(sys, eq.operands[0]);
        check_operand(sys, eq.operands[1]);
        classes.unite(eq.operands[0], eq.operands[1]);
        break;
      case SkolemKind::Const:
        check_operand(sys, eq.operands[0]);
        if (constant != nullptr) {
          throw std::invalid_argument("more than one constant equation");
        }
        if (eq.value < 0) {
          throw std::invalid_argument("constant equation with negative value");
        }
        constant = &eq;
        break;
    }
  }
  if (constant == nullptr) {
    throw std::invalid_argument("system has no constant equation");
  }

  NormalizedSkolem ns;
  ns.const_value = constant->value;
  ns.upsilon = sys.upsilon;

  // slot_var[i - 1] is the symbolic variable that z_i copies.
  std::vector<std::size_t> slot_var;
  auto assign_slots = [&](std::vector<SkolemEquation const *> const &eqs,
                          std::vector<std::array<std::size_t, 3>> &out) {
    for (auto const *eq : eqs) {
      std::array<std::size_t, 3> slots{};
      for (std::size_t k = 0; k < 3; ++k) {
        slot_var.push_back(eq->operands[k]);
        slots[k] = slot_var.size();
      }
      out.push_back(slots);
    }
  };
  assign_slots(muls, ns.mul);
  assign_slots(adds, ns.add);

  if (slot_var.empty()) {
    ns.degenerate = true;
    ns.const_var = 1;
    ns.provenance.push_back({sys.variables[constant->operands[0] - 1], 1});
    return ns;
  }

  std::map<std::size_t, std::vector<std::size_t>> members;  // class root -> slots, ascending
  for (std::size_t i = 1; i <= slot_var.size(); ++i) {
    members[classes.find(slot_var[i - 1])].push_back(i);
  }
  for (std::size_t i = 1; i <= slot_var.size(); ++i) {
    std::size_t first = members.at(classes.find(slot_var[i - 1])).front();
    ns.provenance.push_back({sys.variables[slot_var[i - 1] - 1], first});
  }
  for (auto const &[root, slots] : members) {
    for (std::size_t k = 1; k < slots.size(); ++k) {
      ns.equalities.push_back({slots[k - 1], slots[k]});
    }
  }
  std::sort(ns.equalities.begin(), ns.equalities.end(), [](Equality const &x, Equality const &y) {
    return std::pair(x.left, x.right) < std::pair(y.left, y.right);
  });

  auto const_class = members.find(classes.find(constant->operands[0]));
  if (const_class == members.end()) {
    throw std::invalid_argument("constant variable occurs in no product or sum equation");
  }
  ns.const_var = const_class->second.front();
  return ns;
}

SkolemSystem NormalizedSkolem::to_system() const {
  SkolemSystem sys;
  for (auto const &p : provenance) {
    sys.variables.push_back(p.variable);
  }
  for (auto const &ops : mul) {
    sys.equations.push_back({SkolemKind::Mul, ops, 0});
  }
  for (auto const &ops : add) {
    sys.equations.push_back({SkolemKind::Add, ops, 0});
  }
  for (auto const &eq : equalities) {
    sys.equations.push_back({SkolemKind::Eq, {eq.left, eq.right, 0}, 0});
  }
  sys.equations.push_back({SkolemKind::Const, {const_var, 0, 0}, const_value});
  sys.upsilon = upsilon;
  return sys;
}

std::vector<std::string> structural_violations(NormalizedSkolem const &ns) {
  std::vector<std::string> out;
  std::size_t e = ns.e();
  std::size_t total = ns.variable_count();
  for (std::size_t m = 1; m <= e; ++m) {
    std::array<std::size_t, 3> want{3 * (m - 1) + 1, 3 * (m - 1) + 2, 3 * m};
    if (ns.mul[m - 1] != want) {
      out.push_back("multiplication equation " + std::to_string(m) + " has non-canonical operands");
    }
  }
  for (std::size_t m = 1; m <= ns.d(); ++m) {
    std::size_t base = 3 * e + 3 * (m - 1);
    std::array<std::size_t, 3> want{base + 1, base + 2, base + 3};
    if (ns.add[m - 1] != want) {
      out.push_back("addition equation " + std::to_string(m) + " has non-canonical operands");
    }
  }
  if (!ns.degenerate) {
    std::vector<int> seen(total + 1, 0);
    for (auto const *block : {&ns.mul, &ns.add}) {
      for (auto const &ops : *block) {
        for (std::size_t v : ops) {
          if (v >= 1 && v <= total) {
            ++seen[v];
          }
        }
      }
    }
    for (std::size_t v = 1; v <= total; ++v) {
      if (seen[v] != 1) {
        out.push_back("z" + std::to_string(v) + " fills " + std::to_string(seen[v]) + " slots");
      }
    }
  } else if (ns.e() + ns.d() != 0) {
    out.push_back("degenerate flag set on a system with blocks");
  }
  for (auto const &eq : ns.equalities) {
    if (eq.left == eq.right) {
      out.push_back("equality z" + std::to_string(eq.left) + " = z" + std::to_string(eq.right) +
                    " relates a variable to itself");
    }
    if (eq.left == 0 || eq.right == 0 || eq.left > total || eq.right > total) {
      out.push_back("equality operand outside [1, " + std::to_string(total) + "]");
    }
  }
  if (ns.const_var == 0 || ns.const_var > total) {
    out.push_back("constant variable outside the system");
  }
  if (ns.const_value < 0) {
    out.push_back("negative constant value");
  }
  if (ns.provenance.size() != total) {
    out.push_back("provenance does not cover every variable");
  }
  return out;
}

namespace {

Integer const &value_of(SkolemAssignment const &s, std::size_t v) {
  auto it = s.find(v);
  if (it == s.end()) {
    throw std::out_of_range("assignment has no value for z" + std::to_string(v));
  }
  return it->second;
}

}  // namespace

bool check_assignment(NormalizedSkolem const &ns, SkolemAssignment const &s) {
  for (std::size_t v = 1; v <= ns.variable_count(); ++v) {
    if (value_of(s, v) < 0) {
      return false;
    }
  }
  for (auto const &[i, j, l] : ns.mul) {
    if (value_of(s, i) * value_of(s, j) != value_of(s, l)) {
      return false;
    }
  }
  for (auto const &[i, j, l] : ns.add) {
    if (value_of(s, i) + value_of(s, j) != value_of(s, l)) {
      return false;
    }
  }
  for (auto const &eq : ns.equalities) {
    if (value_of(s, eq.left) != value_of(s, eq.right)) {
      return false;
    }
  }
  return value_of(s, ns.const_var) == ns.const_value;
}

SkolemAssignment lift_solution(DiophEquation const &eq, Assignment const &s,
                               NormalizedSkolem const &ns) {
  if (!satisfies(eq, s)) {
    throw std::invalid_argument("assignment " + render(s) + " does not solve " + render(eq));
  }
  std::size_t total = ns.variable_count();
  std::vector<std::optional<Integer>> value(total + 1);  // indexed by representative

  auto rep = [&](std::size_t v) { return ns.provenance[v - 1].representative; };
  for (std::size_t v = 1; v <= total; ++v) {
    auto const &var = ns.provenance[v - 1].variable;
    std::optional<Integer> seed;
    switch (var.origin) {
      case VariableOrigin::Original: {
        auto it = s.find(var.source);
        if (it == s.end()) {
          throw std::invalid_argument("assignment has no value for '" + var.source + "'");
        }
        Integer const &x = it->second;
        if (var.sign > 0) {
          seed = x > 0 ? x : Integer(0);
        } else if (var.sign < 0) {
          seed = x < 0 ? Integer(-x) : Integer(0);
        } else if (x < 0) {
          throw std::invalid_argument("'" + var.source + "' must be nonnegative in this system");
        } else {
          seed = x;
        }
        break;
      }
      case VariableOrigin::Constant: seed = ns.const_value; break;
      case VariableOrigin::Zero: seed = Integer(0); break;
      default: break;
    }
    if (seed) {
      value[rep(v)] = *seed;
    }
  }
  if (ns.degenerate) {
    value[1] = value[1].value_or(ns.const_value);
  }

  // Fixpoint: any equation with all but its determined operand known fixes it.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &[i, j, l] : ns.mul) {
      auto &x = value[rep(i)];
      auto &y = value[rep(j)];
      auto &z = value[rep(l)];
      if (x && y && !z) {
        z = *x * *y;
        changed = true;
      }
    }
    for (auto const &[i, j, l] : ns.add) {
      auto &x = value[rep(i)];
      auto &y = value[rep(j)];
      auto &z = value[rep(l)];
      if (x && y && !z) {
        z = *x + *y;
        changed = true;
      } else if (x && z && !y) {
        y = *z - *x;
        changed = true;
      } else if (y && z && !x) {
        x = *z - *y;
        changed = true;
      }
    }
  }

  SkolemAssignment out;
  for (std::size_t v = 1; v <= total; ++v) {
    auto const &x = value[rep(v)];
    if (!x) {
      throw std::logic_error("z" + std::to_string(v) + " is not determined by the solution");
    }
    out[v] = *x;
  }
  if (!check_assignment(ns, out)) {
    throw std::logic_error("lifted assignment violates the Skolem system");
  }
  return out;
}

namespace {

std::string z(std::size_t v) { return "ζ" + std::to_string(v); }

}  // namespace

std::string render(NormalizedSkolem const &ns) {
  std::ostringstream out;
  out << "Skolem system: e = " << ns.e() << ", d = " << ns.d() << ", q = " << ns.q()
      << ", |υ| = " << to_string(ns.const_value) << (ns.degenerate ? " (degenerate)" : "") << '\n';
  std::size_t label = 0;
  out << "Multiplication block:\n";
  for (auto const &[i, j, l] : ns.mul) {
    out << "  P_" << ++label << ": " << z(i) << " * " << z(j) << " = " << z(l) << '\n';
  }
  out << "Addition block:\n";
  for (auto const &[i, j, l] : ns.add) {
    out << "  P_" << ++label << ": " << z(i) << " + " << z(j) << " = " << z(l) << '\n';
  }
  out << "Equalities:\n";
  for (auto const &eq : ns.equalities) {
    out << "  P_" << ++label << ": " << z(eq.left) << " = " << z(eq.right) << '\n';
  }
  out << "Constant:\n";
  out << "  " << z(ns.const_var) << " = " << to_string(ns.const_value) << '\n';
  out << "Variables:\n";
  for (std::size_t v = 1; v <= ns.provenance.size(); ++v) {
    auto const &p = ns.provenance[v - 1];
    out << "  " << z(v) << ": " << p.variable.name << " [" << to_string(p.variable.origin);
    if (p.variable.origin == VariableOrigin::Original && p.variable.sign != 0) {
      out << (p.variable.sign > 0 ? ", positive part of " : ", negative part of ") << p.variable.source;
    }
    out << "]";
    if (p.representative != v) {
      out << " copy of " << z(p.representative);
    }
    out << '\n';
  }
  return out.str();
}

CompiledSkolem compile_skolem(DiophEquation const &eq) {
  NonnegativeEquation nn = nonnegativize(eq);
  NormalizedSkolem ns = normalize(skolemize(nn));
  return {eq, std::move(nn), std::move(ns)};
}

}  // namespace heisred
