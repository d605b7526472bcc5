#include "heisred/diophantine.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "heisred/errors.hpp"

namespace heisred {

DiophEquation DiophEquation::from_sides(Polynomial const &lhs, Polynomial const &rhs) {
  Polynomial diff = lhs - rhs;
  Integer constant = diff.constant_term();
  diff.add_term({}, -constant);
  return DiophEquation(diff, -constant);
}

DiophEquation::DiophEquation(Polynomial const &lhs, Integer rhs) : rhs_(std::move(rhs)) {
  if (lhs.constant_term() != 0) {
    throw std::invalid_argument("left-hand side must have a zero constant term");
  }
  std::set<std::string> names;
  for (auto const &[powers, coefficient] : lhs.terms()) {
    monomials_.push_back({coefficient, powers});
    for (auto const &[name, exponent] : powers) {
      names.insert(name);
    }
  }
  if (monomials_.empty()) {
    throw std::invalid_argument("equation has no variables");
  }
  std::sort(monomials_.begin(), monomials_.end(),
            [](Monomial const &x, Monomial const &y) { return grlex_before(x.powers, y.powers); });
  variables_.assign(names.begin(), names.end());
}

Polynomial DiophEquation::lhs() const {
  Polynomial p;
  for (auto const &m : monomials_) {
    p.add_term(m.powers, m.coefficient);
  }
  return p;
}

bool DiophEquation::is_linear() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [](Monomial const &m) { return degree(m.powers) == 1; });
}

std::string render(DiophEquation const &eq) {
  std::ostringstream out;
  bool first = true;
  for (auto const &m : eq.monomials()) {
    bool negative = m.coefficient < 0;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Integer magnitude = abs(m.coefficient);
    bool need_star = false;
    if (magnitude != 1) {
      out << to_string(magnitude);
      need_star = true;
    }
    for (auto const &[name, exponent] : m.powers) {
      out << (need_star ? "*" : "") << name;
      if (exponent != 1) {
        out << '^' << exponent;
      }
      need_star = true;
    }
  }
  out << " = " << to_string(eq.rhs());
  return out.str();
}

std::string render(Assignment const &s) {
  std::ostringstream out;
  bool first = true;
  for (auto const &[name, value] : s) {
    out << (first ? "" : ", ") << name << "=" << to_string(value);
    first = false;
  }
  return out.str();
}

namespace {

Integer const &lookup(Assignment const &s, std::string const &name) {
  auto it = s.find(name);
  if (it == s.end()) {
    throw std::out_of_range("assignment has no value for '" + name + "'");
  }
  return it->second;
}

}  // namespace

Integer eval_poly(DiophEquation const &eq, Assignment const &s) {
  Integer total = 0;
  for (auto const &m : eq.monomials()) {
    Integer value = m.coefficient;
    for (auto const &[name, exponent] : m.powers) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), lookup(s, name).get_mpz_t(), exponent);
      value *= p;
    }
    total += value;
  }
  return total;
}

bool satisfies(DiophEquation const &eq, Assignment const &s) { return eval_poly(eq, s) == eq.rhs(); }

bool all_coefficients_negative(DiophEquation const &eq) {
  return std::all_of(eq.monomials().begin(), eq.monomials().end(),
                     [](Monomial const &m) { return m.coefficient < 0; });
}

DiophEquation orient_signs(DiophEquation const &eq) {
  if (!all_coefficients_negative(eq)) {
    return eq;
  }
  return DiophEquation(-eq.lhs(), -eq.rhs());
}

namespace {

std::string fresh_name(std::string const &stem, std::set<std::string> const &taken) {
  std::string name = stem;
  while (taken.count(name) != 0) {
    name += '_';
  }
  return name;
}

}  // namespace

NonnegativeEquation nonnegativize(DiophEquation const &eq) {
  std::set<std::string> taken(eq.variables().begin(), eq.variables().end());
  std::vector<VariableSplit> splits;
  std::map<std::string, Polynomial> substitution;
  for (auto const &name : eq.variables()) {
    std::string positive = fresh_name(name + "_p", taken);
    taken.insert(positive);
    std::string negative = fresh_name(name + "_m", taken);
    taken.insert(negative);
    substitution.emplace(name, Polynomial::variable(positive) - Polynomial::variable(negative));
    splits.push_back({name, positive, negative});
  }

  Polynomial lhs;
  for (auto const &m : eq.monomials()) {
    Polynomial term = Polynomial::constant(m.coefficient);
    for (auto const &[name, exponent] : m.powers) {
      term = term * pow(substitution.at(name), exponent);
    }
    lhs += term;
  }

  DiophEquation substituted(lhs, eq.rhs());
  bool negated = all_coefficients_negative(substituted);
  return {orient_signs(substituted), std::move(splits), negated};
}

Assignment split_assignment(NonnegativeEquation const &nn, Assignment const &s) {
  Assignment out;
  for (auto const &split : nn.splits) {
    Integer const &value = lookup(s, split.original);
    out[split.positive] = value > 0 ? value : Integer(0);
    out[split.negative] = value < 0 ? Integer(-value) : Integer(0);
  }
  return out;
}

Assignment project_assignment(NonnegativeEquation const &nn, Assignment const &s) {
  Assignment out;
  for (auto const &split : nn.splits) {
    out[split.original] = lookup(s, split.positive) - lookup(s, split.negative);
  }
  return out;
}

namespace {

// Monomial compiled against variable positions, evaluated in 64-bit
// arithmetic with overflow detection.
struct FastMonomial {
  std::int64_t coefficient = 0;
  std::vector<std::size_t> factors;  // variable positions, repeated per exponent
};

bool fast_eval(std::vector<FastMonomial> const &monomials, std::vector<std::int64_t> const &values,
               std::int64_t &out) {
  std::int64_t total = 0;
  for (auto const &m : monomials) {
    std::int64_t term = m.coefficient;
    for (std::size_t var : m.factors) {
      if (__builtin_mul_overflow(term, values[var], &term)) {
        return false;
      }
    }
    if (__builtin_add_overflow(total, term, &total)) {
      return false;
    }
  }
  out = total;
  return true;
}

}  // namespace

void enumerate_solutions(DiophEquation const &eq, std::int64_t bound, bool nonneg,
                         std::function<bool(Assignment const &)> const &visit, std::uint64_t cap) {
  if (bound < 0) {
    throw std::invalid_argument("box bound must be nonnegative");
  }
  auto const &vars = eq.variables();
  std::int64_t lo = nonneg ? 0 : -bound;
  auto width = static_cast<std::uint64_t>(bound - lo + 1);
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (__builtin_mul_overflow(candidates, width, &candidates) || candidates > cap) {
      throw LimitExceeded("box enumeration exceeds " + std::to_string(cap) + " candidates");
    }
  }

  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    position[vars[i]] = i;
  }
  bool fast_ok = true;
  std::vector<FastMonomial> fast;
  for (auto const &m : eq.monomials()) {
    FastMonomial f;
    if (!fits_int64(m.coefficient)) {
      fast_ok = false;
      break;
    }
    f.coefficient = to_int64(m.coefficient);
    for (auto const &[name, exponent] : m.powers) {
      f.factors.insert(f.factors.end(), exponent, position.at(name));
    }
    fast.push_back(std::move(f));
  }
  bool rhs_fits = fits_int64(eq.rhs());
  std::int64_t rhs = rhs_fits ? to_int64(eq.rhs()) : 0;

  std::vector<std::int64_t> values(vars.size(), lo);
  auto to_assignment = [&] {
    Assignment s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      s[vars[i]] = from_int64(values[i]);
    }
    return s;
  };

  for (;;) {
    std::int64_t value = 0;
    bool hit;
    if (fast_ok && fast_eval(fast, values, value)) {
      hit = rhs_fits && value == rhs;
    } else {
      hit = satisfies(eq, to_assignment());
    }
    if (hit && !visit(to_assignment())) {
      return;
    }
    // Odometer: the last variable varies fastest.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (values[i] < bound) {
        ++values[i];
        break;
      }
      values[i] = lo;
      if (i == 0) {
        return;
      }
    }
  }
}

std::optional<Assignment> brute_solve(DiophEquation const &eq, std::int64_t bound, bool nonneg,
                                      std::uint64_t cap) {
  std::optional<Assignment> found;
  enumerate_solutions(
      eq, bound, nonneg,
      [&](Assignment const &s) {
        found = s;
        return false;
      },
      cap);
  return found;
}

}  // namespace heisred
