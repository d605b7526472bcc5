#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

Mat mat_identity() {
  Mat m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m[r][c] = r == c ? 1 : 0;
    }
  }
  return m;
}

Mat mat_mul(Mat const &x, Mat const &y) {
  Mat out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      Integer sum = 0;
      for (int k = 0; k < 3; ++k) {
        sum += x[r][k] * y[k][c];
      }
      out[r][c] = sum;
    }
  }
  return out;
}

Mat embed(Integer const &alpha, Integer const &beta, Integer const &gamma) {
  Mat m = mat_identity();
  m[0][1] = alpha;
  m[1][2] = beta;
  m[0][2] = alpha * beta - gamma;
  return m;
}

std::array<Integer, 3> coords(Mat const &m) {
  if (m[0][0] != 1 || m[1][1] != 1 || m[2][2] != 1 || m[1][0] != 0 || m[2][0] != 0 || m[2][1] != 0) {
    throw std::invalid_argument("not unitriangular");
  }
  return {m[0][1], m[1][2], m[0][1] * m[1][2] - m[0][2]};
}

Mat unitriangular_inverse(Mat const &m) {
  // (I + N)^-1 = I - N + N^2 for strictly upper N in dimension 3.
  Mat n = m;
  for (int k = 0; k < 3; ++k) {
    n[k][k] = 0;
  }
  Mat n2 = mat_mul(n, n);
  Mat out = mat_identity();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out[r][c] += n2[r][c] - n[r][c];
    }
  }
  return out;
}

std::array<Integer, 3> coords(heisred::HeisElem const &x) { return {x.alpha(), x.beta(), x.gamma()}; }

Mat embed(heisred::HeisElem const &x) { return embed(x.alpha(), x.beta(), x.gamma()); }

namespace {

struct Constraint {
  enum Kind { Mul, Add, Eq, Const } kind;
  std::array<std::size_t, 3> v{};
  Integer value{0};
  bool negated = false;  // must fail instead of hold
};

bool holds(Constraint const &c, std::vector<std::optional<Integer>> const &x) {
  bool ok = false;
  switch (c.kind) {
    case Constraint::Mul: ok = *x[c.v[0]] * *x[c.v[1]] == *x[c.v[2]]; break;
    case Constraint::Add: ok = *x[c.v[0]] + *x[c.v[1]] == *x[c.v[2]]; break;
    case Constraint::Eq: ok = *x[c.v[0]] == *x[c.v[1]]; break;
    case Constraint::Const: ok = *x[c.v[0]] == c.value; break;
  }
  return ok != c.negated;
}

std::size_t arity(Constraint const &c) {
  return c.kind == Constraint::Eq ? 2 : c.kind == Constraint::Const ? 1 : 3;
}

// Value forced on variable `var` by c when it is c's only unknown.
std::optional<Integer> forced(Constraint const &c, std::size_t var,
                              std::vector<std::optional<Integer>> const &x) {
  if (c.negated) {
    return std::nullopt;
  }
  std::size_t unknown = 0;
  for (std::size_t k = 0; k < arity(c); ++k) {
    unknown += !x[c.v[k]].has_value();
  }
  if (unknown != 1) {
    return std::nullopt;
  }
  switch (c.kind) {
    case Constraint::Const:
      return c.value;
    case Constraint::Eq:
      return var == c.v[0] ? x[c.v[1]] : x[c.v[0]];
    case Constraint::Add:
      if (var == c.v[2]) return *x[c.v[0]] + *x[c.v[1]];
      return var == c.v[0] ? *x[c.v[2]] - *x[c.v[1]] : *x[c.v[2]] - *x[c.v[0]];
    case Constraint::Mul: {
      if (var == c.v[2]) return *x[c.v[0]] * *x[c.v[1]];
      Integer other = var == c.v[0] ? *x[c.v[1]] : *x[c.v[0]];
      if (other == 0) return std::nullopt;
      Integer q = *x[c.v[2]] / other;
      if (q * other != *x[c.v[2]]) return Integer(-1);
      return q;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<heisred::SkolemAssignment> solve_skolem(heisred::NormalizedSkolem const &ns,
                                                      SkolemSearch const &options) {
  std::size_t count = ns.variable_count();
  std::vector<Constraint> constraints;
  for (auto const &m : ns.mul) {
    constraints.push_back({Constraint::Mul, m});
  }
  for (auto const &a : ns.add) {
    constraints.push_back({Constraint::Add, a});
  }
  for (std::size_t k = 0; k < ns.equalities.size(); ++k) {
    bool drop = options.drop_equality == k;
    constraints.push_back({Constraint::Eq, {ns.equalities[k].left, ns.equalities[k].right, 0}, 0, drop});
  }
  constraints.push_back({Constraint::Const, {ns.const_var, 0, 0}, ns.const_value, options.drop_constant});

  std::vector<std::vector<std::size_t>> touching(count + 1);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    for (std::size_t j = 0; j < arity(constraints[k]); ++j) {
      touching[constraints[k].v[j]].push_back(k);
    }
  }

  std::vector<std::optional<Integer>> x(count + 1);
  Integer bound(static_cast<unsigned long>(options.bound));
  std::uint64_t nodes = 0;

  auto consistent = [&](std::size_t var) {
    for (std::size_t k : touching[var]) {
      auto const &c = constraints[k];
      bool complete = true;
      for (std::size_t j = 0; j < arity(c); ++j) {
        complete = complete && x[c.v[j]].has_value();
      }
      if (complete && !holds(c, x)) {
        return false;
      }
    }
    return true;
  };

  std::function<bool()> search = [&]() -> bool {
    if (++nodes > options.node_cap) {
      throw std::runtime_error("oracle node cap exceeded");
    }
    // Prefer a forced variable; otherwise branch on the first unknown.
    std::size_t pick = 0;
    std::optional<Integer> value;
    for (std::size_t var = 1; var <= count && !value; ++var) {
      if (x[var]) continue;
      if (pick == 0) pick = var;
      for (std::size_t k : touching[var]) {
        if (auto f = forced(constraints[k], var, x)) {
          pick = var;
          value = f;
          break;
        }
      }
    }
    if (pick == 0) {
      return true;
    }
    auto attempt = [&](Integer const &v) {
      if (v < 0 || v > bound) return false;
      x[pick] = v;
      if (consistent(pick) && search()) return true;
      x[pick].reset();
      return false;
    };
    if (value) {
      return attempt(*value);
    }
    for (unsigned long v = 0; v <= options.bound; ++v) {
      if (attempt(Integer(v))) return true;
    }
    return false;
  };

  if (!search()) {
    return std::nullopt;
  }
  heisred::SkolemAssignment out;
  for (std::size_t var = 1; var <= count; ++var) {
    out[var] = *x[var];
  }
  return out;
}

heisred::Assignment project(heisred::NormalizedSkolem const &ns, heisred::SkolemAssignment const &s) {
  heisred::Assignment out;
  for (std::size_t k = 0; k < ns.provenance.size(); ++k) {
    auto const &p = ns.provenance[k];
    if (p.variable.origin != heisred::VariableOrigin::Original || p.representative != k + 1) {
      continue;
    }
    Integer value = s.at(k + 1);
    auto &slot = out[p.variable.source];
    slot += p.variable.sign < 0 ? Integer(-value) : value;
  }
  return out;
}

std::string random_equation(std::mt19937_64 &rng, unsigned max_degree) {
  static char const *names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), var(0, 2), degree(1, static_cast<int>(max_degree)),
      rhs(-6, 6);
  std::string text;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    int c = 0;
    while (c == 0) c = coef(rng);
    text += (t == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (std::abs(c) != 1) text += std::to_string(std::abs(c)) + "*";
    int deg = degree(rng);
    for (int k = 0; k < deg; ++k) {
      text += (k ? "*" : "") + std::string(names[var(rng)]);
    }
  }
  return text + " = " + std::to_string(rhs(rng));
}

}  // namespace oracle
