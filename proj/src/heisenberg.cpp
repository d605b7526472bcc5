#include "heisred/heisenberg.hpp"

#include <sstream>
#include <stdexcept>

namespace heisred {

HeisElem operator*(HeisElem const &x, HeisElem const &y) {
  return {x.alpha() + y.alpha(), x.beta() + y.beta(),
          x.gamma() + y.gamma() + x.beta() * y.alpha()};
}

HeisElem inverse(HeisElem const &x) {
  return {-x.alpha(), -x.beta(), x.alpha() * x.beta() - x.gamma()};
}

HeisElem power(HeisElem const &x, Integer const &k) {
  // k(k-1) is always even, so the division is exact for negative k as well.
  Integer binom = k * (k - 1) / 2;
  return {k * x.alpha(), k * x.beta(), k * x.gamma() + binom * x.alpha() * x.beta()};
}

HeisElem commutator(HeisElem const &x, HeisElem const &y) {
  return inverse(x) * inverse(y) * x * y;
}

namespace {

void render_factor(std::ostringstream &out, char symbol, Integer const &exponent, bool &first) {
  if (exponent == 0) {
    return;
  }
  if (!first) {
    out << ' ';
  }
  first = false;
  out << symbol;
  if (exponent != 1) {
    out << '^' << to_string(exponent);
  }
}

}  // namespace

std::string render(HeisElem const &x) {
  if (x.is_identity()) {
    return "1";
  }
  std::ostringstream out;
  bool first = true;
  render_factor(out, 'a', x.alpha(), first);
  render_factor(out, 'b', x.beta(), first);
  render_factor(out, 'c', x.gamma(), first);
  return out.str();
}

IntMatrix3 IntMatrix3::identity() {
  IntMatrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, i) = 1;
  }
  return m;
}

bool IntMatrix3::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (entries[i][i] != 1) {
      return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i][j] != 0) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix3 operator*(IntMatrix3 const &x, IntMatrix3 const &y) {
  IntMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Integer sum = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        sum += x(i, k) * y(k, j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

IntMatrix3 to_matrix(HeisElem const &x) {
  IntMatrix3 m = IntMatrix3::identity();
  m(0, 1) = x.alpha();
  m(1, 2) = x.beta();
  m(0, 2) = x.alpha() * x.beta() - x.gamma();
  return m;
}

HeisElem from_matrix(IntMatrix3 const &m) {
  if (!m.is_upper_unitriangular()) {
    throw std::invalid_argument("matrix is not upper unitriangular");
  }
  return {m(0, 1), m(1, 2), m(0, 1) * m(1, 2) - m(0, 2)};
}

PowerElem::PowerElem(std::size_t ambient) : ambient_(ambient) {
  if (ambient == 0) {
    throw std::invalid_argument("direct power needs at least one component");
  }
}

PowerElem PowerElem::single(std::size_t ambient, std::size_t index, HeisElem x) {
  PowerElem u(ambient);
  u.set(index, std::move(x));
  return u;
}

void PowerElem::check_index(std::size_t index) const {
  if (index == 0 || index > ambient_) {
    throw std::out_of_range("component " + std::to_string(index) + " outside [1, " +
                            std::to_string(ambient_) + "]");
  }
}

HeisElem PowerElem::at(std::size_t index) const {
  check_index(index);
  auto it = components_.find(index);
  return it == components_.end() ? HeisElem::identity() : it->second;
}

void PowerElem::set(std::size_t index, HeisElem x) {
  check_index(index);
  if (x.is_identity()) {
    components_.erase(index);
  } else {
    components_.insert_or_assign(index, std::move(x));
  }
}

void PowerElem::multiply_component(std::size_t index, HeisElem const &x) {
  set(index, at(index) * x);
}

PowerElem operator*(PowerElem const &u, PowerElem const &v) {
  if (u.ambient() != v.ambient()) {
    throw std::invalid_argument("ambient mismatch: H^" + std::to_string(u.ambient()) +
                                " vs H^" + std::to_string(v.ambient()));
  }
  PowerElem out = u;
  for (auto const &[index, x] : v.components()) {
    out.multiply_component(index, x);
  }
  return out;
}

PowerElem inverse(PowerElem const &u) {
  PowerElem out(u.ambient());
  for (auto const &[index, x] : u.components()) {
    out.set(index, inverse(x));
  }
  return out;
}

PowerElem power(PowerElem const &u, Integer const &k) {
  PowerElem out(u.ambient());
  for (auto const &[index, x] : u.components()) {
    out.set(index, power(x, k));
  }
  return out;
}

std::string render(PowerElem const &u) {
  if (u.is_identity()) {
    return "1\n";
  }
  std::ostringstream out;
  for (auto const &[index, x] : u.components()) {
    out << "comp " << index << ": " << render(x) << '\n';
  }
  return out.str();
}

}  // namespace heisred
