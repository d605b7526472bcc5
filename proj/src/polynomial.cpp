#include "heisred/polynomial.hpp"

namespace heisred {

unsigned degree(PowerProduct const &p) {
  unsigned total = 0;
  for (auto const &[name, exponent] : p) {
    total += exponent;
  }
  return total;
}

bool grlex_before(PowerProduct const &x, PowerProduct const &y) {
  unsigned dx = degree(x);
  unsigned dy = degree(y);
  if (dx != dy) {
    return dx > dy;
  }
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() && iy != y.end()) {
    if (ix->first != iy->first) {
      // The product mentioning the earlier variable has the larger exponent there.
      return ix->first < iy->first;
    }
    if (ix->second != iy->second) {
      return ix->second > iy->second;
    }
    ++ix;
    ++iy;
  }
  return ix != x.end() && iy == y.end();
}

Polynomial Polynomial::constant(Integer value) {
  Polynomial p;
  p.add_term({}, value);
  return p;
}

Polynomial Polynomial::variable(std::string const &name) {
  Polynomial p;
  p.add_term({{name, 1u}}, 1);
  return p;
}

Integer Polynomial::constant_term() const {
  auto it = terms_.find(PowerProduct{});
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(PowerProduct const &p, Integer const &coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Polynomial &Polynomial::operator+=(Polynomial const &other) {
  for (auto const &[p, coefficient] : other.terms_) {
    add_term(p, coefficient);
  }
  return *this;
}

Polynomial &Polynomial::operator-=(Polynomial const &other) {
  for (auto const &[p, coefficient] : other.terms_) {
    add_term(p, -coefficient);
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (auto const &[p, coefficient] : terms_) {
    out.terms_.emplace(p, -coefficient);
  }
  return out;
}

Polynomial operator*(Polynomial const &x, Polynomial const &y) {
  Polynomial out;
  for (auto const &[px, cx] : x.terms_) {
    for (auto const &[py, cy] : y.terms_) {
      PowerProduct p = px;
      for (auto const &[name, exponent] : py) {
        p[name] += exponent;
      }
      out.add_term(p, cx * cy);
    }
  }
  return out;
}

Polynomial pow(Polynomial const &base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1u) {
      result = result * square;
    }
    exponent >>= 1;
    if (exponent > 0) {
      square = square * square;
    }
  }
  return result;
}

}  // namespace heisred
