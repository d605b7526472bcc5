#pragma once

#include <map>
#include <string>

#include "heisred/integer.hpp"

namespace heisred {

/// Variable name -> positive exponent. The empty product is the constant 1.
using PowerProduct = std::map<std::string, unsigned>;

unsigned degree(PowerProduct const &p);

/// Graded lexicographic order, highest degree first; within a degree the
/// product with the larger exponent on the alphabetically first variable
/// comes first. Strict weak ordering suitable for std::sort.
bool grlex_before(PowerProduct const &x, PowerProduct const &y);

/// Sparse multivariate polynomial with integer coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<PowerProduct, Integer>;

  Polynomial() = default;

  static Polynomial constant(Integer value);
  static Polynomial variable(std::string const &name);

  TermMap const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer constant_term() const;

  void add_term(PowerProduct const &p, Integer const &coefficient);

  Polynomial &operator+=(Polynomial const &other);
  Polynomial &operator-=(Polynomial const &other);
  friend Polynomial operator+(Polynomial x, Polynomial const &y) { return x += y; }
  friend Polynomial operator-(Polynomial x, Polynomial const &y) { return x -= y; }
  friend Polynomial operator*(Polynomial const &x, Polynomial const &y);
  Polynomial operator-() const;

  friend bool operator==(Polynomial const &, Polynomial const &) = default;

 private:
  TermMap terms_;
};

Polynomial pow(Polynomial const &base, unsigned exponent);

}  // namespace heisred
