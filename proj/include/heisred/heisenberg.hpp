#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "heisred/integer.hpp"

namespace heisred {

/// Element of the integer Heisenberg group H in Mal'cev coordinates, i.e. the
/// unique normal form a^alpha b^beta c^gamma with a = t12, b = t23 and the
/// central commutator c = [b, a] = t13^-1.
///
/// Multiplication follows from b^beta a^alpha = a^alpha b^beta c^(alpha beta):
///
///   (a1, b1, g1) * (a2, b2, g2) = (a1 + a2, b1 + b2, g1 + g2 + b1 a2)
class HeisElem {
 public:
  HeisElem() = default;
  HeisElem(Integer alpha, Integer beta, Integer gamma)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {}
  HeisElem(long alpha, long beta, long gamma)
      : alpha_(alpha), beta_(beta), gamma_(gamma) {}

  static HeisElem identity() { return {}; }
  static HeisElem a() { return {1L, 0L, 0L}; }
  static HeisElem b() { return {0L, 1L, 0L}; }
  static HeisElem c() { return {0L, 0L, 1L}; }

  Integer const &alpha() const { return alpha_; }
  Integer const &beta() const { return beta_; }
  Integer const &gamma() const { return gamma_; }

  bool is_identity() const { return alpha_ == 0 && beta_ == 0 && gamma_ == 0; }
  bool is_central() const { return alpha_ == 0 && beta_ == 0; }

  friend bool operator==(HeisElem const &, HeisElem const &) = default;

 private:
  Integer alpha_{0};
  Integer beta_{0};
  Integer gamma_{0};
};

HeisElem operator*(HeisElem const &x, HeisElem const &y);
HeisElem inverse(HeisElem const &x);

/// k-fold product; negative k uses the inverse. Closed form:
/// (k alpha, k beta, k gamma + k(k-1)/2 alpha beta).
HeisElem power(HeisElem const &x, Integer const &k);

/// [x, y] = x^-1 y^-1 x y. Always central.
HeisElem commutator(HeisElem const &x, HeisElem const &y);

/// "a^2 b c^-3"; exponent 1 is omitted and the identity renders as "1".
std::string render(HeisElem const &x);

/// 3x3 integer matrix, row-major.
struct IntMatrix3 {
  std::array<std::array<Integer, 3>, 3> entries{};

  static IntMatrix3 identity();
  Integer const &operator()(std::size_t row, std::size_t col) const { return entries[row][col]; }
  Integer &operator()(std::size_t row, std::size_t col) { return entries[row][col]; }
  bool is_upper_unitriangular() const;

  friend bool operator==(IntMatrix3 const &, IntMatrix3 const &) = default;
};

IntMatrix3 operator*(IntMatrix3 const &x, IntMatrix3 const &y);

/// Entries (1,2) = alpha, (2,3) = beta, (1,3) = alpha beta - gamma.
IntMatrix3 to_matrix(HeisElem const &x);

/// Inverse of to_matrix. Throws std::invalid_argument unless m is upper
/// unitriangular.
HeisElem from_matrix(IntMatrix3 const &m);

/// Element of the direct power H^n. Components are 1-based and only
/// nontrivial ones are stored.
class PowerElem {
 public:
  using ComponentMap = std::map<std::size_t, HeisElem>;

  explicit PowerElem(std::size_t ambient);

  static PowerElem identity(std::size_t ambient) { return PowerElem(ambient); }
  static PowerElem single(std::size_t ambient, std::size_t index, HeisElem x);

  std::size_t ambient() const { return ambient_; }
  ComponentMap const &components() const { return components_; }
  bool is_identity() const { return components_.empty(); }

  /// Component i, the identity when not stored.
  HeisElem at(std::size_t index) const;

  /// Replaces component i; storing the identity erases it.
  void set(std::size_t index, HeisElem x);

  /// Right-multiplies component i by x in place.
  void multiply_component(std::size_t index, HeisElem const &x);

  friend bool operator==(PowerElem const &, PowerElem const &) = default;

 private:
  void check_index(std::size_t index) const;

  std::size_t ambient_;
  ComponentMap components_;
};

/// Componentwise product. Throws std::invalid_argument on ambient mismatch.
PowerElem operator*(PowerElem const &u, PowerElem const &v);
PowerElem inverse(PowerElem const &u);
PowerElem power(PowerElem const &u, Integer const &k);

/// One "comp i: <elem>" line per stored component; "1" for the identity.
std::string render(PowerElem const &u);

}  // namespace heisred
