#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace heisred {

using Integer = mpz_class;

inline std::string to_string(Integer const &x) { return x.get_str(10); }

/// Parses an optionally signed decimal literal. Throws std::invalid_argument
/// on anything else (no whitespace, no base prefixes).
Integer parse_integer(std::string_view text);

inline Integer abs(Integer const &x) { return ::abs(x); }

inline Integer max(Integer const &x, Integer const &y) { return x < y ? y : x; }

/// True iff x fits in a signed 64-bit integer.
inline bool fits_int64(Integer const &x) {
  static Integer const lo = Integer("-9223372036854775808");
  static Integer const hi = Integer("9223372036854775807");
  return lo <= x && x <= hi;
}

std::int64_t to_int64(Integer const &x);

inline Integer from_int64(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through the string
  // form only when long is narrower than 64 bits.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return Integer(static_cast<long>(v));
  } else {
    return Integer(std::to_string(v));
  }
}

}  // namespace heisred
