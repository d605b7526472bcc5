#include "heisred/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace heisred {

Integer parse_integer(std::string_view text) {
  std::size_t digits_from = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (digits_from == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(body, 10);
}

std::int64_t to_int64(Integer const &x) {
  if (!fits_int64(x)) {
    throw std::overflow_error("integer does not fit in 64 bits: " + to_string(x));
  }
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(x.get_si());
  } else {
    return std::stoll(to_string(x));
  }
}

}  // namespace heisred
