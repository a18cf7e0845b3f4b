#include "sigsurf/rational.hpp"

#include <stdexcept>

namespace sigsurf {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational rational_from_string(std::string_view text) {
  Rational out;
  if (out.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("rational_from_string: bad literal '" + std::string(text) + "'");
  }
  out.canonicalize();
  return out;
}

Integer integer_from_string(std::string_view text) {
  Integer out;
  if (out.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("integer_from_string: bad literal '" + std::string(text) + "'");
  }
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace sigsurf
