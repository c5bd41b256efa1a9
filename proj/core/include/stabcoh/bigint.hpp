#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stabcoh {

/* All counts, dimensions and series coefficients are kept exact.  cpp_int
 * stores small values inline, so desk-scale work stays cheap while the
 * occasional factorial or Weyl-formula product can grow without overflow. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int require_integral(const Rat& value, const char* context) {
  if (denominator(value) != 1)
    throw std::logic_error(std::string(context) + ": expected an integer, got " +
                           value.str());
  return numerator(value);
}

}  // namespace stabcoh
