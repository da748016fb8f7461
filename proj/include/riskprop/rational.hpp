#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace riskprop {

// Exact arithmetic everywhere; mpq_class keeps values canonical after every
// arithmetic operation.
using Rational = mpq_class;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", an integer, or a terminating decimal such as "-1.25" or
/// "2.5e-3". Anything else throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q" (integers come out as "p/1").
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace riskprop
