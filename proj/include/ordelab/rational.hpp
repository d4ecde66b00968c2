#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordelab {

// Exact arithmetic everywhere: piecewise-linear data squares denominators fast,
// so fixed-width integers are not an option.
using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + std::string(s) + "'");
  }
}

}  // namespace ordelab
