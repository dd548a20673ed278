#ifndef GSBASIS_RATIONAL_HPP
#define GSBASIS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gsb {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace gsb

#endif  // GSBASIS_RATIONAL_HPP
