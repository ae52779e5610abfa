#pragma once

#include <boost/rational.hpp>

#include <string>

namespace mqm {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

} // namespace mqm
