#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace deplen {

// Exact arithmetic for null-model quantities and bounds. Desk-scale n keeps
// every numerator and denominator far inside 64 bits.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace deplen
