// Arbitrary-precision integer/rational aliases used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace clusterkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// -1, 0 or +1.
inline int sign_of(const BigInt& value) { return value.sign(); }

// JSON numbers are limited to 64 bits; refuse to export anything wider.
inline std::int64_t to_int64_checked(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi)
    throw std::range_error("integer does not fit into 64 bits: " + value.str());
  return value.convert_to<std::int64_t>();
}

}  // namespace clusterkit
