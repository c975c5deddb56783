#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace treextremal {

/// Exact nonnegative subtree count. Never converted to floating point.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(unsigned exponent) {
  BigCount r = 1;
  r <<= exponent;
  return r;
}

inline std::string to_decimal(const BigCount& c) { return c.str(); }

}  // namespace treextremal
