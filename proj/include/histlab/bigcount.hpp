#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace histlab {

// Exact arbitrary-precision count. Spanning-tree counts overflow 64-bit
// integers already for modest inputs, so every count in this library is
// carried as a BigCount and serialized as a decimal string.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(BigCount base, unsigned exp) {
  BigCount out = 1;
  while (exp > 0) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

}  // namespace histlab
