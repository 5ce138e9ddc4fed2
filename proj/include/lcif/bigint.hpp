#pragma once

// Exact arithmetic.  All counting is done in arbitrary precision; no
// floating point anywhere in the engine.

#include <boost/multiprecision/cpp_int.hpp>

namespace lcif {

using BigInt = boost::multiprecision::cpp_int;

// binom(a, b): 0 when b < 0 or a < b; 1 when b = 0 and a >= 0.
inline BigInt binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  BigInt v = 1;
  for (long long i = 1; i <= b; ++i) {
    v *= (a - b + i);
    v /= i;
  }
  return v;
}

inline BigInt factorial(int k) {
  BigInt v = 1;
  for (int i = 2; i <= k; ++i) v *= i;
  return v;
}

}  // namespace lcif
