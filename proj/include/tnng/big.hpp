#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tnng {

// Exact integers and rationals; counts must never silently overflow.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

// C(n, k) as an exact integer; 0 outside the valid range.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace tnng
