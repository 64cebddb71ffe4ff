#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace coxmorse {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt b = 1;
  for (long i = 1; i <= r; ++i) {
    b *= n - r + i;
    b /= i;
  }
  return b;
}

}  // namespace coxmorse
