#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "quiver/error.hpp"

namespace quiv {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer addition overflow");
  return r;
}

inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer subtraction overflow");
  return r;
}

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer multiplication overflow");
  return r;
}

inline i64 narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(Errc::Overflow, "value does not fit in 64 bits");
  return static_cast<i64>(v);
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i)
    r = mul(r, b);
  return r;
}

// (prime, exponent) pairs by trial division, ascending primes.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(i64 n) {
  if (n < 2)
    return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

// 1 is not a prime power here.
inline bool is_prime_power(i64 n) { return n > 1 && factorize(n).size() == 1; }

} // namespace quiv
