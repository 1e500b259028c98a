#pragma once

#include <cstdlib>

#include "quiver/arith.hpp"

namespace quiv {

// Exact rational with 64-bit numerator/denominator and checked arithmetic.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}
  Rational(i64 n, i64 d) { set(n, d); }

  static Rational from128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
  }

  void set(i64 n, i64 d) { *this = from128(n, d); }

  bool is_zero() const { return num == 0; }
  int sign() const { return (num > 0) - (num < 0); }

  friend Rational operator+(Rational a, Rational b) {
    return from128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return from128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0)
      throw Error(Errc::Overflow, "division by zero");
    return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(Rational a, Rational b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
};

} // namespace quiv
