#pragma once

// Exact rational numbers over checked long long. Used only for linear
// algebra over Q (representation maps, Hom computations); coordinates stay
// small because all matrices come from reflection functors at rank <= 8.

#include <numeric>

#include "ctk/checked.hpp"

namespace ctk {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, "rational with zero denominator");
    if (den < 0) {
      num = ck_neg(num);
      den = ck_neg(den);
    }
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(ck_add(ck_mul(a.num, b.den), ck_mul(b.num, a.den)),
               ck_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(ck_sub(ck_mul(a.num, b.den), ck_mul(b.num, a.den)),
               ck_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(ck_mul(a.num, b.num), ck_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.num != 0, "rational division by zero");
    return Rat(ck_mul(a.num, b.den), ck_mul(a.den, b.num));
  }
  Rat operator-() const {
    Rat r;
    r.num = ck_neg(num);
    r.den = den;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

}  // namespace ctk
