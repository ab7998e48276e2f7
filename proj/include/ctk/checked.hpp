#pragma once

// Overflow-checked integer arithmetic. Every quantity in this project is
// tiny (root coordinates, mutation matrix entries, small determinants), so
// an overflow always means a logic bug; we throw rather than wrap.

#include <stdexcept>
#include <string>

namespace ctk {

// Violated preconditions and broken internal invariants both land here.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(const std::string& msg) {
  throw invariant_error(msg);
}

inline void require(bool cond, const char* msg) {
  if (!cond) fail(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

inline long long ck_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) fail("integer overflow in addition");
  return r;
}

inline long long ck_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) fail("integer overflow in subtraction");
  return r;
}

inline long long ck_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) fail("integer overflow in multiplication");
  return r;
}

inline long long ck_neg(long long a) { return ck_sub(0, a); }

// Exact division: caller asserts divisibility (Bareiss elimination, gcd
// reductions). A remainder means corrupted state.
inline long long ck_div_exact(long long a, long long b) {
  require(b != 0, "division by zero");
  require(a % b == 0, "inexact division");
  return a / b;
}

inline int narrow_int(long long v) {
  require(v >= -2147483647LL && v <= 2147483647LL, "value does not fit in int");
  return static_cast<int>(v);
}

}  // namespace ctk
