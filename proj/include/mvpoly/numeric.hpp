#pragma once

// Small exact-integer helpers and the error hierarchy shared by every module.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvpoly {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Base class for recoverable input errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class EdgeInequalityViolation : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when two independent derivations of the same quantity disagree.
// Always an implementation bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitExceeded("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw LimitExceeded("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitExceeded("integer overflow in multiplication");
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s = checked_add(s, checked_mul(a[k], b[k]));
  return s;
}

// Divide by the gcd of the entries so the vector is primitive. Zero stays zero.
inline void make_primitive(IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline bool is_zero(const IntVec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

std::string to_string(const IntVec& v, const char* sep = ",");

}  // namespace mvpoly
