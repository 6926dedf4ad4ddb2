// Shared scalar types and error helpers.

#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

// boost::rational's mixed comparison templates recurse forever under the
// C++20 reversed-operator rules; exact overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long long>& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace slnq {

using Rational = boost::rational<long long>;
using BigInt = boost::multiprecision::cpp_int;

// Raised when a caller breaks a documented precondition.
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an invariant that should hold by construction is broken.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw ContractViolation(msg); }

[[noreturn]] inline void internal_error(const std::string& msg) {
  throw InternalError("internal error: " + msg);
}

// Least nonnegative residue.
inline long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0)
    --q;
  return q;
}

inline long long ceil_of(const Rational& r) { return -floor_of(-r); }

inline long long as_integer(const Rational& r, const char* what) {
  if (!is_integer(r))
    internal_error(std::string(what) + " is not integral");
  return r.numerator();
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline void require_rank(int n) {
  if (n < 2)
    fail("rank parameter n must be >= 2, got " + std::to_string(n));
}

}  // namespace slnq
