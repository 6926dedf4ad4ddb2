// Exact polynomials in q with rational exponents and big-integer coefficients,
// plus the q-Pochhammer, Gaussian and q-multinomial builders.

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace slnq {

// Finite sum of c_e q^e. Zero coefficients are never stored, so two
// polynomials are equal iff their term maps are equal.
class QPoly {
 public:
  using Terms = std::map<Rational, BigInt>;

  QPoly() = default;

  static QPoly one() { return monomial(Rational(0)); }
  static QPoly monomial(const Rational& e, const BigInt& c = 1) {
    QPoly p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Rational& e, const BigInt& c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  QPoly& operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& kv : a.terms_)
      kv.second = -kv.second;
    return a;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend QPoly operator*(QPoly a, const BigInt& s) {
    if (s == 0)
      return QPoly();
    for (auto& kv : a.terms_)
      kv.second *= s;
    return a;
  }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  // q^a * P
  QPoly scaled_by_monomial(const Rational& a) const {
    QPoly r;
    for (const auto& [e, c] : terms_)
      r.terms_.emplace_hint(r.terms_.end(), e + a, c);
    return r;
  }

  // Drops every term with exponent > order.
  QPoly truncated(const Rational& order) const {
    QPoly r;
    for (const auto& [e, c] : terms_) {
      if (e > order)
        break;
      r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
  }

  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& kv : terms_)
      s += kv.second;
    return s;
  }

  std::optional<Rational> min_exponent() const {
    if (terms_.empty())
      return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<Rational> max_exponent() const {
    if (terms_.empty())
      return std::nullopt;
    return terms_.rbegin()->first;
  }

  bool has_integer_exponents() const {
    for (const auto& kv : terms_)
      if (!is_integer(kv.first))
        return false;
    return true;
  }

  bool has_nonnegative_coefficients() const {
    for (const auto& kv : terms_)
      if (kv.second < 0)
        return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1)
        os << mag;
      os << "q";
      if (e != 1) {
        if (is_integer(e) && e > 0)
          os << "^" << e.numerator();
        else
          os << "^(" << slnq::to_string(e) << ")";
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

// If a == q^x * b for a single rational x, returns x.
inline std::optional<Rational> monomial_ratio(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size() || a.is_zero())
    return std::nullopt;
  Rational shift = *a.min_exponent() - *b.min_exponent();
  if (b.scaled_by_monomial(shift) == a)
    return shift;
  return std::nullopt;
}

namespace detail {

using Dense = std::vector<BigInt>;

inline Dense to_dense(const QPoly& p, const char* what) {
  Dense d;
  for (const auto& [e, c] : p.terms()) {
    if (!is_integer(e) || e < 0)
      internal_error(std::string(what) + ": exact division needs nonnegative integer exponents");
    auto idx = static_cast<std::size_t>(e.numerator());
    if (d.size() <= idx)
      d.resize(idx + 1);
    d[idx] = c;
  }
  return d;
}

inline QPoly from_dense(const Dense& d) {
  QPoly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    p.add_term(Rational(static_cast<long long>(i)), d[i]);
  return p;
}

}  // namespace detail

// num / den for polynomials with nonnegative integer exponents. A nonzero
// remainder is an internal error: every caller divides a known multiple.
inline QPoly divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero())
    internal_error("division by the zero polynomial");
  if (num.is_zero())
    return QPoly();
  detail::Dense a = detail::to_dense(num, "numerator");
  detail::Dense b = detail::to_dense(den, "denominator");
  while (!b.empty() && b.back() == 0)
    b.pop_back();
  if (a.size() < b.size())
    internal_error("inexact polynomial division (degree)");
  const std::size_t db = b.size() - 1;
  detail::Dense q(a.size() - db);
  for (std::size_t top = a.size(); top-- > db;) {
    if (a[top] == 0)
      continue;
    if (a[top] % b[db] != 0)
      internal_error("inexact polynomial division (coefficient)");
    BigInt c = a[top] / b[db];
    q[top - db] = c;
    for (std::size_t t = 0; t <= db; ++t)
      a[top - db + t] -= c * b[t];
  }
  for (const auto& r : a)
    if (r != 0)
      internal_error("inexact polynomial division (remainder)");
  return detail::from_dense(q);
}

// (q)_m = prod_{k=1}^m (1 - q^k), (q)_0 = 1.
inline QPoly qpochhammer(long long m) {
  detail::Dense d{1};
  for (long long k = 1; k <= m; ++k) {
    detail::Dense next(d.size() + static_cast<std::size_t>(k));
    for (std::size_t t = 0; t < d.size(); ++t) {
      next[t] += d[t];
      next[t + static_cast<std::size_t>(k)] -= d[t];
    }
    d = std::move(next);
  }
  return detail::from_dense(d);
}

// Gaussian polynomial [N, m] = (q)_N / ((q)_m (q)_{N-m}) for 0 <= m <= N,
// zero otherwise. Memoized; the cache is shared between threads.
inline QPoly gaussian(long long N, long long m) {
  if (m < 0 || m > N)
    return QPoly();
  if (m == 0 || m == N)
    return QPoly::one();
  if (m > N - m)
    m = N - m;
  static std::mutex mu;
  static std::map<std::pair<long long, long long>, QPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({N, m});
    if (it != cache.end())
      return it->second;
  }
  QPoly g = divide_exact(qpochhammer(N), qpochhammer(m) * qpochhammer(N - m));
  std::lock_guard lock(mu);
  cache.emplace(std::pair{N, m}, g);
  return g;
}

// q-multinomial (q)_N / prod (q)_{parts_i}; zero unless every part is
// nonnegative and the parts sum to N. Built as the telescoping product
// [N, p_0][N - p_0, p_1]... of cached Gaussians.
inline QPoly multinomial(long long N, std::span<const long long> parts) {
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0)
      return QPoly();
    sum += p;
  }
  if (sum != N)
    return QPoly();
  QPoly r = QPoly::one();
  long long rest = N;
  for (long long p : parts) {
    if (p != 0 && p != rest)
      r *= gaussian(rest, p);
    rest -= p;
  }
  return r;
}

inline QPoly multinomial(long long N, std::initializer_list<long long> parts) {
  std::vector<long long> v(parts);
  return multinomial(N, std::span<const long long>(v));
}

// Power series of 1/(q)_m with all exponents <= order (order >= 0).
inline QPoly inverse_qpochhammer_series(long long m, long long order) {
  detail::Dense d(static_cast<std::size_t>(order) + 1);
  d[0] = 1;
  for (long long part = 1; part <= m && part <= order; ++part)
    for (long long e = part; e <= order; ++e)
      d[e] += d[e - part];
  return detail::from_dense(d);
}

}  // namespace slnq
