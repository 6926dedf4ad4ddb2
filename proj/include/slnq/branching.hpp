// Closed forms of the finitized branching functions: the alternating Weyl
// sum B_L, the Gaussian sum F_L, the bridge between them, the polynomial
// identity and the truncated q-series identity with theta functions.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kgraphs.hpp"
#include "qpoly.hpp"
#include "sectors.hpp"
#include "weights.hpp"

namespace slnq {

// How the translation part beta of w = sigma t_beta is enumerated.
struct WeylBox {
  // Negative: per-permutation feasible intervals (the default). Otherwise
  // every beta with |beta_a| <= radius for a < n-1.
  long long radius = -1;
};

// sum_w det(w) q^{|lam - Lambda_{a+L}|^2/2} [L; lam] with
// lam = Lambda_k + Lambda_{a+L} + rho - w(Lambda_i + Lambda_j + rho), a = i+j-k.
inline QPoly weyl_sum(int n, int L, long long i, long long j, long long k, WeylBox box = {}) {
  require_rank(n);
  if (L < 0)
    fail("length must be >= 0");
  const long long a = mod(i + j - k, n);
  const AffineWeight target = fundamental(n, k) + fundamental(n, a + L) + rho(n);
  const AffineWeight start = fundamental(n, i) + fundamental(n, j) + rho(n);
  const AffineWeight top = fundamental(n, a + L);
  const long long lev = n + 2;
  const long long bound = L + n;

  QPoly sum;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> beta(static_cast<std::size_t>(n));

  auto contribute = [&](int sign) {
    AffineWeight lam = target - finite_weyl_apply(perm, translation(root_lattice_weight(n, beta), start));
    if (lam.level != 0)
      internal_error("Weyl sum argument has nonzero level");
    auto parts = decompose_over_hats(lam, L);
    if (!parts)
      return;
    QPoly mult = multinomial(L, std::span<const long long>(*parts));
    if (mult.is_zero())
      return;
    Rational e = norm2(lam - top) / 2;
    sum += mult.scaled_by_monomial(e) * BigInt(sign);
  };

  do {
    const int sign = permutation_sign(perm);
    std::vector<long long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      if (box.radius >= 0) {
        lo[c] = -box.radius;
        hi[c] = box.radius;
        continue;
      }
      // part at position perm[c] = T_{perm c} - S_c - lev beta_c + L/n in [0, L]
      Rational base = target.classical[perm[c]] - start.classical[c] + Rational(L, n);
      lo[c] = ceil_of((base - L) / lev);
      hi[c] = floor_of(base / lev);
      if (lo[c] < -bound || hi[c] > bound)
        internal_error("Weyl translation interval exceeds the box L + n");
    }
    auto rec = [&](auto&& self, int c, long long partial) -> void {
      if (c == n - 1) {
        beta[c] = -partial;
        if (box.radius >= 0 || (beta[c] >= lo[c] && beta[c] <= hi[c]))
          contribute(sign);
        return;
      }
      for (long long b = lo[c]; b <= hi[c]; ++b) {
        beta[c] = b;
        self(self, c + 1, partial + b);
      }
    };
    rec(rec, 0, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// B_L(Lambda_i + Lambda_j, Lambda_k) = q^{-|Lambda_{i+j-k}|^2/2} weyl_sum
inline QPoly bosonic_B(int n, int L, long long i, long long j, long long k, WeylBox box = {}) {
  Rational pre = -norm2(fundamental(n, i + j - k)) / 2;
  return weyl_sum(n, L, i, j, k, box).scaled_by_monomial(pre);
}

// Sum over m >= 0 with k + sum i m_i = 0 mod n of
// q^{m C^{-1} m - m C^{-1} e_{n-j}} prod_i [l_i + m_i, m_i].
inline QPoly fermionic_F(int n, int L, long long j, long long k) {
  require_rank(n);
  if (L < 0)
    fail("length must be >= 0");
  j = mod(j, n);
  k = mod(k, n);
  CartanData cd(n);
  const int d = n - 1;
  long long r = mod(L + j - 2 * k, n);
  if (r == 0)
    r = n;
  // n l_1 = L + n - r + j - 2 sum_b (n - b) m_b, and l_1 >= 0 is needed.
  const long long budget = L + n - r + j;
  const auto ej = unit_vector(n, n - j);
  QPoly sum;
  std::vector<long long> m(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int b, long long used) -> void {
    if (b == d) {
      ParentLabel lbl{n, m, static_cast<int>(k)};
      if (!lbl.satisfies_congruence())
        return;
      auto ell = ell_vector(n, L, k, j, m);
      QPoly t = QPoly::monomial(cd.inverse_form(m, m) - cd.inverse_form(m, ej));
      for (int a = 0; a < d && !t.is_zero(); ++a)
        t *= gaussian(ell[a] + m[a], m[a]);
      sum += t;
      return;
    }
    const long long cost = 2 * (n - (b + 1));
    for (long long v = 0; used + cost * v <= budget; ++v) {
      m[b] = v;
      self(self, b + 1, used + cost * v);
    }
    m[b] = 0;
  };
  rec(rec, 0, 0);
  return sum;
}

// F for a general class through the Dynkin rotation i -> 0.
inline QPoly fermionic_F_class(int n, int L, long long i, long long j, long long k) {
  return fermionic_F(n, L, j - i, k - i);
}

// (|Lambda_k|^2 + |Lambda_{j-k}|^2 - |Lambda_j|^2) / 2
inline Rational b_to_f_exponent(int n, long long j, long long k) {
  return (norm2(fundamental(n, k)) + norm2(fundamental(n, j - k)) - norm2(fundamental(n, j))) / 2;
}

inline QPoly b_to_f(int n, long long j, long long k, const QPoly& b) {
  return b.scaled_by_monomial(b_to_f_exponent(n, j, k));
}

enum class Verdict { equal, offset_by_monomial, mismatch };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::offset_by_monomial:
      return "offset-by-monomial";
    default:
      return "mismatch";
  }
}

inline Verdict compare(const QPoly& lhs, const QPoly& rhs, std::optional<Rational>* offset = nullptr) {
  if (lhs == rhs)
    return Verdict::equal;
  if (auto x = monomial_ratio(lhs, rhs)) {
    if (offset)
      *offset = *x;
    return Verdict::offset_by_monomial;
  }
  return Verdict::mismatch;
}

struct IdentityCell {
  int n = 0, L = 0, j = 0, k = 0;
  QPoly lhs;  // fermionic side
  QPoly rhs;  // prefactored Weyl sum
  Verdict verdict = Verdict::mismatch;
  std::optional<Rational> offset;  // lhs = q^offset rhs when verdict is offset
};

inline IdentityCell verify_identity(int n, int L, long long j, long long k) {
  IdentityCell c{n, L, static_cast<int>(mod(j, n)), static_cast<int>(mod(k, n)), {}, {}, Verdict::mismatch, {}};
  c.lhs = fermionic_F(n, L, c.j, c.k);
  Rational pre = (norm2(fundamental(n, c.k)) - norm2(fundamental(n, c.j))) / 2;
  c.rhs = weyl_sum(n, L, 0, c.j, c.k).scaled_by_monomial(pre);
  c.verdict = compare(c.lhs, c.rhs, &c.offset);
  return c;
}

// sum over alpha in the root lattice of q^{ell |alpha - lambda/ell|^2 / 2},
// keeping exponents <= order. lambda is given by n traceless coordinates.
inline QPoly theta_truncated(const std::vector<Rational>& lambda, long long ell, const Rational& order) {
  if (ell <= 0)
    fail("theta level must be positive");
  const int n = static_cast<int>(lambda.size());
  require_rank(n);
  QPoly r;
  if (order < 0)
    return r;
  std::vector<Rational> c;
  for (const auto& x : lambda)
    c.push_back(x / ell);
  // each coordinate obeys |alpha_a - c_a| <= sqrt(2 order / ell)
  long long radius = static_cast<long long>(std::sqrt(static_cast<double>(ceil_of(order * 2 / ell)))) + 2;
  std::vector<long long> alpha(static_cast<std::size_t>(n));
  auto term = [&]() {
    Rational s = 0;
    for (int a = 0; a < n; ++a) {
      Rational v = Rational(alpha[a]) - c[a];
      s += v * v;
    }
    Rational e = s * ell / 2;
    if (e <= order)
      r.add_term(e, 1);
  };
  auto rec = [&](auto&& self, int a, long long partial) -> void {
    if (a == n - 1) {
      alpha[a] = -partial;
      term();
      return;
    }
    for (long long v = floor_of(c[a]) - radius; v <= ceil_of(c[a]) + radius; ++v) {
      alpha[a] = v;
      self(self, a + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
  return r;
}

namespace detail {

// 1/(q)_inf^{p} up to q^{order}
inline QPoly inverse_euler_power(int p, long long order) {
  QPoly r = QPoly::one();
  if (order < 0)
    return QPoly();
  QPoly base = inverse_qpochhammer_series(order, order);
  for (int t = 0; t < p; ++t)
    r = (r * base).truncated(Rational(order));
  return r;
}

// f * g truncated, for g a power series with integer exponents from 0.
inline QPoly times_series_truncated(const QPoly& f, const QPoly& g, const Rational& order) {
  QPoly r;
  for (const auto& [e, c] : f.terms()) {
    if (e > order)
      break;
    for (const auto& [d, cg] : g.terms()) {
      if (e + d > order)
        break;
      r.add_term(e + d, c * cg);
    }
  }
  return r;
}

}  // namespace detail

// q^{(|Lambda_j|^2 - |Lambda_k|^2)/2} sum_m q^{m C^{-1} m - m C^{-1} e_{n-j}} / prod (q)_{m_i}
inline QPoly corollary_lhs(int n, long long j, long long k, long long order) {
  require_rank(n);
  j = mod(j, n);
  k = mod(k, n);
  CartanData cd(n);
  const int d = n - 1;
  const Rational pre = (norm2(fundamental(n, j)) - norm2(fundamental(n, k))) / 2;
  const auto ej = unit_vector(n, n - j);
  const long long box = 2 * order + 2 * n + 4;
  QPoly sum;
  std::vector<long long> m(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int b) -> void {
    if (b == d) {
      ParentLabel lbl{n, m, static_cast<int>(k)};
      if (!lbl.satisfies_congruence())
        return;
      Rational e = pre + cd.inverse_form(m, m) - cd.inverse_form(m, ej);
      if (e > order)
        return;
      if (std::find(m.begin(), m.end(), box) != m.end())
        internal_error("corollary sum reaches the edge of its enumeration box");
      long long depth = floor_of(Rational(order) - e);
      QPoly t = QPoly::one();
      for (int a = 0; a < d; ++a)
        t = (t * inverse_qpochhammer_series(m[a], depth)).truncated(Rational(depth));
      sum += t.scaled_by_monomial(e);
      return;
    }
    for (long long v = 0; v <= box; ++v) {
      m[b] = v;
      self(self, b + 1);
    }
  };
  rec(rec, 0);
  return sum;
}

// q^{|Lj+rho|^2/(2(n+2)) - |Lk+rho|^2/(2(n+1))} / (q)_inf^{n-1}
//   * sum_sigma det(sigma) Theta_{(n+2)(Lk+rho) - (n+1) sigma(Lj+rho), (n+1)(n+2)}
inline QPoly corollary_rhs(int n, long long j, long long k, long long order) {
  require_rank(n);
  const AffineWeight lj = fundamental(n, j) + rho(n), lk = fundamental(n, k) + rho(n);
  auto classical_norm = [](const AffineWeight& w) {
    Rational s = 0;
    for (const auto& x : w.classical)
      s += x * x;
    return s;
  };
  const Rational pre = classical_norm(lj) / (2 * (n + 2)) - classical_norm(lk) / (2 * (n + 1));
  const Rational inner = Rational(order) - pre;
  const long long ell = static_cast<long long>(n + 1) * (n + 2);
  QPoly thetas;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    AffineWeight w = finite_weyl_apply(perm, lj);
    std::vector<Rational> lam(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      lam[a] = Rational(n + 2) * lk.classical[a] - Rational(n + 1) * w.classical[a];
    thetas += theta_truncated(lam, ell, inner) * BigInt(permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (thetas.is_zero())
    return QPoly();
  long long depth = std::max<long long>(0, ceil_of(inner - *thetas.min_exponent()));
  QPoly euler = detail::inverse_euler_power(n - 1, depth);
  return detail::times_series_truncated(thetas, euler, inner).scaled_by_monomial(pre);
}

struct CorollaryResult {
  int n = 0, j = 0, k = 0;
  long long order = 0;
  QPoly lhs, rhs;
  bool series_equal = false;
  bool stabilized = false;
  int stable_length = -1;  // first L with F_L, F_{L+n}, F_{L+2n} agreeing
  QPoly limit;             // prefactored F at the stable length, truncated
  bool limit_matches = false;
  bool ok() const { return series_equal && stabilized && limit_matches; }
};

// Compares both truncated sides, and checks that the prefactored F_L
// stabilize in L (comparing L, L+n and L+2n) to the truncated left side.
inline CorollaryResult corollary_check(int n, long long j, long long k, long long order, int length_ceiling = -1) {
  require_rank(n);
  if (order < 1)
    fail("corollary order must be >= 1");
  CorollaryResult res{n, static_cast<int>(mod(j, n)), static_cast<int>(mod(k, n)), order, {}, {}, false, false, -1,
                      {}, false};
  res.lhs = corollary_lhs(n, res.j, res.k, order);
  res.rhs = corollary_rhs(n, res.j, res.k, order);
  res.series_equal = res.lhs == res.rhs;
  if (length_ceiling < 0)
    length_ceiling = static_cast<int>(n * (order + 4) + 2 * n);
  const Rational pre = (norm2(fundamental(n, res.j)) - norm2(fundamental(n, res.k))) / 2;
  std::map<int, QPoly> cache;
  auto at = [&](int L) -> const QPoly& {
    auto it = cache.find(L);
    if (it == cache.end())
      it = cache.emplace(L, fermionic_F(n, L, res.j, res.k).scaled_by_monomial(pre).truncated(Rational(order))).first;
    return it->second;
  };
  for (int L = 0; L <= length_ceiling; ++L) {
    if (at(L) == at(L + n) && at(L + n) == at(L + 2 * n)) {
      res.stabilized = true;
      res.stable_length = L;
      res.limit = at(L + 2 * n);
      break;
    }
  }
  res.limit_matches = res.stabilized && res.limit == res.lhs;
  return res;
}

}  // namespace slnq
