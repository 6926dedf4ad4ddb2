// Affine sl(n) weight lattice: fundamental weights, the invariant form,
// Cartan data, and the affine Weyl group pieces used by the bosonic sum.

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace slnq {

// A weight stored as its projected classical part in epsilon coordinates
// (traceless), its level and its delta coefficient.
struct AffineWeight {
  int n = 0;
  std::vector<Rational> classical;
  Rational level;
  Rational delta_coeff;

  static AffineWeight zero(int n) {
    require_rank(n);
    return AffineWeight{n, std::vector<Rational>(static_cast<std::size_t>(n)), 0, 0};
  }

  bool operator==(const AffineWeight&) const = default;

  AffineWeight& operator+=(const AffineWeight& o) {
    check_same_rank(o);
    for (std::size_t a = 0; a < classical.size(); ++a)
      classical[a] += o.classical[a];
    level += o.level;
    delta_coeff += o.delta_coeff;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    check_same_rank(o);
    for (std::size_t a = 0; a < classical.size(); ++a)
      classical[a] -= o.classical[a];
    level -= o.level;
    delta_coeff -= o.delta_coeff;
    return *this;
  }
  AffineWeight& operator*=(const Rational& s) {
    for (auto& x : classical)
      x *= s;
    level *= s;
    delta_coeff *= s;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator*(const Rational& s, AffineWeight a) { return a *= s; }

  bool classical_is_traceless() const {
    Rational s = 0;
    for (const auto& x : classical)
      s += x;
    return s == 0;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t a = 0; a < classical.size(); ++a)
      s += (a ? ", " : "") + slnq::to_string(classical[a]);
    return s + "; level " + slnq::to_string(level) + ", delta " + slnq::to_string(delta_coeff) + ")";
  }

  void check_same_rank(const AffineWeight& o) const {
    if (n != o.n || classical.size() != o.classical.size())
      fail("weights of different rank: " + std::to_string(n) + " vs " + std::to_string(o.n));
  }
};

inline Rational bilinear(const AffineWeight& a, const AffineWeight& b) {
  a.check_same_rank(b);
  Rational s = a.level * b.delta_coeff + a.delta_coeff * b.level;
  for (std::size_t t = 0; t < a.classical.size(); ++t)
    s += a.classical[t] * b.classical[t];
  return s;
}

inline Rational norm2(const AffineWeight& a) { return bilinear(a, a); }

// Lambda_{i mod n}: classical part sum_{a<i} e_a - (i/n)(1,...,1), level 1.
inline AffineWeight fundamental(int n, long long i) {
  require_rank(n);
  long long r = mod(i, n);
  AffineWeight w = AffineWeight::zero(n);
  for (int a = 0; a < n; ++a)
    w.classical[static_cast<std::size_t>(a)] = Rational(a < r ? 1 : 0) - Rational(r, n);
  w.level = 1;
  return w;
}

inline AffineWeight delta(int n) {
  AffineWeight w = AffineWeight::zero(n);
  w.delta_coeff = 1;
  return w;
}

// hat(i) = Lambda_{i+1} - Lambda_i, the projected vector-representation weight.
inline AffineWeight hat(int n, long long i) { return fundamental(n, i + 1) - fundamental(n, i); }

inline AffineWeight rho(int n) {
  AffineWeight w = AffineWeight::zero(n);
  for (int i = 0; i < n; ++i)
    w += fundamental(n, i);
  return w;
}

// alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1} + [i = 0] delta.
inline AffineWeight simple_root(int n, long long i) {
  long long r = mod(i, n);
  AffineWeight w = Rational(2) * fundamental(n, r) - fundamental(n, r - 1) - fundamental(n, r + 1);
  if (r == 0)
    w += delta(n);
  return w;
}

// Level-0 weight with the given classical epsilon coordinates.
inline AffineWeight classical_weight(int n, std::vector<Rational> coords) {
  require_rank(n);
  if (coords.size() != static_cast<std::size_t>(n))
    fail("classical weight needs n coordinates");
  AffineWeight w{n, std::move(coords), 0, 0};
  if (!w.classical_is_traceless())
    fail("classical weight coordinates must sum to zero");
  return w;
}

// Solves sum_i x_i hat(i) = classical part of lam with sum x_i = N.
// Since hat(i) = e_i - (1/n)(1,...,1), x_i = lam_i + N/n.
inline std::optional<std::vector<long long>> decompose_over_hats(const AffineWeight& lam, long long N) {
  if (lam.level != 0)
    fail("decompose_over_hats needs a level-0 weight");
  std::vector<long long> x;
  x.reserve(lam.classical.size());
  Rational shift(N, lam.n);
  for (const auto& c : lam.classical) {
    Rational v = c + shift;
    if (!is_integer(v))
      return std::nullopt;
    x.push_back(v.numerator());
  }
  return x;
}

// Root-lattice element sum_a beta_a e_a with integer beta summing to zero.
inline AffineWeight root_lattice_weight(int n, const std::vector<long long>& beta) {
  if (beta.size() != static_cast<std::size_t>(n))
    fail("root lattice element needs n coordinates");
  if (std::accumulate(beta.begin(), beta.end(), 0LL) != 0)
    fail("root lattice coordinates must sum to zero");
  AffineWeight w = AffineWeight::zero(n);
  for (int a = 0; a < n; ++a)
    w.classical[static_cast<std::size_t>(a)] = beta[static_cast<std::size_t>(a)];
  return w;
}

// t_beta(lam) = lam + k beta - ((lam|beta) + k |beta|^2 / 2) delta, k = level(lam).
inline AffineWeight translation(const AffineWeight& beta, const AffineWeight& lam) {
  if (beta.level != 0 || beta.delta_coeff != 0)
    fail("translation vector must be classical");
  for (const auto& c : beta.classical)
    if (!is_integer(c))
      fail("translation vector must lie in the root lattice");
  if (!beta.classical_is_traceless())
    fail("translation vector must lie in the root lattice");
  AffineWeight r = lam + lam.level * beta;
  r.delta_coeff -= bilinear(lam, beta) + lam.level * norm2(beta) / 2;
  return r;
}

inline void require_permutation(const std::vector<int>& perm, int n) {
  if (perm.size() != static_cast<std::size_t>(n))
    fail("permutation size differs from n");
  std::vector<bool> seen(perm.size());
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      fail("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

// Coordinate a moves to position perm[a]; level and delta are fixed.
inline AffineWeight finite_weyl_apply(const std::vector<int>& perm, const AffineWeight& lam) {
  require_permutation(perm, lam.n);
  AffineWeight r = lam;
  for (std::size_t a = 0; a < perm.size(); ++a)
    r.classical[static_cast<std::size_t>(perm[a])] = lam.classical[a];
  return r;
}

// det of the finite Weyl element, i.e. the sign of the permutation.
inline int permutation_sign(const std::vector<int>& perm) {
  std::vector<int> p = perm;
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      s = -s;
    }
  return s;
}

// Cartan matrix of sl(n) and its inverse, both (n-1) x (n-1), 1-based in
// the usual sense (entry [a][b] stands for indices a+1, b+1).
struct CartanData {
  int n = 0;
  std::vector<std::vector<long long>> C;
  std::vector<std::vector<Rational>> Cinv;

  explicit CartanData(int rank) : n(rank) {
    require_rank(rank);
    const int d = n - 1;
    C.assign(d, std::vector<long long>(d, 0));
    Cinv.assign(d, std::vector<Rational>(d));
    for (int a = 0; a < d; ++a) {
      C[a][a] = 2;
      if (a > 0)
        C[a][a - 1] = -1;
      if (a + 1 < d)
        C[a][a + 1] = -1;
      for (int b = 0; b < d; ++b) {
        int i = a + 1, j = b + 1;
        Cinv[a][b] = i <= j ? Rational(i * (n - j), n) : Rational(j * (n - i), n);
      }
    }
  }

  int dim() const { return n - 1; }

  // C^{-1} v
  std::vector<Rational> apply_inverse(const std::vector<long long>& v) const {
    std::vector<Rational> r(static_cast<std::size_t>(dim()));
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b)
        r[a] += Cinv[a][b] * v[b];
    return r;
  }

  // u^t C^{-1} v
  Rational inverse_form(const std::vector<long long>& u, const std::vector<long long>& v) const {
    Rational s = 0;
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b)
        s += Cinv[a][b] * u[a] * v[b];
    return s;
  }
};

// Unit vector e_t in (n-1)-space; e_n (and e_0) is the zero vector.
inline std::vector<long long> unit_vector(int n, long long t) {
  std::vector<long long> e(static_cast<std::size_t>(n - 1), 0);
  if (t >= 1 && t <= n - 1)
    e[static_cast<std::size_t>(t - 1)] = 1;
  return e;
}

}  // namespace slnq
