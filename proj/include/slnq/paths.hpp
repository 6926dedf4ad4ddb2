// Paths on level-2 dominant weights, their integer sequences, the energy
// statistic and the brute-force generating function B_L.

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qpoly.hpp"
#include "weights.hpp"

namespace slnq {

// Lambda_i + Lambda_j with 0 <= i <= j <= n-1.
struct Level2Weight {
  int n = 0;
  int i = 0;
  int j = 0;

  Level2Weight() = default;
  Level2Weight(int rank, long long a, long long b) : n(rank) {
    require_rank(rank);
    int x = static_cast<int>(mod(a, rank)), y = static_cast<int>(mod(b, rank));
    i = std::min(x, y);
    j = std::max(x, y);
  }

  bool operator==(const Level2Weight&) const = default;
  auto operator<=>(const Level2Weight&) const = default;

  AffineWeight weight() const { return fundamental(n, i) + fundamental(n, j); }
  bool contains(int mu) const { return mu == i || mu == j; }

  // lambda + hat(mu); mu must be one of the two indices.
  Level2Weight step(int mu) const {
    if (mu == i)
      return Level2Weight(n, i + 1, j);
    if (mu == j)
      return Level2Weight(n, i, j + 1);
    fail("step " + std::to_string(mu) + " is not allowed from " + to_string());
  }

  std::string to_string() const {
    if (i == j)
      return "2L" + std::to_string(i);
    return "L" + std::to_string(i) + "+L" + std::to_string(j);
  }
};

// The class P_L(Lambda_i + Lambda_j, Lambda_k).
struct PathSpace {
  int n = 0;
  int L = 0;
  Level2Weight initial;
  int k = 0;

  PathSpace() = default;
  PathSpace(int rank, int length, long long i, long long j, long long boundary)
      : n(rank), L(length), initial(rank, i, j), k(static_cast<int>(mod(boundary, rank))) {
    if (length < 0)
      fail("path length must be >= 0");
  }

  bool operator==(const PathSpace&) const = default;

  // i + j - k mod n, the ground-state offset of the class.
  int offset() const { return static_cast<int>(mod(initial.i + initial.j - k, n)); }
  Level2Weight endpoint() const { return Level2Weight(n, k, offset() + L); }
  int last_entry() const { return static_cast<int>(mod(offset() + L, n)); }
};

using IntegerSequence = std::vector<int>;

// A path stored by its integer sequence (mu_0, ..., mu_L). Step l goes
// lambda_{l+1} = lambda_l + hat(mu_l); mu_L is fixed by the boundary.
struct Path {
  PathSpace space;
  IntegerSequence seq;

  bool operator==(const Path&) const = default;

  int length() const { return space.L; }

  std::vector<Level2Weight> weights() const {
    std::vector<Level2Weight> lam{space.initial};
    lam.reserve(seq.size());
    for (int l = 0; l < space.L; ++l)
      lam.push_back(lam.back().step(seq[static_cast<std::size_t>(l)]));
    return lam;
  }
};

// True iff a pair {a, b} can reach {c, d} in exactly s steps.
inline bool reachable(int n, int a, int b, int c, int d, int s) {
  auto fits = [&](int x0, int y0, int x1, int y1) {
    for (int x = 0; x <= s; ++x)
      if (mod(x0 + x - x1, n) == 0 && mod(y0 + (s - x) - y1, n) == 0)
        return true;
    return false;
  };
  return fits(a, b, c, d) || fits(a, b, d, c);
}

// Depth-first walk over the class in lexicographic order of the sequence.
inline void for_each_path(const PathSpace& sp, const std::function<void(const IntegerSequence&)>& visit) {
  const Level2Weight end = sp.endpoint();
  IntegerSequence seq(static_cast<std::size_t>(sp.L) + 1);
  seq.back() = sp.last_entry();
  std::function<void(const Level2Weight&, int)> rec = [&](const Level2Weight& cur, int l) {
    if (l == sp.L) {
      if (cur == end)
        visit(seq);
      return;
    }
    if (!reachable(sp.n, cur.i, cur.j, end.i, end.j, sp.L - l))
      return;
    seq[static_cast<std::size_t>(l)] = cur.i;
    rec(cur.step(cur.i), l + 1);
    if (cur.j != cur.i) {
      seq[static_cast<std::size_t>(l)] = cur.j;
      rec(cur.step(cur.j), l + 1);
    }
  };
  rec(sp.initial, 0);
}

inline std::vector<Path> enumerate_paths(int n, int L, long long i, long long j, long long k) {
  PathSpace sp(n, L, i, j, k);
  std::vector<Path> out;
  for_each_path(sp, [&](const IntegerSequence& s) { out.push_back(Path{sp, s}); });
  return out;
}

inline IntegerSequence iota(const Path& p) { return p.seq; }

// Inverse of iota: validates the sequence against the class.
inline Path path_from_iota(const PathSpace& sp, const IntegerSequence& seq) {
  if (seq.size() != static_cast<std::size_t>(sp.L) + 1)
    fail("sequence length must be L+1");
  Level2Weight cur = sp.initial;
  for (int l = 0; l < sp.L; ++l) {
    int mu = seq[static_cast<std::size_t>(l)];
    if (!cur.contains(mu))
      fail("entry " + std::to_string(l) + " is not a legal step from " + cur.to_string());
    cur = cur.step(mu);
  }
  if (!(cur == sp.endpoint()))
    fail("sequence does not end at the boundary " + sp.endpoint().to_string());
  if (seq.back() != sp.last_entry())
    fail("last entry must be " + std::to_string(sp.last_entry()));
  return Path{sp, seq};
}

// (Lambda_k + Lambda_{c}, ..., Lambda_k + Lambda_{c+L}) with c = i + j - k.
// Its initial point Lambda_k + Lambda_c may differ from Lambda_i + Lambda_j.
inline Path ground_state_path(int n, int L, long long i, long long j, long long k) {
  PathSpace cls(n, L, i, j, k);
  PathSpace sp(n, L, k, cls.offset(), k);
  IntegerSequence seq(static_cast<std::size_t>(L) + 1);
  for (int l = 0; l <= L; ++l)
    seq[static_cast<std::size_t>(l)] = static_cast<int>(mod(cls.offset() + l, n));
  return Path{sp, seq};
}

inline int step_theta(long long x) { return x >= 0 ? 1 : 0; }

inline long long energy(const Path& p) {
  const int n = p.space.n, c = p.space.offset();
  long long e = 0;
  for (int l = 1; l <= p.space.L; ++l) {
    long long prev = mod(c + l - 1, n), cur = mod(c + l, n);
    e += static_cast<long long>(l) *
         (step_theta(p.seq[static_cast<std::size_t>(l - 1)] - p.seq[static_cast<std::size_t>(l)]) -
          step_theta(prev - cur));
  }
  return e;
}

// wt(p) = Lambda_i + Lambda_j - E(p) delta
inline AffineWeight weight_of_path(const Path& p) {
  AffineWeight w = p.space.initial.weight();
  w.delta_coeff -= energy(p);
  return w;
}

inline QPoly brute_B(int n, int L, long long i, long long j, long long k) {
  PathSpace sp(n, L, i, j, k);
  std::map<long long, BigInt> hist;
  for_each_path(sp, [&](const IntegerSequence& s) { hist[energy(Path{sp, s})] += 1; });
  QPoly r;
  for (const auto& [e, c] : hist)
    r.add_term(Rational(e), c);
  return r;
}

}  // namespace slnq
