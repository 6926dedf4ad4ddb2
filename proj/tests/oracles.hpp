// Slow reference computations used only by the tests. None of them share
// code paths with the library routines they check.

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "slnq/slnq.hpp"

namespace oracle {

using slnq::BigInt;
using slnq::QPoly;
using slnq::Rational;

inline QPoly from_histogram(const std::map<long long, long long>& h) {
  QPoly p;
  for (const auto& [e, c] : h)
    p.add_term(Rational(e), c);
  return p;
}

// Partitions fitting in an m x (N - m) box, counted by size.
inline QPoly gaussian_by_partitions(long long N, long long m) {
  if (m < 0 || m > N)
    return QPoly();
  std::map<long long, long long> h;
  std::vector<long long> parts;
  auto rec = [&](auto&& self, long long cap, long long sum) -> void {
    if (static_cast<long long>(parts.size()) == m) {
      h[sum] += 1;
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      parts.push_back(v);
      self(self, v, sum + v);
      parts.pop_back();
    }
  };
  rec(rec, N - m, 0);
  return from_histogram(h);
}

// Words with multiplicities given by parts, counted by inversions.
inline QPoly multinomial_by_inversions(const std::vector<long long>& parts) {
  std::vector<int> word;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    if (parts[a] < 0)
      return QPoly();
    word.insert(word.end(), static_cast<std::size_t>(parts[a]), static_cast<int>(a));
  }
  std::map<long long, long long> h;
  do {
    long long inv = 0;
    for (std::size_t x = 0; x < word.size(); ++x)
      for (std::size_t y = x + 1; y < word.size(); ++y)
        inv += word[x] > word[y];
    h[inv] += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return from_histogram(h);
}

inline BigInt binomial(long long N, long long m) {
  if (m < 0 || m > N)
    return 0;
  BigInt r = 1;
  for (long long t = 1; t <= m; ++t)
    r = r * (N - m + t) / t;
  return r;
}

// Energy straight from the weights of the path: recover each step mu_l
// from lambda_{l+1} - lambda_l = hat(mu_l) and sum the step functions.
inline long long energy_from_weights(const slnq::Path& p) {
  const int n = p.space.n;
  auto lam = p.weights();
  std::vector<long long> mu;
  for (std::size_t l = 0; l + 1 < lam.size(); ++l) {
    auto diff = lam[l + 1].weight() - lam[l].weight();
    long long found = -1;
    for (int c = 0; c < n; ++c)
      if (diff == slnq::hat(n, c))
        found = c;
    if (found < 0)
      throw std::logic_error("not a path step");
    mu.push_back(found);
  }
  mu.push_back(slnq::mod(p.space.initial.i + p.space.initial.j - p.space.k + p.space.L, n));
  const long long c = p.space.initial.i + p.space.initial.j - p.space.k;
  long long e = 0;
  for (long long l = 1; l <= p.space.L; ++l) {
    long long a = mu[l - 1] - mu[l];
    long long b = slnq::mod(c + l - 1, n) - slnq::mod(c + l, n);
    e += l * ((a >= 0 ? 1 : 0) - (b >= 0 ? 1 : 0));
  }
  return e;
}

// Area under the staircase as the sum of h_t times the x-position of cliff t.
inline long long area_by_cliffs(const slnq::InterpolatingMatrix& m) {
  long long x = 0, a = 0;
  for (const auto& c : m.columns) {
    x += c.width;
    a += c.height * x;
  }
  return a;
}

// Column heights from the integer sequence alone: walk the profile from
// the origin, a kept entry is one step right and a skipped block of
// height h is h steps up; the height over column x is H minus the height
// reached before that step.
inline std::vector<long long> heights_from_sequence(int n, const slnq::IntegerSequence& seq) {
  long long y = 0;
  std::vector<long long> level;
  for (std::size_t l = 1; l < seq.size(); ++l) {
    long long h = slnq::mod(seq[l] - seq[l - 1] - 1, n);
    level.push_back(y);
    y += h;
  }
  // columns up to the last cliff only
  std::vector<long long> out;
  long long last = -1;
  for (std::size_t l = 1; l < seq.size(); ++l)
    if (slnq::mod(seq[l] - seq[l - 1] - 1, n) != 0)
      last = static_cast<long long>(l);
  for (long long x = 0; x < last; ++x)
    out.push_back(y - level[static_cast<std::size_t>(x)]);
  return out;
}

// Heights of the columns of a profile, padded with zeros to `width`.
inline std::vector<long long> padded_heights(const slnq::InterpolatingMatrix& m, std::size_t width) {
  auto h = slnq::column_heights(m);
  h.resize(std::max(width, h.size()), 0);
  return h;
}

// The cells of `big` not in `small` must form an (i, c)-component: n
// cells over n - i + 1 consecutive columns sharing one row r. Rows count
// from 1 at the bottom of the profile; the left column covers rows
// r..r+(i-c), the right column rows r-c+1..r and every column in between
// the single cell r.
inline bool is_component_difference(const slnq::InterpolatingMatrix& big, const slnq::InterpolatingMatrix& small,
                                    int i, int c) {
  const int n = big.n;
  std::size_t width = std::max(slnq::column_heights(big).size(), slnq::column_heights(small).size());
  auto hb = padded_heights(big, width), hs = padded_heights(small, width);
  std::vector<std::size_t> cols;
  for (std::size_t x = 0; x < width; ++x) {
    if (hb[x] < hs[x])
      return false;
    if (hb[x] > hs[x])
      cols.push_back(x);
  }
  const std::size_t span = static_cast<std::size_t>(n - i + 1);
  if (cols.size() != span || cols.back() - cols.front() + 1 != span)
    return false;
  // column x holds rows hs+1..hb
  const std::size_t x0 = cols.front(), x1 = cols.back();
  const long long r = hs[x0] + 1;
  if (hb[x0] - hs[x0] != i - c + 1)
    return false;
  if (hb[x1] != r || hb[x1] - hs[x1] != c)
    return false;
  for (std::size_t x = x0 + 1; x < x1; ++x)
    if (hs[x] != r - 1 || hb[x] != r)
      return false;
  return true;
}

// Theta series for n = 2 as a one-dimensional sum: alpha = (a, -a) and
// lambda = (x, -x) give ell |alpha - lambda/ell|^2 / 2 = ell (a - x/ell)^2.
inline QPoly theta_rank2(const Rational& x, long long ell, const Rational& order) {
  QPoly p;
  for (long long a = -100; a <= 100; ++a) {
    Rational d = Rational(a) - x / ell;
    Rational e = d * d * ell;
    if (e <= order)
      p.add_term(e, 1);
  }
  return p;
}

}  // namespace oracle
