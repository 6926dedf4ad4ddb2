// Interpolating matrices and K-graphs: the dictionary with integer
// sequences, admissibility, node counts, brute-force F_L and rendering.

#pragma once

#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paths.hpp"

namespace slnq {

// One plain/cliff pair of the profile: width w_t then height h_t.
struct Column {
  long long width = 0;
  long long height = 0;
  bool operator==(const Column&) const = default;
  auto operator<=>(const Column&) const = default;
};

struct InterpolatingMatrix {
  int n = 0;
  std::vector<Column> columns;

  bool operator==(const InterpolatingMatrix&) const = default;
  auto operator<=>(const InterpolatingMatrix&) const = default;

  std::size_t size() const { return columns.size(); }
  bool empty() const { return columns.empty(); }
  long long total_width() const {
    long long s = 0;
    for (const auto& c : columns)
      s += c.width;
    return s;
  }
  long long total_height() const {
    long long s = 0;
    for (const auto& c : columns)
      s += c.height;
    return s;
  }
  // h_t with h_0 = n; t is 1-based.
  long long h(std::size_t t) const { return t == 0 ? n : columns[t - 1].height; }
  long long w(std::size_t t) const { return columns[t - 1].width; }
};

struct KGraph {
  InterpolatingMatrix matrix;
  int L = 0;
  int k = 0;

  bool operator==(const KGraph&) const = default;
  auto operator<=>(const KGraph&) const = default;

  int n() const { return matrix.n; }
  const std::vector<Column>& columns() const { return matrix.columns; }
};

struct DomainWall {
  int position = 0;
  int height = 0;
  bool operator==(const DomainWall&) const = default;
};

// Wall at l iff mu_l - mu_{l-1} = h + 1 mod n with 0 < h < n.
inline std::vector<DomainWall> domain_walls(int n, const IntegerSequence& seq) {
  std::vector<DomainWall> out;
  for (std::size_t l = 1; l < seq.size(); ++l) {
    int h = static_cast<int>(mod(seq[l] - seq[l - 1] - 1, n));
    if (h != 0)
      out.push_back({static_cast<int>(l), h});
  }
  return out;
}

inline InterpolatingMatrix matrix_from_sequence(int n, const IntegerSequence& seq) {
  InterpolatingMatrix m{n, {}};
  int last = 0;
  for (const auto& wall : domain_walls(n, seq)) {
    m.columns.push_back({wall.position - last, wall.height});
    last = wall.position;
  }
  return m;
}

inline InterpolatingMatrix matrix_from_path(const Path& p) { return matrix_from_sequence(p.space.n, p.seq); }

// Reads (start, start+1, ...) mod n keeping w_1 entries, skipping h_1,
// keeping w_2, ..., and finally keeping entries up to length L+1.
inline IntegerSequence sequence_from_matrix(const InterpolatingMatrix& m, int L, long long start) {
  if (m.total_width() > L)
    fail("matrix is wider than the length budget");
  IntegerSequence seq;
  seq.reserve(static_cast<std::size_t>(L) + 1);
  long long src = start;
  for (const auto& c : m.columns) {
    for (long long t = 0; t < c.width; ++t)
      seq.push_back(static_cast<int>(mod(src++, m.n)));
    src += c.height;
  }
  while (seq.size() < static_cast<std::size_t>(L) + 1)
    seq.push_back(static_cast<int>(mod(src++, m.n)));
  return seq;
}

// The sequence of G viewed in the class (Lambda_i + Lambda_j, Lambda_k).
inline IntegerSequence sequence_from_graph(const KGraph& g, long long i = 0, long long j = 0) {
  long long start = i + j - g.k - g.matrix.total_height();
  return sequence_from_matrix(g.matrix, g.L, mod(start, g.n()));
}

struct KCheck {
  bool ok = true;
  std::string violated;  // "shape", "K1", "K2" or "K3"
  std::string message;
  explicit operator bool() const { return ok; }
};

inline KCheck check_K_conditions(const KGraph& g) {
  const auto& m = g.matrix;
  const int n = m.n;
  for (std::size_t t = 1; t <= m.size(); ++t) {
    if (m.h(t) <= 0 || m.h(t) >= n)
      return {false, "shape", "height h_" + std::to_string(t) + " outside (0, n)"};
    if (m.w(t) < 1)
      return {false, "shape", "width w_" + std::to_string(t) + " < 1"};
  }
  if (m.total_width() > g.L)
    return {false, "K1", "W = " + std::to_string(m.total_width()) + " exceeds L = " + std::to_string(g.L)};
  if (mod(m.total_height() + g.k, n) != 0)
    return {false, "K2", "H + k = " + std::to_string(m.total_height() + g.k) + " is not divisible by n"};
  for (std::size_t t = 1; t <= m.size(); ++t) {
    long long s = m.h(t - 1) + m.w(t) + m.h(t);
    if (mod(s, n) != 0)
      return {false, "K3", "h_" + std::to_string(t - 1) + " + w_" + std::to_string(t) + " + h_" +
                                std::to_string(t) + " = " + std::to_string(s) + " is not divisible by n"};
  }
  return {};
}

inline bool is_admissible(const KGraph& g) { return check_K_conditions(g).ok; }

// Column heights left to right: w_t copies of h_t + ... + h_N.
inline std::vector<long long> column_heights(const InterpolatingMatrix& m) {
  std::vector<long long> out;
  long long suffix = m.total_height();
  for (const auto& c : m.columns) {
    for (long long t = 0; t < c.width; ++t)
      out.push_back(suffix);
    suffix -= c.height;
  }
  return out;
}

inline long long node_count(const InterpolatingMatrix& m) {
  long long area = 0, suffix = m.total_height();
  for (const auto& c : m.columns) {
    area += c.width * suffix;
    suffix -= c.height;
  }
  return area;
}
inline long long node_count(const KGraph& g) { return node_count(g.matrix); }

// Sum of m_l where (Lambda_k + Lambda_{i+j-k}) - wt(p) = sum m_l alpha_l,
// read off as m_l = (Lambda_l | difference).
inline long long node_count_via_weights(const Path& p) {
  const int n = p.space.n;
  AffineWeight diff = fundamental(n, p.space.k) + fundamental(n, p.space.offset()) - weight_of_path(p);
  long long total = 0;
  for (int l = 0; l < n; ++l)
    total += as_integer(bilinear(fundamental(n, l), diff), "root coefficient m_l");
  return total;
}

inline KGraph graph_from_path(const Path& p) { return KGraph{matrix_from_path(p), p.space.L, p.space.k}; }

// All K-graphs of G_L(Lambda_i + Lambda_j, Lambda_k), in path order.
inline std::vector<KGraph> enumerate_graphs(int n, int L, long long k, long long i = 0, long long j = 0) {
  PathSpace sp(n, L, i, j, k);
  std::vector<KGraph> out;
  for_each_path(sp, [&](const IntegerSequence& s) { out.push_back(KGraph{matrix_from_sequence(n, s), L, sp.k}); });
  return out;
}

// sum over the class of q^{|G|/n}
inline QPoly brute_F(int n, int L, long long i, long long j, long long k) {
  PathSpace sp(n, L, i, j, k);
  std::map<long long, BigInt> hist;
  for_each_path(sp, [&](const IntegerSequence& s) { hist[node_count(matrix_from_sequence(n, s))] += 1; });
  QPoly r;
  for (const auto& [a, c] : hist)
    r.add_term(Rational(a, n), c);
  return r;
}

struct ClassIndices {
  int i = 0, j = 0, k = 0;
  bool operator==(const ClassIndices&) const = default;
};

inline ClassIndices dynkin_rotate(int n, ClassIndices c, long long s) {
  return {static_cast<int>(mod(c.i + s, n)), static_cast<int>(mod(c.j + s, n)), static_cast<int>(mod(c.k + s, n))};
}

// Injects G from class (Lambda_0 + Lambda_j, Lambda_k) at length L into
// class (2 Lambda_0, Lambda_k) at length L + j by placing a width-j block
// of height H' in front, H' in {H, H + n - j} with H' + k = 0 mod n.
inline KGraph embed_graph(const KGraph& g, int j) {
  const int n = g.n();
  if (j < 0 || j >= n)
    fail("embed_graph: j must lie in 0..n-1");
  if (j == 0)
    return g;
  KGraph out{g.matrix, g.L + j, g.k};
  long long H = g.matrix.total_height();
  if (mod(H + g.k, n) == 0) {
    if (!out.matrix.columns.empty())
      out.matrix.columns.front().width += j;
  } else if (mod(H + n - j + g.k, n) == 0) {
    out.matrix.columns.insert(out.matrix.columns.begin(), Column{j, n - j});
  } else {
    fail("embed_graph: graph is not in class (L0 + L" + std::to_string(j) + ", L" + std::to_string(g.k) + ")");
  }
  return out;
}

// Width of the lowest plain; the empty graph counts as unbounded.
inline long long lowest_plain_width(const KGraph& g) {
  return g.matrix.empty() ? std::numeric_limits<long long>::max() : g.matrix.columns.front().width;
}

// Rows of '#' top to bottom, one character per node column, followed by
// the cliff list. Format is documented in the README.
inline std::string render_ascii(const KGraph& g) {
  std::ostringstream os;
  const auto& m = g.matrix;
  os << "n=" << g.n() << " L=" << g.L << " k=" << g.k << " N=" << m.size() << " W=" << m.total_width()
     << " H=" << m.total_height() << " nodes=" << node_count(m) << "\n";
  if (m.empty()) {
    os << "(empty)\n";
    return os.str();
  }
  os << "w:";
  for (const auto& c : m.columns)
    os << " " << c.width;
  os << "\nh:";
  for (const auto& c : m.columns)
    os << " " << c.height;
  os << "\n";
  auto heights = column_heights(m);
  for (long long row = m.total_height(); row >= 1; --row) {
    for (long long x : heights)
      os << (x >= row ? '#' : '.');
    os << "\n";
  }
  os << "cliffs:";
  long long x = 0;
  for (const auto& c : m.columns) {
    x += c.width;
    os << " x=" << x << ":h=" << c.height;
  }
  os << "\n";
  return os.str();
}

}  // namespace slnq
