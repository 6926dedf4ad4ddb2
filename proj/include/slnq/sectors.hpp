// Parents, g-components, candidates and vacancies, the reduction and
// generation algorithms, the l-vector and the per-sector census.
//
// Profile surgery works on the run form of a matrix: R(w_1) U(h_1) R(w_2)
// ... U(h_N). After a move, zero runs are dropped, equal neighbours merged
// and a trailing R run discarded.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgraphs.hpp"
#include "qpoly.hpp"
#include "weights.hpp"

namespace slnq {

struct ParentLabel {
  int n = 0;
  std::vector<long long> m;  // m[i-1] = m_i
  int k = 0;

  bool operator==(const ParentLabel&) const = default;
  auto operator<=>(const ParentLabel&) const = default;

  long long weighted_sum() const {
    long long s = 0;
    for (std::size_t a = 0; a < m.size(); ++a)
      s += static_cast<long long>(a + 1) * m[a];
    return s;
  }
  bool satisfies_congruence() const { return mod(k + weighted_sum(), n) == 0; }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t a = 0; a < m.size(); ++a)
      s += (a ? "," : "") + std::to_string(m[a]);
    return s + ")";
  }
};

// k^{(i)}_1 >= ... >= k^{(i)}_{m_i}, stored as parts[i-1].
struct FillMatrix {
  std::vector<std::vector<long long>> parts;

  bool operator==(const FillMatrix&) const = default;

  static FillMatrix zero(const ParentLabel& lbl) {
    FillMatrix f;
    for (long long mi : lbl.m)
      f.parts.emplace_back(static_cast<std::size_t>(mi), 0);
    return f;
  }
  long long total() const {
    long long s = 0;
    for (const auto& p : parts)
      for (long long x : p)
        s += x;
    return s;
  }
};

// An (i, c)-component: n nodes in n-i+1 columns sharing one row r. With
// rows counted from the bottom of the profile, the left column holds
// i-c+1 nodes from r upwards and the right column c nodes from r down.
struct GComponent {
  int i = 0;
  int c = 0;
  bool operator==(const GComponent&) const = default;
};

struct Candidate {
  int cliff = 0;  // 1-based cliff index j
  int i = 0;
  char kind = 'a';  // 'a', 'b' or 'c'
  GComponent component;
  bool operator==(const Candidate&) const = default;
};

struct Vacancy {
  int cliff = 0;
  int i = 0;
  int kind = 2;  // 1 or 2
  long long anchor = 0;       // x-position of the cliff before attaching
  long long next_anchor = 0;  // where the moved cliff sits afterwards
  GComponent component;
  bool operator==(const Vacancy&) const = default;
};

namespace detail {

struct Run {
  char type;  // 'R' or 'U'
  long long len;
};
using Runs = std::vector<Run>;

inline std::size_t plain_run(int t) { return static_cast<std::size_t>(2 * (t - 1)); }
inline std::size_t cliff_run(int t) { return static_cast<std::size_t>(2 * (t - 1) + 1); }

inline Runs to_runs(const std::vector<Column>& cols) {
  Runs r;
  r.reserve(2 * cols.size());
  for (const auto& c : cols) {
    r.push_back({'R', c.width});
    r.push_back({'U', c.height});
  }
  return r;
}

// Normalizes and converts back; absent if a run is negative or the
// profile does not begin with a plain.
inline std::optional<std::vector<Column>> from_runs(const Runs& runs) {
  Runs out;
  for (const auto& r : runs) {
    if (r.len < 0)
      return std::nullopt;
    if (r.len == 0)
      continue;
    if (!out.empty() && out.back().type == r.type)
      out.back().len += r.len;
    else
      out.push_back(r);
  }
  if (!out.empty() && out.back().type == 'R')
    out.pop_back();
  if (out.empty())
    return std::vector<Column>{};
  if (out.front().type != 'R')
    return std::nullopt;
  std::vector<Column> cols;
  for (std::size_t a = 0; a < out.size(); a += 2)
    cols.push_back({out[a].len, out[a + 1].len});
  return cols;
}

inline std::vector<long long> cliff_positions(const std::vector<Column>& cols) {
  std::vector<long long> xs;
  long long x = 0;
  for (const auto& c : cols)
    xs.push_back(x += c.width);
  return xs;
}

// Candidate shapes by the triple sum, before the R1 filter.
inline std::vector<Candidate> candidate_sites(const InterpolatingMatrix& m) {
  std::vector<Candidate> out;
  const long long n = m.n;
  for (std::size_t j = 1; j <= m.size(); ++j) {
    long long hp = m.h(j - 1), w = m.w(j), h = m.h(j), s = hp + w + h;
    int jj = static_cast<int>(j);
    if (s == n && j >= 2 && m.w(j - 1) > 1)
      out.push_back({jj, static_cast<int>(hp + h), 'a', {static_cast<int>(hp + h), static_cast<int>(h)}});
    else if (s == 2 * n && w > 2 * (n - h))
      out.push_back({jj, static_cast<int>(h), 'b', {static_cast<int>(h), static_cast<int>(h)}});
    else if (s >= 3 * n)
      out.push_back({jj, static_cast<int>(h), 'c', {static_cast<int>(h), static_cast<int>(h)}});
  }
  return out;
}

inline std::optional<std::vector<Column>> remove_surgery(const InterpolatingMatrix& m, const Candidate& c) {
  const int N = static_cast<int>(m.size()), j = c.cliff;
  const long long n = m.n;
  Runs runs = to_runs(m.columns);
  if (c.kind == 'a') {
    runs[plain_run(j - 1)].len -= 1;
    runs[cliff_run(j - 1)].len += 1;
    runs[cliff_run(j)].len -= 1;
    if (j < N)
      runs[plain_run(j + 1)].len += 1;
    return from_runs(runs);
  }
  long long w = m.w(static_cast<std::size_t>(j)), h = m.h(static_cast<std::size_t>(j));
  Runs out(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(plain_run(j)));
  out.push_back({'R', w - (n - h + 1)});
  out.push_back({'U', 1});
  out.push_back({'R', n - h});
  out.push_back({'U', h - 1});
  std::size_t rest = plain_run(j) + 2;
  for (std::size_t a = rest; a < runs.size(); ++a)
    out.push_back(runs[a]);
  if (j < N)
    out[plain_run(j) + 4].len += 1;
  return from_runs(out);
}

// Attaches an (i, 1)-component on top of cliff c of height i.
inline std::optional<std::vector<Column>> attach_second_kind(const InterpolatingMatrix& m, int c) {
  const int N = static_cast<int>(m.size());
  const long long n = m.n, i = m.h(static_cast<std::size_t>(c));
  Runs runs = to_runs(m.columns);
  runs[plain_run(c)].len += 1;
  runs[cliff_run(c)].len -= 1;
  if (c < N)
    runs[plain_run(c + 1)].len -= n - i + 1;
  runs.insert(runs.begin() + static_cast<std::ptrdiff_t>(cliff_run(c)) + 1, {{'R', n - i}, {'U', 1}});
  return from_runs(runs);
}

// Fills the notch at plain j (triple sum n) with an
// (h_{j-1} + h_j, h_j + 1)-component.
inline std::optional<std::vector<Column>> attach_first_kind(const InterpolatingMatrix& m, int j) {
  const int N = static_cast<int>(m.size());
  Runs runs = to_runs(m.columns);
  runs[plain_run(j - 1)].len += 1;
  runs[cliff_run(j - 1)].len -= 1;
  runs[cliff_run(j)].len += 1;
  if (j < N)
    runs[plain_run(j + 1)].len -= 1;
  return from_runs(runs);
}

}  // namespace detail

inline std::vector<Column> parent_columns(int n, const std::vector<long long>& m) {
  std::vector<Column> cols;
  long long hp = n;
  for (long long h = n - 1; h >= 1; --h)
    for (long long t = 0; t < m[static_cast<std::size_t>(h - 1)]; ++t) {
      cols.push_back({2 * n - hp - h, h});
      hp = h;
    }
  return cols;
}

inline void check_label(const ParentLabel& lbl) {
  require_rank(lbl.n);
  if (lbl.m.size() != static_cast<std::size_t>(lbl.n - 1))
    fail("parent label needs n-1 entries");
  for (long long x : lbl.m)
    if (x < 0)
      fail("parent label entries must be nonnegative");
  if (!lbl.satisfies_congruence())
    fail("parent label " + lbl.to_string() + " violates k + sum i m_i = 0 mod n");
}

// Heights grouped weakly decreasing and every triple sum equal to 2n.
inline std::optional<ParentLabel> is_parent(const KGraph& g) {
  const auto& mx = g.matrix;
  const int n = mx.n;
  ParentLabel lbl{n, std::vector<long long>(static_cast<std::size_t>(n - 1), 0), g.k};
  long long prev = n - 1;
  for (std::size_t t = 1; t <= mx.size(); ++t) {
    long long h = mx.h(t);
    if (h <= 0 || h >= n || mx.h(t - 1) + mx.w(t) + h != 2 * n || h > prev)
      return std::nullopt;
    prev = h;
    lbl.m[static_cast<std::size_t>(h - 1)] += 1;
  }
  if (!lbl.satisfies_congruence())
    return std::nullopt;
  return lbl;
}

inline KGraph parent_from_label(const ParentLabel& lbl, int L) {
  check_label(lbl);
  KGraph g{InterpolatingMatrix{lbl.n, parent_columns(lbl.n, lbl.m)}, L, lbl.k};
  if (g.matrix.total_width() > L)
    fail("parent " + lbl.to_string() + " has W = " + std::to_string(g.matrix.total_width()) + " > L = " +
         std::to_string(L));
  return g;
}

// n m^t C^{-1} m
inline long long parent_node_count(const ParentLabel& lbl) {
  check_label(lbl);
  CartanData cd(lbl.n);
  return as_integer(Rational(lbl.n) * cd.inverse_form(lbl.m, lbl.m), "parent node count");
}

// Removable i-components in scan order (cliffs bottom to top), keeping
// only those whose removal leaves an admissible graph.
inline std::vector<Candidate> find_candidates(const KGraph& g, int i) {
  std::vector<Candidate> out;
  for (const auto& c : detail::candidate_sites(g.matrix)) {
    if (c.i != i)
      continue;
    auto cols = detail::remove_surgery(g.matrix, c);
    if (cols && is_admissible(KGraph{{g.n(), *cols}, g.L, g.k}))
      out.push_back(c);
  }
  return out;
}

inline std::optional<Candidate> leading_candidate(const KGraph& g, int i) {
  auto cs = find_candidates(g, i);
  if (cs.empty())
    return std::nullopt;
  return cs.front();
}

inline KGraph remove_component(const KGraph& g, const Candidate& c) {
  auto cs = find_candidates(g, c.i);
  if (std::find(cs.begin(), cs.end(), c) == cs.end())
    fail("remove_component: not an " + std::to_string(c.i) + "-candidate at cliff " + std::to_string(c.cliff));
  KGraph out{{g.n(), *detail::remove_surgery(g.matrix, c)}, g.L, g.k};
  if (node_count(out) != node_count(g) - g.n())
    internal_error("removal did not take away n nodes");
  return out;
}

namespace detail {

inline bool creates_higher_candidate(const KGraph& g, int i) {
  for (int ip = i + 1; ip < g.n(); ++ip)
    if (!find_candidates(g, ip).empty())
      return true;
  return false;
}

struct VacancyHit {
  Vacancy v;
  KGraph result;
};

// Every i-vacancy together with the graph obtained by attaching there.
inline std::vector<VacancyHit> vacancy_hits(const KGraph& g, int i) {
  std::vector<VacancyHit> out;
  const auto& m = g.matrix;
  const long long n = m.n;
  auto xs = cliff_positions(m.columns);
  auto accept = [&](const std::optional<std::vector<Column>>& cols) -> std::optional<KGraph> {
    if (!cols)
      return std::nullopt;
    KGraph r{{g.n(), *cols}, g.L, g.k};
    if (!is_admissible(r) || creates_higher_candidate(r, i))
      return std::nullopt;
    return r;
  };
  for (std::size_t c = 1; c <= m.size(); ++c) {
    long long h = m.h(c), hp = m.h(c - 1);
    int ci = static_cast<int>(c);
    long long x = xs[c - 1];
    if (h == i) {
      if (auto r = accept(attach_second_kind(m, ci)))
        out.push_back({{ci, i, 2, x, x + n - i + 1, {i, 1}}, *r});
    } else if (c >= 2 && hp + m.w(c) + h == n && hp + h == i) {
      if (auto r = accept(attach_first_kind(m, ci)))
        out.push_back({{ci, i, 1, x, x + 1, {i, static_cast<int>(h + 1)}}, *r});
    }
  }
  return out;
}

}  // namespace detail

// i-vacancies: attachment sites whose result is admissible (A1) and has
// no i'-candidate with i' > i (A2).
inline std::vector<Vacancy> find_vacancies(const KGraph& g, int i) {
  std::vector<Vacancy> out;
  for (auto& hit : detail::vacancy_hits(g, i))
    out.push_back(hit.v);
  return out;
}

inline KGraph attach_component(const KGraph& g, const Vacancy& v) {
  for (auto& hit : detail::vacancy_hits(g, v.i))
    if (hit.v == v) {
      if (node_count(hit.result) != node_count(g) + g.n())
        internal_error("attachment did not add n nodes");
      return hit.result;
    }
  fail("attach_component: not an " + std::to_string(v.i) + "-vacancy at cliff " + std::to_string(v.cliff));
}

// l = C^{-1}(L e_{n-1} + e_r + e_{n-j} - 2m), 0 < r <= n, r = L + j - 2k
// mod n, with e_n the zero vector.
inline std::vector<long long> ell_vector(int n, int L, long long k, long long j, const std::vector<long long>& m) {
  require_rank(n);
  CartanData cd(n);
  long long r = mod(L + j - 2 * k, n);
  if (r == 0)
    r = n;
  std::vector<long long> v(static_cast<std::size_t>(n - 1), 0);
  v[static_cast<std::size_t>(n - 2)] += L;
  auto er = unit_vector(n, r), ej = unit_vector(n, n - j);
  for (int a = 0; a < n - 1; ++a)
    v[a] += er[a] + ej[a] - 2 * m[a];
  std::vector<long long> ell;
  for (const auto& x : cd.apply_inverse(v))
    ell.push_back(as_integer(x, "l-vector entry"));
  return ell;
}

// Weakly decreasing sequences of the given length with entries in
// [0, max_part] summing to total (any sum when total < 0).
inline std::vector<std::vector<long long>> partitions_in_box(long long length, long long max_part,
                                                             long long total = -1) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long cap, long long left) -> void {
    if (static_cast<long long>(cur.size()) == length) {
      if (total < 0 || left == 0)
        out.push_back(cur);
      return;
    }
    for (long long v = cap; v >= 0; --v) {
      if (total >= 0 && v > left)
        continue;
      cur.push_back(v);
      self(self, v, left - v);
      cur.pop_back();
    }
  };
  if (length >= 0 && max_part >= 0)
    rec(rec, max_part, total);
  return out;
}

inline void check_fill(const ParentLabel& lbl, const FillMatrix& ks, const std::vector<long long>& ell) {
  if (ks.parts.size() != lbl.m.size())
    fail("fill matrix needs n-1 rows");
  for (std::size_t a = 0; a < lbl.m.size(); ++a) {
    const auto& p = ks.parts[a];
    if (static_cast<long long>(p.size()) != lbl.m[a])
      fail("fill row " + std::to_string(a + 1) + " must have m_i entries");
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (p[t] < 0 || p[t] > ell[a])
        fail("fill entry outside [0, l_" + std::to_string(a + 1) + "]");
      if (t > 0 && p[t] > p[t - 1])
        fail("fill row " + std::to_string(a + 1) + " is not weakly decreasing");
    }
  }
}

namespace detail {

// Attaches k_j i-components to the j-th i-vacancy for j = 1..m_i. The
// j-th vacancy starts at the (m_i - j + 1)-th i-cliff of the parent and
// each attachment moves it to the first vacancy at or right of the
// moved cliff.
inline std::optional<KGraph> generate_level(KGraph g, const std::vector<Column>& parent, int i,
                                            const std::vector<long long>& kk) {
  auto xs = cliff_positions(parent);
  std::vector<long long> ipos;
  for (std::size_t t = 0; t < parent.size(); ++t)
    if (parent[t].height == i)
      ipos.push_back(xs[t]);
  const std::size_t mi = ipos.size();
  for (std::size_t j = 1; j <= mi; ++j) {
    long long x = ipos[mi - j];
    for (long long rep = 0; rep < kk[j - 1]; ++rep) {
      bool moved = false;
      for (auto& hit : vacancy_hits(g, i))
        if (hit.v.anchor >= x) {
          g = std::move(hit.result);
          x = hit.v.next_anchor;
          moved = true;
          break;
        }
      if (!moved)
        return std::nullopt;
    }
  }
  return g;
}

}  // namespace detail

inline KGraph generate(const ParentLabel& lbl, const FillMatrix& ks, int L) {
  KGraph g = parent_from_label(lbl, L);
  auto ell = ell_vector(lbl.n, L, lbl.k, 0, lbl.m);
  check_fill(lbl, ks, ell);
  const auto parent = g.matrix.columns;
  for (int i = 1; i < lbl.n; ++i) {
    auto next = detail::generate_level(g, parent, i, ks.parts[static_cast<std::size_t>(i - 1)]);
    if (!next)
      internal_error("generation ran out of " + std::to_string(i) + "-vacancies in sector " + lbl.to_string());
    g = std::move(*next);
  }
  return g;
}

struct Reduction {
  ParentLabel label;
  FillMatrix fill;
  KGraph parent;
  std::vector<long long> removals;  // removals[i-1]: number of i-components removed
};

inline Reduction reduce(const KGraph& g) {
  const int n = g.n();
  if (auto chk = check_K_conditions(g); !chk)
    fail("reduce needs an admissible graph: " + chk.message);
  if (mod(g.k + g.matrix.total_height(), n) != 0)
    fail("reduce needs a graph of class (2L0, Lk)");
  std::vector<KGraph> before(static_cast<std::size_t>(n)), after(static_cast<std::size_t>(n));
  std::vector<long long> removals(static_cast<std::size_t>(n - 1), 0);
  KGraph cur = g;
  for (int i = n - 1; i >= 1; --i) {
    before[i] = cur;
    while (auto c = leading_candidate(cur, i)) {
      cur = remove_component(cur, *c);
      removals[static_cast<std::size_t>(i - 1)] += 1;
    }
    after[i] = cur;
  }
  auto lbl = is_parent(cur);
  if (!lbl)
    internal_error("reduction stopped at a graph that is not a parent");
  auto ell = ell_vector(n, g.L, g.k, 0, lbl->m);
  FillMatrix fill;
  for (int i = 1; i < n; ++i) {
    const auto a = static_cast<std::size_t>(i - 1);
    std::optional<std::vector<long long>> found;
    for (auto& kk : partitions_in_box(lbl->m[a], std::max<long long>(ell[a], 0), removals[a])) {
      auto replay = detail::generate_level(after[i], cur.matrix.columns, i, kk);
      if (replay && *replay == before[i]) {
        found = kk;
        break;
      }
    }
    if (!found)
      internal_error("no fill pattern replays level " + std::to_string(i) + " of the reduction");
    fill.parts.push_back(*found);
  }
  return Reduction{*lbl, fill, cur, removals};
}

// q^{m^t C^{-1} m} prod_i [l_i + m_i, m_i]
inline QPoly sector_closed_form(int n, int L, long long k, const std::vector<long long>& m) {
  CartanData cd(n);
  auto ell = ell_vector(n, L, k, 0, m);
  QPoly r = QPoly::monomial(cd.inverse_form(m, m));
  for (int a = 0; a < n - 1 && !r.is_zero(); ++a)
    r *= gaussian(ell[a] + m[a], m[a]);
  return r;
}

struct SectorRow {
  ParentLabel label;
  long long count = 0;
  QPoly generating;   // sum of q^{|G|/n} over the sector
  QPoly closed_form;  // Gaussian product
  bool matches() const { return generating == closed_form; }
};

struct Census {
  int n = 0, L = 0, k = 0;
  long long graphs = 0;
  std::vector<SectorRow> sectors;  // sorted by label

  long long sector_total() const {
    long long s = 0;
    for (const auto& r : sectors)
      s += r.count;
    return s;
  }
  bool all_match() const {
    return std::all_of(sectors.begin(), sectors.end(), [](const SectorRow& r) { return r.matches(); });
  }
};

inline Census sector_census(int n, int L, long long k) {
  require_rank(n);
  Census c{n, L, static_cast<int>(mod(k, n)), 0, {}};
  std::map<ParentLabel, SectorRow> rows;
  for (const auto& g : enumerate_graphs(n, L, k)) {
    ++c.graphs;
    auto red = reduce(g);
    auto& row = rows[red.label];
    row.label = red.label;
    row.count += 1;
    row.generating.add_term(Rational(node_count(g), n), 1);
  }
  for (auto& [lbl, row] : rows) {
    row.closed_form = sector_closed_form(n, L, c.k, lbl.m);
    c.sectors.push_back(std::move(row));
  }
  return c;
}

// For n-j+1 <= i <= n-1 with m_i > 0, the smallest part k^{(i)}_{m_i}
// must be at least i + j - n. Rows with m_i = 0 impose nothing.
inline bool smallest_parts_condition(const FillMatrix& ks, int j, int n) {
  for (int i = n - j + 1; i <= n - 1; ++i) {
    if (i < 1)
      continue;
    const auto& p = ks.parts[static_cast<std::size_t>(i - 1)];
    if (!p.empty() && p.back() < i + j - n)
      return false;
  }
  return true;
}

}  // namespace slnq
