// Grid drivers behind the command line tool: cell evaluation, a parallel
// map over cells, and the JSON report format.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "branching.hpp"
#include "kgraphs.hpp"
#include "paths.hpp"
#include "sectors.hpp"

namespace slnq {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// [numerator, denominator, "coefficient"] triples sorted by exponent.
inline Json to_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms())
    a.push_back(Json::array({e.numerator(), e.denominator(), c.str()}));
  return a;
}

inline QPoly qpoly_from_json(const Json& a) {
  QPoly p;
  for (const auto& t : a)
    p.add_term(Rational(t.at(0).get<long long>(), t.at(1).get<long long>()), BigInt(t.at(2).get<std::string>()));
  return p;
}

inline Json rational_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

struct RunConfig {
  std::vector<int> n_list{2, 3, 4};
  std::optional<int> l_max;  // absent: 10 for n <= 3, 6 for n >= 4
  std::optional<int> i, j, k;
  long long order = 0;  // 0: 8 for n = 2, 6 otherwise
  int jobs = 1;
  bool timing = false;
  bool shell = true;  // certify the Weyl enumeration bound per cell

  int l_max_for(int n) const { return l_max ? *l_max : (n <= 3 ? 10 : 6); }
  long long order_for(int n) const { return order > 0 ? order : (n == 2 ? 8 : 6); }
};

inline void validate(const RunConfig& cfg) {
  if (cfg.n_list.empty())
    fail("no rank given");
  for (int n : cfg.n_list)
    require_rank(n);
  if (cfg.l_max && *cfg.l_max < 0)
    fail("lmax must be >= 0");
  if (cfg.jobs < 1)
    fail("jobs must be >= 1");
}

// Runs f(0..count-1) on up to `jobs` threads; results keep index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int jobs, F f) {
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < count;) {
      try {
        out[t] = f(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

template <class F>
double seconds_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One (n, L, i, j, k) cell of the verification grid.
struct VerifyCell {
  int n = 0, L = 0, i = 0, j = 0, k = 0;
  QPoly brute_b, bosonic, brute_f, fermionic;
  bool bosonic_ok = false;
  bool fermionic_ok = false;
  std::optional<bool> bridge_ok;  // classes with i = 0
  std::optional<bool> shell_ok;   // pruned sum equals the full box of radius L + n + 1
  std::optional<IdentityCell> identity;
  Verdict verdict = Verdict::mismatch;
  std::optional<Rational> offset;
  double seconds = 0;
};

inline VerifyCell verify_cell(int n, int L, int i, int j, int k, bool shell = true) {
  VerifyCell c{n, L, i, j, k, {}, {}, {}, {}, false, false, {}, {}, {}, Verdict::mismatch, {}, 0};
  c.seconds = seconds_of([&] {
    c.brute_b = brute_B(n, L, i, j, k);
    c.bosonic = bosonic_B(n, L, i, j, k);
    c.brute_f = brute_F(n, L, i, j, k);
    c.fermionic = fermionic_F_class(n, L, i, j, k);
    c.bosonic_ok = c.brute_b == c.bosonic;
    c.fermionic_ok = c.brute_f == c.fermionic;
    if (i == 0) {
      c.bridge_ok = b_to_f(n, j, k, c.bosonic) == c.brute_f;
      c.identity = verify_identity(n, L, j, k);
      if (shell)
        c.shell_ok = weyl_sum(n, L, 0, j, k) == weyl_sum(n, L, 0, j, k, WeylBox{L + n + 1});
    }
  });
  bool all = c.bosonic_ok && c.fermionic_ok && c.bridge_ok.value_or(true) && c.shell_ok.value_or(true);
  if (c.identity && c.identity->verdict != Verdict::equal) {
    c.verdict = c.identity->verdict;
    c.offset = c.identity->offset;
  } else {
    c.verdict = all ? Verdict::equal : Verdict::mismatch;
  }
  return c;
}

struct ClassCell {
  int n, L, i, j, k;
};

// Cells ordered by (n, i, j, k, L).
inline std::vector<ClassCell> verify_grid(const RunConfig& cfg) {
  std::vector<ClassCell> cells;
  auto n_list = cfg.n_list;
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  for (int n : n_list)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if ((cfg.i && mod(*cfg.i, n) != i) || (cfg.j && mod(*cfg.j, n) != j) || (cfg.k && mod(*cfg.k, n) != k))
            continue;
          for (int L = 0; L <= cfg.l_max_for(n); ++L)
            cells.push_back({n, L, i, j, k});
        }
  return cells;
}

struct VerifyReport {
  std::vector<VerifyCell> cells;
  long long failures() const {
    return std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.verdict != Verdict::equal; });
  }
};

inline VerifyReport run_verify(const RunConfig& cfg) {
  validate(cfg);
  auto grid = verify_grid(cfg);
  VerifyReport r;
  r.cells = parallel_map<VerifyCell>(grid.size(), cfg.jobs, [&](std::size_t t) {
    const auto& g = grid[t];
    return verify_cell(g.n, g.L, g.i, g.j, g.k, cfg.shell);
  });
  return r;
}

struct ExponentRange {
  std::optional<Rational> lo, hi;
  void take(const QPoly& p) {
    if (p.is_zero())
      return;
    if (!lo || *p.min_exponent() < *lo)
      lo = *p.min_exponent();
    if (!hi || *p.max_exponent() > *hi)
      hi = *p.max_exponent();
  }
  Json json() const {
    return Json{{"min", lo ? rational_json(*lo) : Json(nullptr)}, {"max", hi ? rational_json(*hi) : Json(nullptr)}};
  }
};

inline Json to_json(const VerifyReport& r, bool timing) {
  Json cells = Json::array();
  ExponentRange range_b, range_f;
  for (const auto& c : r.cells) {
    range_b.take(c.brute_b);
    range_f.take(c.brute_f);
    Json j{{"n", c.n}, {"L", c.L}, {"i", c.i}, {"j", c.j}, {"k", c.k}};
    j["verdict"] = to_string(c.verdict);
    j["bosonic_matches_paths"] = c.bosonic_ok;
    j["fermionic_matches_graphs"] = c.fermionic_ok;
    j["bridge"] = c.bridge_ok ? Json(*c.bridge_ok) : Json(nullptr);
    j["shell"] = c.shell_ok ? Json(*c.shell_ok) : Json(nullptr);
    j["identity"] = c.identity ? Json(to_string(c.identity->verdict)) : Json(nullptr);
    j["offset"] = c.offset ? rational_json(*c.offset) : Json(nullptr);
    j["B"] = to_json(c.brute_b);
    j["F"] = to_json(c.brute_f);
    if (!c.bosonic_ok)
      j["B_closed_form"] = to_json(c.bosonic);
    if (!c.fermionic_ok)
      j["F_closed_form"] = to_json(c.fermionic);
    if (c.identity && c.identity->verdict != Verdict::equal) {
      j["identity_lhs"] = to_json(c.identity->lhs);
      j["identity_rhs"] = to_json(c.identity->rhs);
    }
    if (timing)
      j["seconds"] = c.seconds;
    cells.push_back(std::move(j));
  }
  Json summary{{"cells", r.cells.size()}, {"failures", r.failures()}};
  summary["B_exponents"] = range_b.json();
  summary["F_exponents"] = range_f.json();
  return Json{{"schema_version", schema_version}, {"command", "verify"}, {"summary", summary}, {"cells", cells}};
}

inline std::string verify_table(const VerifyReport& r) {
  std::ostringstream os;
  os << "  n   L   i   j   k  B=paths  F=graphs  bridge  shell  identity            seconds\n";
  for (const auto& c : r.cells) {
    os << std::setw(3) << c.n << std::setw(4) << c.L << std::setw(4) << c.i << std::setw(4) << c.j << std::setw(4)
       << c.k << std::setw(9) << (c.bosonic_ok ? "yes" : "NO") << std::setw(10) << (c.fermionic_ok ? "yes" : "NO")
       << std::setw(8) << (c.bridge_ok ? (*c.bridge_ok ? "yes" : "NO") : "-") << std::setw(7)
       << (c.shell_ok ? (*c.shell_ok ? "yes" : "NO") : "-") << "  " << std::left
       << std::setw(20) << (c.identity ? to_string(c.identity->verdict) : "-") << std::right << std::fixed
       << std::setprecision(4) << c.seconds << "\n";
  }
  os << r.cells.size() << " cells, " << r.failures() << " failures\n";
  return os.str();
}

struct CensusReport {
  std::vector<Census> census;
  std::vector<long long> path_counts;
  std::vector<double> seconds;
  long long failures() const {
    long long f = 0;
    for (std::size_t t = 0; t < census.size(); ++t)
      if (!census[t].all_match() || census[t].sector_total() != path_counts[t])
        ++f;
    return f;
  }
};

inline CensusReport run_census(const RunConfig& cfg, std::optional<int> single_length = std::nullopt) {
  validate(cfg);
  struct Item {
    int n, L, k;
  };
  std::vector<Item> items;
  auto n_list = cfg.n_list;
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  for (int n : n_list)
    for (int k = 0; k < n; ++k) {
      if (cfg.k && mod(*cfg.k, n) != k)
        continue;
      if (single_length) {
        items.push_back({n, *single_length, k});
        continue;
      }
      for (int L = 0; L <= cfg.l_max_for(n); ++L)
        items.push_back({n, L, k});
    }
  struct Out {
    Census c;
    long long paths = 0;
    double secs = 0;
  };
  auto outs = parallel_map<Out>(items.size(), cfg.jobs, [&](std::size_t t) {
    Out o;
    o.secs = seconds_of([&] {
      o.c = sector_census(items[t].n, items[t].L, items[t].k);
      o.paths = static_cast<long long>(enumerate_paths(items[t].n, items[t].L, 0, 0, items[t].k).size());
    });
    return o;
  });
  CensusReport r;
  for (auto& o : outs) {
    r.census.push_back(std::move(o.c));
    r.path_counts.push_back(o.paths);
    r.seconds.push_back(o.secs);
  }
  return r;
}

inline Json to_json(const CensusReport& r, bool timing) {
  Json items = Json::array();
  for (std::size_t t = 0; t < r.census.size(); ++t) {
    const auto& c = r.census[t];
    Json sectors = Json::array();
    for (const auto& s : c.sectors) {
      Json row{{"m", s.label.m}, {"count", s.count}, {"matches", s.matches()}};
      row["generating_function"] = to_json(s.generating);
      if (!s.matches())
        row["closed_form"] = to_json(s.closed_form);
      sectors.push_back(std::move(row));
    }
    Json j{{"n", c.n}, {"L", c.L}, {"k", c.k}, {"graphs", c.graphs}, {"paths", r.path_counts[t]},
           {"partition_ok", c.sector_total() == r.path_counts[t]}, {"sectors", sectors}};
    if (timing)
      j["seconds"] = r.seconds[t];
    items.push_back(std::move(j));
  }
  Json summary{{"classes", r.census.size()}, {"failures", r.failures()}};
  return Json{{"schema_version", schema_version}, {"command", "census"}, {"summary", summary}, {"census", items}};
}

inline std::string census_table(const CensusReport& r) {
  std::ostringstream os;
  for (std::size_t t = 0; t < r.census.size(); ++t) {
    const auto& c = r.census[t];
    os << "n=" << c.n << " L=" << c.L << " k=" << c.k << ": " << c.graphs << " graphs, " << c.sectors.size()
       << " sectors" << (c.sector_total() == r.path_counts[t] ? "" : "  PARTITION MISMATCH") << "\n";
    for (const auto& s : c.sectors)
      os << "  m=" << s.label.to_string() << "  count=" << s.count << "  " << s.generating.to_string()
         << (s.matches() ? "" : "  MISMATCH closed form " + s.closed_form.to_string()) << "\n";
  }
  os << r.census.size() << " classes, " << r.failures() << " failures\n";
  return os.str();
}

struct CorollaryReport {
  std::vector<CorollaryResult> results;
  long long failures() const {
    return std::count_if(results.begin(), results.end(), [](const CorollaryResult& c) { return !c.ok(); });
  }
};

inline CorollaryReport run_corollary(const RunConfig& cfg) {
  validate(cfg);
  struct Item {
    int n, j, k;
  };
  std::vector<Item> items;
  auto n_list = cfg.n_list;
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  for (int n : n_list)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if ((!cfg.j || mod(*cfg.j, n) == j) && (!cfg.k || mod(*cfg.k, n) == k))
          items.push_back({n, j, k});
  CorollaryReport r;
  r.results = parallel_map<CorollaryResult>(items.size(), cfg.jobs, [&](std::size_t t) {
    return corollary_check(items[t].n, items[t].j, items[t].k, cfg.order_for(items[t].n));
  });
  return r;
}

inline Json to_json(const CorollaryReport& r) {
  Json items = Json::array();
  for (const auto& c : r.results) {
    Json j{{"n", c.n}, {"j", c.j}, {"k", c.k}, {"order", c.order}, {"verdict", c.ok() ? "equal" : "mismatch"},
           {"series_equal", c.series_equal}, {"stabilized", c.stabilized},
           {"stable_length", c.stabilized ? Json(c.stable_length) : Json(nullptr)},
           {"limit_matches", c.limit_matches}};
    j["lhs"] = to_json(c.lhs);
    if (!c.series_equal)
      j["rhs"] = to_json(c.rhs);
    items.push_back(std::move(j));
  }
  Json summary{{"checks", r.results.size()}, {"failures", r.failures()}};
  return Json{{"schema_version", schema_version}, {"command", "corollary"}, {"summary", summary}, {"results", items}};
}

inline std::string corollary_table(const CorollaryReport& r) {
  std::ostringstream os;
  for (const auto& c : r.results)
    os << "n=" << c.n << " j=" << c.j << " k=" << c.k << " order=" << c.order << ": "
       << (c.ok() ? "equal" : "MISMATCH") << "  stable from L=" << c.stable_length << "  " << c.lhs.to_string()
       << "\n";
  os << r.results.size() << " checks, " << r.failures() << " failures\n";
  return os.str();
}

// Graph dump selectors.
struct DumpRequest {
  int n = 0, L = 0, i = 0, j = 0, k = 0;
  std::optional<IntegerSequence> iota;
  std::optional<std::vector<long long>> parent;
  bool all = false;
};

inline std::string run_dump(const DumpRequest& req) {
  require_rank(req.n);
  std::ostringstream os;
  if (req.iota) {
    Path p = path_from_iota(PathSpace(req.n, req.L, req.i, req.j, req.k), *req.iota);
    os << "energy=" << energy(p) << "\n";
    os << render_ascii(graph_from_path(p));
  } else if (req.parent) {
    ParentLabel lbl{req.n, *req.parent, static_cast<int>(mod(req.k, req.n))};
    os << "parent m=" << lbl.to_string() << "\n";
    os << render_ascii(parent_from_label(lbl, req.L));
  } else {
    for (const auto& p : enumerate_paths(req.n, req.L, req.i, req.j, req.k)) {
      os << "iota=";
      for (std::size_t t = 0; t < p.seq.size(); ++t)
        os << (t ? "," : "") << p.seq[t];
      os << " energy=" << energy(p) << "\n";
      os << render_ascii(graph_from_path(p)) << "\n";
    }
  }
  return os.str();
}

}  // namespace slnq
