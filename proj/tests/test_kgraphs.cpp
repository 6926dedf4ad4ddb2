#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using namespace slnq;

namespace {
KGraph worked_graph() {
  PathSpace sp(4, 6, 0, 0, 0);
  return graph_from_path(path_from_iota(sp, {0, 0, 1, 1, 2, 3, 2}));
}

// Every column list with widths >= 1, heights in 1..n-1 and W <= L that
// satisfies K2 and K3, built directly from the conditions.
std::set<InterpolatingMatrix> admissible_by_conditions(int n, int L, int k) {
  std::set<InterpolatingMatrix> out;
  InterpolatingMatrix m{n, {}};
  auto rec = [&](auto&& self, long long width_left, long long prev_h) -> void {
    if (mod(m.total_height() + k, n) == 0)
      out.insert(m);
    for (long long w = 1; w <= width_left; ++w)
      for (long long h = 1; h < n; ++h) {
        if (mod(prev_h + w + h, n) != 0)
          continue;
        m.columns.push_back({w, h});
        self(self, width_left - w, h);
        m.columns.pop_back();
      }
  };
  rec(rec, L, n);
  return out;
}
}  // namespace

TEST_CASE("domain walls and the interpolating matrix of a worked path") {
  PathSpace sp(4, 6, 0, 0, 0);
  IntegerSequence seq{0, 0, 1, 1, 2, 3, 2};
  CHECK(domain_walls(4, seq) == std::vector<DomainWall>{{1, 3}, {3, 3}, {6, 2}});
  KGraph g = worked_graph();
  CHECK(g.columns() == std::vector<Column>{{1, 3}, {2, 3}, {3, 2}});
  CHECK(g.matrix.total_width() == 6);
  CHECK(g.matrix.total_height() == 8);
  CHECK(g.matrix.h(0) == 4);
  CHECK(is_admissible(g));
  CHECK(column_heights(g.matrix) == std::vector<long long>{8, 5, 5, 2, 2, 2});
  CHECK(node_count(g) == 24);
  CHECK(node_count_via_weights(path_from_iota(sp, seq)) == 24);
  CHECK(sequence_from_graph(g) == seq);
}

TEST_CASE("each K condition is detected") {
  KGraph g = worked_graph();
  KGraph wrong_k = g;
  wrong_k.k = 1;
  CHECK(check_K_conditions(wrong_k).violated == "K2");
  KGraph short_l = g;
  short_l.L = 5;
  CHECK(check_K_conditions(short_l).violated == "K1");
  KGraph bad_sum = g;
  bad_sum.matrix.columns = {{2, 3}, {1, 3}, {3, 2}};
  CHECK(check_K_conditions(bad_sum).violated == "K3");
  KGraph bad_height = g;
  bad_height.matrix.columns = {{1, 4}};
  CHECK(check_K_conditions(bad_height).violated == "shape");
  KGraph empty{InterpolatingMatrix{4, {}}, 0, 0};
  CHECK(is_admissible(empty));
  CHECK(node_count(empty) == 0);
}

TEST_CASE("sequence and matrix round trip over all classes") {
  for (int n = 2; n <= 4; ++n)
    for (int L = 0; L <= 8; ++L)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (const auto& p : enumerate_paths(n, L, i, j, k)) {
              KGraph g = graph_from_path(p);
              REQUIRE(sequence_from_graph(g, i, j) == p.seq);
              if (i == j)  // rotated vacuum class: K2 sees k - i
                REQUIRE(is_admissible(KGraph{g.matrix, L, static_cast<int>(mod(k - i, n))}));
              CHECK(node_count(g) == node_count_via_weights(p));
              CHECK(node_count(g) == oracle::area_by_cliffs(g.matrix));
              CHECK(column_heights(g.matrix) == oracle::heights_from_sequence(n, p.seq));
            }
}

TEST_CASE("width and last height satisfy W - h_N = 2k mod n") {
  for (int n = 2; n <= 5; ++n)
    for (int L = 1; L <= 7; ++L)
      for (int k = 0; k < n; ++k)
        for (const auto& g : enumerate_graphs(n, L, k))
          if (!g.matrix.empty())
            CHECK(mod(g.matrix.total_width() - g.columns().back().height - 2 * k, n) == 0);
}

TEST_CASE("paths of the vacuum class are exactly the admissible graphs") {
  for (int n = 2; n <= 5; ++n)
    for (int L = 0; L <= (n <= 3 ? 9 : 7); ++L)
      for (int k = 0; k < n; ++k) {
        auto graphs = enumerate_graphs(n, L, k);
        std::set<InterpolatingMatrix> from_paths;
        for (const auto& g : graphs)
          from_paths.insert(g.matrix);
        CHECK(from_paths.size() == graphs.size());
        CHECK(from_paths == admissible_by_conditions(n, L, k));
      }
}

TEST_CASE("graph sets are invariant under Dynkin rotation") {
  for (int n = 2; n <= 4; ++n)
    for (int L = 0; L <= 6; ++L)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            ClassIndices c{i, j, k};
            for (int s = 0; s < n; ++s) {
              ClassIndices r = dynkin_rotate(n, c, s);
              CHECK(brute_F(n, L, i, j, k) == brute_F(n, L, r.i, r.j, r.k));
            }
          }
  CHECK(dynkin_rotate(3, {1, 2, 0}, -1) == ClassIndices{0, 1, 2});
}

TEST_CASE("embedding into the vacuum class") {
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j < n; ++j)
      for (int L = 0; L <= 6; ++L)
        for (int k = 0; k < n; ++k) {
          std::set<InterpolatingMatrix> target;
          for (const auto& g : enumerate_graphs(n, L + j, k))
            target.insert(g.matrix);
          std::set<InterpolatingMatrix> images;
          for (const auto& g : enumerate_graphs(n, L, k, 0, j)) {
            KGraph e = embed_graph(g, j);
            CHECK(is_admissible(e));
            CHECK(target.count(e.matrix) == 1);
            if (!e.matrix.empty())
              CHECK(lowest_plain_width(e) >= j);
            images.insert(e.matrix);
          }
          CHECK(images.size() == enumerate_graphs(n, L, k, 0, j).size());
        }
  KGraph empty{InterpolatingMatrix{3, {}}, 2, 0};
  CHECK(lowest_plain_width(empty) == std::numeric_limits<long long>::max());
  CHECK_THROWS_AS(embed_graph(empty, 3), ContractViolation);
}

TEST_CASE("text rendering") {
  std::string expect =
      "n=4 L=6 k=0 N=3 W=6 H=8 nodes=24\n"
      "w: 1 2 3\n"
      "h: 3 3 2\n"
      "#.....\n"
      "#.....\n"
      "#.....\n"
      "###...\n"
      "###...\n"
      "###...\n"
      "######\n"
      "######\n"
      "cliffs: x=1:h=3 x=3:h=3 x=6:h=2\n";
  CHECK(render_ascii(worked_graph()) == expect);
  KGraph empty{InterpolatingMatrix{3, {}}, 2, 0};
  CHECK(render_ascii(empty) == "n=3 L=2 k=0 N=0 W=0 H=0 nodes=0\n(empty)\n");
}
