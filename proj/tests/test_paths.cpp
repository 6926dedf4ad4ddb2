#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using namespace slnq;

TEST_CASE("level-2 weights are unordered pairs") {
  CHECK(Level2Weight(3, 2, 1) == Level2Weight(3, 1, 2));
  CHECK(Level2Weight(3, 4, 0) == Level2Weight(3, 0, 1));
  CHECK(Level2Weight(4, 0, 0).to_string() == "2L0");
  CHECK(Level2Weight(4, 3, 1).to_string() == "L1+L3");
  CHECK(Level2Weight(3, 0, 0).step(0) == Level2Weight(3, 0, 1));
  CHECK(Level2Weight(3, 2, 2).step(2) == Level2Weight(3, 0, 2));
  CHECK_THROWS_AS(Level2Weight(3, 0, 1).step(2), ContractViolation);
  CHECK(Level2Weight(3, 1, 2).weight().level == 2);
}

TEST_CASE("ground state path") {
  Path g = ground_state_path(3, 6, 0, 0, 0);
  CHECK(g.seq == IntegerSequence{0, 1, 2, 0, 1, 2, 0});
  CHECK(energy(g) == 0);
  CHECK_NOTHROW(path_from_iota(g.space, g.seq));
  for (int n = 2; n <= 5; ++n)
    for (int L = 0; L <= 6; ++L)
      for (int k = 0; k < n; ++k) {
        Path p = ground_state_path(n, L, 0, 1, k);
        CHECK(energy(p) == 0);
        CHECK_NOTHROW(path_from_iota(p.space, p.seq));
      }
}

TEST_CASE("worked paths") {
  PathSpace a(3, 6, 0, 0, 1);
  Path p = path_from_iota(a, {0, 1, 0, 2, 1, 0, 2});
  CHECK(energy(p) == 6);
  CHECK(energy(p) == oracle::energy_from_weights(p));

  PathSpace b(4, 6, 0, 0, 0);
  Path r = path_from_iota(b, {0, 0, 1, 1, 2, 3, 2});
  auto w = r.weights();
  CHECK(w.front() == Level2Weight(4, 0, 0));
  CHECK(w[2] == Level2Weight(4, 1, 1));
  CHECK(w.back() == Level2Weight(4, 0, 2));
  CHECK(energy(r) == oracle::energy_from_weights(r));
  CHECK(weight_of_path(r).delta_coeff == -energy(r));
}

TEST_CASE("invalid sequences are rejected") {
  PathSpace sp(3, 3, 0, 0, 0);
  CHECK_THROWS_AS(path_from_iota(sp, {0, 1, 2}), ContractViolation);        // too short
  CHECK_THROWS_AS(path_from_iota(sp, {1, 0, 1, 0}), ContractViolation);     // illegal first step
  CHECK_THROWS_AS(path_from_iota(sp, {0, 0, 1, 0}), ContractViolation);     // wrong endpoint
  CHECK_THROWS_AS(PathSpace(3, -1, 0, 0, 0), ContractViolation);
}

TEST_CASE("enumeration is lexicographic, complete and valid") {
  for (int n = 2; n <= 4; ++n)
    for (int L = 0; L <= 7; ++L)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            auto paths = enumerate_paths(n, L, i, j, k);
            std::set<IntegerSequence> seen;
            for (std::size_t t = 0; t < paths.size(); ++t) {
              REQUIRE_NOTHROW(path_from_iota(paths[t].space, paths[t].seq));
              if (t > 0)
                CHECK(paths[t - 1].seq < paths[t].seq);
              seen.insert(paths[t].seq);
            }
            // every sequence of allowed steps that ends at the boundary
            std::size_t brute = 0;
            PathSpace sp(n, L, i, j, k);
            for (long long code = 0; code < (1LL << L); ++code) {
              Level2Weight cur = sp.initial;
              bool legal = true;
              for (int l = 0; l < L && legal; ++l) {
                bool high = (code >> l) & 1;
                legal = !(high && cur.i == cur.j);  // a doubled weight has one step
                cur = cur.step(high ? cur.j : cur.i);
              }
              if (legal && cur == sp.endpoint())
                ++brute;
            }
            CHECK(brute == paths.size());
          }
}

TEST_CASE("energy agrees with the weight-based oracle") {
  for (int n = 2; n <= 4; ++n)
    for (int L = 0; L <= 8; ++L)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          for (const auto& p : enumerate_paths(n, L, 0, j, k))
            REQUIRE(energy(p) == oracle::energy_from_weights(p));
}

TEST_CASE("brute B has total mass equal to the number of paths") {
  for (int n = 2; n <= 4; ++n)
    for (int L = 0; L <= 8; ++L)
      for (int k = 0; k < n; ++k) {
        QPoly b = brute_B(n, L, 0, 0, k);
        CHECK(b.at_one() == BigInt(enumerate_paths(n, L, 0, 0, k).size()));
        CHECK(b.has_integer_exponents());
        CHECK(b.has_nonnegative_coefficients());
      }
  CHECK(brute_B(3, 0, 0, 0, 0) == QPoly::one());
  CHECK(brute_B(3, 0, 0, 0, 1).is_zero());
}
