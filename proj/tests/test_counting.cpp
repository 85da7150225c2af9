#include "doctest.h"
#include "fibspec/counting.hpp"

#include <random>

#include "fixtures.hpp"

using namespace fibspec;

TEST_SUITE("counting engines") {
  TEST_CASE("hand-checkable values") {
    CHECK(count_brute(empty_graph(3)) == 8);
    CHECK(count_brute(complete_graph(5)) == 6);
    CHECK(count_brute(path_graph(3)) == 5);
    CHECK(count_fast(path_graph(10)) == 144);
    CHECK(count_fast(empty_graph(40)) == pow2(40));
    CHECK(count_fast(disjoint_union(complete_graph(3), complete_graph(3))) == 16);
    CHECK(count_brute(empty_graph(0)) == 1);
    CHECK(count_fast(empty_graph(0)) == 1);
  }

  TEST_CASE("path counts follow the Fibonacci sequence") {
    for (int n = 1; n <= 30; ++n) {
      CHECK(count_fast(path_graph(n)) == fixtures::fib(n + 2));
    }
    for (int n = 1; n <= 20; ++n) {
      CHECK(count_brute(path_graph(n)) == fixtures::fib(n + 2));
    }
  }

  TEST_CASE("brute ceiling") {
    CHECK_THROWS_AS(count_brute(empty_graph(31)), ceiling_error);
    CHECK(count_brute(empty_graph(12), 12) == 4096);
    CHECK_THROWS_AS(count_brute(empty_graph(13), 12), ceiling_error);
  }

  TEST_CASE("brute scan path above the DP window agrees") {
    // n = 27 exercises the non-DP branch; keep the instance tiny in edges.
    Graph g = disjoint_union(path_graph(14), path_graph(13));
    CHECK(count_brute(g, 27) == fixtures::fib(16) * fixtures::fib(15));
  }

  TEST_CASE("engines agree on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + static_cast<int>(rng() % 12);
      Graph g = random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
      Count brute = count_brute(g);
      CHECK(brute == count_fast(g));
      CHECK(brute == independence_polynomial(g).value_at_one());
      CHECK(brute >= Count(n) + 1);
      CHECK(brute <= pow2(static_cast<unsigned>(n)));
    }
  }

  TEST_CASE("join identities") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      Graph a = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
      Graph b = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
      Count ia = count_fast(a), ib = count_fast(b);
      CHECK(count_fast(disjoint_union(a, b)) == ia * ib);
      CHECK(count_fast(full_join(a, b)) == ia + ib - 1);
    }
  }
}

TEST_SUITE("independence polynomial") {
  TEST_CASE("small closed forms") {
    CHECK(independence_polynomial(complete_graph(3)).coeffs ==
          std::vector<Count>{1, 3});
    CHECK(independence_polynomial(path_graph(3)).coeffs ==
          std::vector<Count>{1, 3, 1});
    CHECK(independence_polynomial(empty_graph(2)).coeffs ==
          std::vector<Count>{1, 2, 1});
    CHECK(independence_polynomial(empty_graph(0)).coeffs ==
          std::vector<Count>{1});
  }

  TEST_CASE("coefficient invariants on random graphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 1 + static_cast<int>(rng() % 11);
      Graph g = random_graph(n, 0.4, rng);
      auto p = independence_polynomial(g);
      CHECK(p.coeffs[0] == 1);
      CHECK(p.coeffs[1] == n);
      CHECK(p.coeffs.back() >= 1);
      CHECK(p.value_at_one() == count_brute(g));
    }
  }

  TEST_CASE("disconnected graphs convolve past the component ceiling") {
    // 40 isolated vertices: fine. A connected 40-path: over the ceiling.
    CHECK(independence_polynomial(empty_graph(40)).coeffs.size() == 41);
    CHECK_THROWS_AS(independence_polynomial(path_graph(40), 36), ceiling_error);
    CHECK(independence_polynomial(path_graph(40), 40).value_at_one() ==
          fixtures::fib(42));
  }
}

TEST_SUITE("summation trick") {
  TEST_CASE("degenerate partial joins reduce to the join identities") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
      Graph left = random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
      Graph right = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
      CHECK(count_via_summation_trick(disjoint_partial_join(left, right)) ==
            count_fast(left) * count_fast(right));
      CHECK(count_via_summation_trick(full_partial_join(left, right)) ==
            count_fast(left) + count_fast(right) - 1);
    }
  }

  TEST_CASE("agrees with brute force on random partial joins") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      int nl = 1 + static_cast<int>(rng() % 8);
      int nr = 1 + static_cast<int>(rng() % 6);
      Graph left = random_graph(nl, 0.4, rng);
      Graph right = random_graph(nr, 0.4, rng);
      std::vector<VertexSet> nmap;
      for (int w = 0; w < nr; ++w) {
        VertexSet s(nl);
        for (int v = 0; v < nl; ++v) {
          if (rng() & 1) s.set(v);
        }
        nmap.push_back(s);
      }
      PartialJoin pj = PartialJoin::make(left, right, nmap);
      CHECK(count_via_summation_trick(pj) == count_brute(pj.realize()));
    }
  }

  TEST_CASE("clique-union right sides enumerate partial transversals") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
      int nl = 1 + static_cast<int>(rng() % 6);
      CliqueUnion cu = CliqueUnion::of(
          {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)});
      Graph left = random_graph(nl, 0.5, rng);
      std::vector<VertexSet> nmap;
      for (int w = 0; w < cu.vertex_count(); ++w) {
        VertexSet s(nl);
        for (int v = 0; v < nl; ++v) {
          if (rng() & 1) s.set(v);
        }
        nmap.push_back(s);
      }
      PartialJoin pj = PartialJoin::make(left, cu, nmap);
      CHECK(count_via_summation_trick(pj) == count_brute(pj.realize()));
    }
  }

  TEST_CASE("the worked 27-vertex figure") {
    PartialJoin pj = fixtures::figure1_partial_join();
    const CliqueUnion& cu = *pj.right_blocks;

    // Contribution of a transversal = 2^(15 - |union of neighborhoods|).
    auto contribution = [&](const std::vector<std::pair<int, int>>& picks) {
      VertexSet u(pj.left.n());
      for (auto [block, slot] : picks) {
        u |= pj.neighbor_map[cu.index_of(block, slot)];
      }
      return pow2(static_cast<unsigned>(15 - u.count()));
    };
    // {w_{1,1}, w_{3,2}, w_{4,1}} leaves K-bar_3.
    CHECK(contribution({{0, 0}, {2, 1}, {3, 0}}) == 8);
    // {w_{1,1}, w_{2,1}, w_{3,1}, w_{4,1}} leaves K-bar_4.
    CHECK(contribution({{0, 0}, {1, 0}, {2, 0}, {3, 0}}) == 16);

    CHECK(count_via_summation_trick(pj) == count_fast(pj.realize()));
  }

  TEST_CASE("general right side honors its ceiling") {
    Graph left = empty_graph(1);
    Graph right = empty_graph(25);
    CHECK_THROWS_AS(
        count_via_summation_trick(disjoint_partial_join(left, right)),
        ceiling_error);
  }
}

TEST_SUITE("vertex cover and matching") {
  TEST_CASE("known values") {
    CHECK(vertex_cover_number(empty_graph(6)) == 0);
    CHECK(matching_number(empty_graph(6)) == 0);
    CHECK(vertex_cover_number(complete_graph(4)) == 3);
    CHECK(matching_number(complete_graph(4)) == 2);
    CHECK(vertex_cover_number(path_graph(4)) == 2);
    CHECK(matching_number(path_graph(4)) == 2);
    CHECK(matching_number(cycle_graph(7)) == 3);
  }

  TEST_CASE("koenig-style sandwich nu <= tau <= 2 nu") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 1 + static_cast<int>(rng() % 10);
      Graph g = random_graph(n, 0.4, rng);
      int nu = matching_number(g);
      int tau = vertex_cover_number(g);
      CHECK(nu <= tau);
      CHECK(tau <= 2 * nu);
    }
  }

  TEST_CASE("ceilings") {
    CHECK_THROWS_AS(vertex_cover_number(empty_graph(21)), ceiling_error);
    CHECK_THROWS_AS(matching_number(empty_graph(21)), ceiling_error);
  }
}
