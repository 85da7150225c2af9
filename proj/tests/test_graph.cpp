#include "doctest.h"
#include "fibspec/graph.hpp"

#include <random>

using namespace fibspec;

TEST_SUITE("vertex sets") {
  TEST_CASE("basic set algebra over a 100-vertex universe") {
    VertexSet s(100);
    CHECK(s.count() == 0);
    CHECK(s.empty());
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(99);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK_FALSE(s.test(62));
    CHECK(s.find_first() == 0);
    s.reset(0);
    CHECK(s.find_first() == 63);
    CHECK(s.members() == std::vector<int>{63, 64, 99});

    VertexSet t(100);
    t.set(64);
    CHECK(s.intersects(t));
    CHECK(s.contains_all(t));
    CHECK_FALSE(t.contains_all(s));
    s.subtract(t);
    CHECK(s.members() == std::vector<int>{63, 99});
  }

  TEST_CASE("full set respects the universe boundary") {
    for (int n : {0, 1, 63, 64, 65, 130}) {
      CHECK(VertexSet::full(n).count() == n);
    }
  }

  TEST_CASE("out-of-range access is rejected") {
    VertexSet s(5);
    CHECK_THROWS_AS(s.test(5), validation_error);
    CHECK_THROWS_AS(s.set(-1), validation_error);
  }
}

TEST_SUITE("graph core") {
  TEST_CASE("constructors produce the standard graphs") {
    CHECK(empty_graph(0).n() == 0);
    CHECK(empty_graph(3).edge_count() == 0);
    CHECK(empty_graph(9).n() == 9);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complement(empty_graph(5)) == complete_graph(5));
    CHECK(complement(complete_graph(6)) == empty_graph(6));
  }

  TEST_CASE("add_edge validates and is idempotent") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK_THROWS_AS(g.add_edge(0, 0), validation_error);
    CHECK_THROWS_AS(g.add_edge(0, 3), validation_error);
  }

  TEST_CASE("induced subgraphs relabel in order") {
    Graph p4 = path_graph(4);
    VertexSet w(4);
    w.set(0);
    w.set(2);
    CHECK(induced_subgraph(p4, w) == empty_graph(2));
    VertexSet k(4);
    k.set(1);
    k.set(2);
    CHECK(induced_subgraph(p4, k) == complete_graph(2));
    CHECK(induced_subgraph(complete_graph(4), VertexSet::full(4)) ==
          complete_graph(4));
  }

  TEST_CASE("joins add the right vertices and edges") {
    CHECK(disjoint_union(empty_graph(2), empty_graph(3)) == empty_graph(5));
    CHECK(full_join(complete_graph(2), complete_graph(3)) == complete_graph(5));
    CHECK(full_join(empty_graph(1), empty_graph(1)) == complete_graph(2));
  }

  TEST_CASE("joins are associative under construction-order labeling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Graph a = random_graph(3, 0.5, rng);
      Graph b = random_graph(4, 0.5, rng);
      Graph c = random_graph(2, 0.5, rng);
      CHECK(disjoint_union(disjoint_union(a, b), c) ==
            disjoint_union(a, disjoint_union(b, c)));
      CHECK(full_join(full_join(a, b), c) == full_join(a, full_join(b, c)));
    }
  }
}

TEST_SUITE("clique unions and partial joins") {
  TEST_CASE("block addressing walks blocks in order") {
    CliqueUnion cu = CliqueUnion::of({3, 3});
    CHECK(cu.vertex_count() == 6);
    CHECK(cu.index_of(0, 0) == 0);
    CHECK(cu.index_of(1, 2) == 5);
    Graph g = cu.realize();
    CHECK(g.edge_count() == 6);
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_THROWS_AS(cu.index_of(2, 0), validation_error);
    CHECK_THROWS_AS(CliqueUnion::of({}), validation_error);
    CHECK_THROWS_AS(CliqueUnion::of({2, 0}), validation_error);
  }

  TEST_CASE("4K3 matches its direct realization") {
    CliqueUnion cu = CliqueUnion::of({3, 3, 3, 3});
    Graph direct = disjoint_union(
        disjoint_union(complete_graph(3), complete_graph(3)),
        disjoint_union(complete_graph(3), complete_graph(3)));
    CHECK(cu.realize() == direct);
  }

  TEST_CASE("degenerate partial joins realize the named graphs") {
    Graph left = path_graph(3);
    Graph right = complete_graph(2);
    CHECK(disjoint_partial_join(left, right).realize() ==
          disjoint_union(left, right));
    CHECK(full_partial_join(left, right).realize() == full_join(left, right));
  }

  TEST_CASE("realization preserves both induced sides") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      Graph left = random_graph(5, 0.4, rng);
      Graph right = random_graph(4, 0.6, rng);
      std::vector<VertexSet> nmap;
      for (int w = 0; w < right.n(); ++w) {
        VertexSet s(left.n());
        for (int v = 0; v < left.n(); ++v) {
          if (rng() & 1) s.set(v);
        }
        nmap.push_back(s);
      }
      PartialJoin pj = PartialJoin::make(left, right, nmap);
      Graph g = pj.realize();
      CHECK(induced_subgraph(g, [&] {
              VertexSet s(g.n());
              for (int v = 0; v < left.n(); ++v) s.set(v);
              return s;
            }()) == left);
      CHECK(induced_subgraph(g, [&] {
              VertexSet s(g.n());
              for (int v = left.n(); v < g.n(); ++v) s.set(v);
              return s;
            }()) == right);
      for (int w = 0; w < right.n(); ++w) {
        for (int v = 0; v < left.n(); ++v) {
          CHECK(g.has_edge(v, left.n() + w) == nmap[w].test(v));
        }
      }
    }
  }

  TEST_CASE("neighbor sets over the wrong universe are rejected") {
    Graph left = empty_graph(3);
    Graph right = empty_graph(1);
    std::vector<VertexSet> bad{VertexSet(4)};
    CHECK_THROWS_AS(PartialJoin::make(left, right, bad), validation_error);
    CHECK_THROWS_AS(
        PartialJoin::make(left, right, std::vector<VertexSet>{}),
        validation_error);
  }
}

TEST_SUITE("graph6") {
  TEST_CASE("known strings decode to known graphs") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("D??") == empty_graph(5));
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(empty_graph(5)) == "D??");
  }

  TEST_CASE("small canonical examples round-trip") {
    // P4 = "Cr" per the reference implementation of the format.
    Graph p4 = path_graph(4);
    CHECK(parse_graph6(emit_graph6(p4)) == p4);
    Graph c5 = cycle_graph(5);
    CHECK(parse_graph6(emit_graph6(c5)) == c5);
  }

  TEST_CASE("random graphs round-trip at n <= 12") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
      int n = static_cast<int>(rng() % 13);
      Graph g = random_graph(n, 0.5, rng);
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
  }

  TEST_CASE("long-form header round-trips above 62 vertices") {
    Graph g(100);
    for (int v = 0; v + 1 < 100; v += 2) g.add_edge(v, v + 1);
    std::string s = emit_graph6(g);
    CHECK(s.substr(0, 1) == "~");
    CHECK(parse_graph6(s) == g);
  }

  TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(parse_graph6(""), validation_error);
    CHECK_THROWS_AS(parse_graph6("A"), validation_error);    // missing bits
    CHECK_THROWS_AS(parse_graph6("A_?"), validation_error);  // trailing junk
    CHECK_THROWS_AS(parse_graph6("A\x01"), validation_error);
    // "B" header (n=3) has 3 padding bits; '@' sets the last one.
    CHECK_THROWS_AS(parse_graph6("B@"), validation_error);
  }
}
