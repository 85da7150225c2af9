#include "fibspec/avoider.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "fibspec/bigint.hpp"
#include "fibspec/census.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/graph.hpp"
#include "fixtures.hpp"

namespace fibspec {
namespace {

using namespace fixtures;

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

TEST_SUITE("point sets") {
    TEST_CASE("insert, membership, and cardinality") {
        PointSet s(4);
        CHECK(s.dimension() == 4);
        CHECK(s.universe_size() == 16);
        CHECK(s.size() == 0);
        s.insert(3);
        s.insert(15);
        s.insert(3);
        CHECK(s.size() == 2);
        CHECK(s.contains(3));
        CHECK(s.contains(15));
        CHECK_FALSE(s.contains(0));
        CHECK(s.members() == std::vector<std::uint32_t>{3, 15});
        CHECK(PointSet::of(4, {15, 3, 3}) == s);
    }

    TEST_CASE("dimension zero is the one-point universe") {
        PointSet s(0);
        CHECK(s.universe_size() == 1);
        s.insert(0);
        CHECK(s.size() == 1);
        CHECK_THROWS_AS(s.insert(1), validation_error);
    }

    TEST_CASE("domain limits") {
        CHECK_THROWS_AS(PointSet(25), ceiling_error);
        CHECK_THROWS_AS(PointSet(-1), validation_error);
        CHECK_THROWS_AS(PointSet(3).insert(8), validation_error);
        CHECK_THROWS_AS(PointSet(3).contains(9), validation_error);
    }
}

TEST_SUITE("flat enumeration") {
    TEST_CASE("gaussian binomials") {
        CHECK(gaussian_binomial(4, 3) == Count(15));
        CHECK(gaussian_binomial(4, 1) == Count(15));
        CHECK(gaussian_binomial(4, 2) == Count(35));
        CHECK(gaussian_binomial(5, 3) == Count(155));
        CHECK(gaussian_binomial(8, 3) == Count(97155));
        for (int n = 0; n <= 10; ++n) {
            CHECK(gaussian_binomial(n, 0) == Count(1));
            CHECK(gaussian_binomial(n, n) == Count(1));
            CHECK(gaussian_binomial(n, n + 1) == Count(0));
            for (int k = 0; k <= n; ++k) {
                // Symmetry and the Pascal-style recurrence.
                CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
                if (n >= 1 && k >= 1)
                    CHECK(gaussian_binomial(n, k) ==
                          gaussian_binomial(n - 1, k - 1) +
                              pow2(static_cast<unsigned>(k)) *
                                  gaussian_binomial(n - 1, k));
            }
        }
    }

    TEST_CASE("flat totals") {
        CHECK(total_flats(3, 3) == Count(1));
        CHECK(total_flats(4, 3) == Count(30));
        CHECK(total_flats(4, 1) == Count(120));
        CHECK(total_flats(8, 3) == Count(3'108'960));
        CHECK(total_flats(3, 0) == Count(8));
        CHECK(total_flats(2, 3) == Count(0));
    }

    TEST_CASE("every flat exactly once, with uniform point coverage") {
        struct Shape {
            int n, k;
        };
        for (const Shape shape : {Shape{3, 3}, Shape{4, 3}, Shape{4, 1},
                                  Shape{5, 2}, Shape{4, 0}, Shape{5, 4}}) {
            const auto flats = all_flats(shape.n, shape.k);
            CHECK(Count(flats.size()) == total_flats(shape.n, shape.k));
            std::set<std::vector<std::uint32_t>> distinct;
            std::map<std::uint32_t, int> coverage;
            for (const AffineFlat& f : flats) {
                const auto pts = f.points();
                CHECK(pts.size() == (std::size_t{1} << shape.k));
                distinct.insert(pts);
                for (const std::uint32_t p : pts) ++coverage[p];
            }
            CHECK(distinct.size() == flats.size());
            // Each of the 2^n points lies in flats * 2^k / 2^n many flats.
            const std::uint64_t expected =
                (flats.size() << shape.k) >> shape.n;
            CHECK(coverage.size() == (std::size_t{1} << shape.n));
            for (const auto& [p, c] : coverage)
                CHECK(static_cast<std::uint64_t>(c) == expected);
        }
    }

    TEST_CASE("canonical form of every streamed flat") {
        std::uint64_t expected_index = 0;
        enumerate_flats(5, 3, [&](const AffineFlat& f) {
            CHECK(f.index == expected_index++);
            std::uint32_t pivot_mask = 0;
            std::uint32_t prev_pivot = 32;
            for (const std::uint32_t row : f.basis) {
                REQUIRE(row != 0);
                const std::uint32_t p =
                    31 - static_cast<std::uint32_t>(std::countl_zero(row));
                CHECK(p < prev_pivot);  // rows sorted by decreasing pivot
                prev_pivot = p;
                pivot_mask |= 1u << p;
            }
            for (const std::uint32_t row : f.basis)
                CHECK((row & pivot_mask) ==
                      (1u << (31 - std::countl_zero(row))));
            CHECK((f.offset & pivot_mask) == 0);
            // The offset is the integer-least point of the flat.
            const auto pts = f.points();
            CHECK(pts.front() == f.offset);
        });
        CHECK(Count(expected_index) == total_flats(5, 3));
    }

    TEST_CASE("the single 3-flat of the whole space") {
        const auto flats = all_flats(3, 3);
        REQUIRE(flats.size() == 1);
        const auto pts = flats[0].points();
        CHECK(pts == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7});
    }

    TEST_CASE("ceilings and validation") {
        CHECK_THROWS_AS(all_flats(9, 3), ceiling_error);      // 50'434'240
        CHECK_THROWS_AS(all_flats(4, 3, 29), ceiling_error);  // cap below 30
        CHECK_THROWS_AS(all_flats(4, -1), validation_error);
        CHECK_THROWS_AS(all_flats(25, 3), ceiling_error);
        CHECK(all_flats(2, 3).empty());  // no 3-flats in F_2^2
    }
}

TEST_SUITE("avoider construction") {
    TEST_CASE("frozen small cases") {
        CHECK(build_avoider(Graph(3)).size() == 0);

        Graph one_edge(3);
        one_edge.add_edge(0, 1);
        const PointSet s = build_avoider(one_edge);
        CHECK(s.size() == 2);  // 8 - 6
        CHECK(s.members() == std::vector<std::uint32_t>{3, 7});

        Graph k3(3);
        k3.add_edge(0, 1);
        k3.add_edge(0, 2);
        k3.add_edge(1, 2);
        CHECK(build_avoider(k3).size() == 4);  // 8 - 4
        CHECK(build_avoider(k3).members() ==
              std::vector<std::uint32_t>{3, 5, 6, 7});
    }

    TEST_CASE("cardinality complements the count on random graphs") {
        std::mt19937_64 rng(97);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 12);
            const Graph g = random_graph(n, 0.4, rng);
            CHECK(Count(build_avoider(g).size()) + count_fast(g) ==
                  pow2(static_cast<unsigned>(n)));
        }
    }

    TEST_CASE("complement is exactly the independent supports") {
        std::mt19937_64 rng(98);
        const Graph g = random_graph(4, 0.5, rng);
        const PointSet s = build_avoider(g);
        for (std::uint32_t x = 0; x < 16; ++x) {
            bool edge_inside = false;
            for (int u = 0; u < 4 && !edge_inside; ++u)
                for (int v = u + 1; v < 4; ++v)
                    if ((x >> u & 1) && (x >> v & 1) && g.has_edge(u, v)) {
                        edge_inside = true;
                        break;
                    }
            CHECK(s.contains(x) == edge_inside);
        }
    }

    TEST_CASE("dimension ceiling") {
        CHECK_THROWS_AS(build_avoider(Graph(25)), ceiling_error);
    }
}

TEST_SUITE("avoider checking") {
    TEST_CASE("empty sets avoid everything with t >= 1") {
        const PointSet empty(4);
        for (const int t : {1, 2, 3}) {
            const AvoiderVerdict v = check_avoider(empty, 3, t);
            CHECK(v.pass);
            CHECK_FALSE(v.violator.has_value());
            CHECK(Count(v.flats_total) == total_flats(4, 3));
        }
        // Every flat misses the empty set, so t = 0 fails immediately.
        const AvoiderVerdict v0 = check_avoider(empty, 3, 0);
        CHECK_FALSE(v0.pass);
        REQUIRE(v0.violator.has_value());
        CHECK(v0.violator->index == 0);
    }

    TEST_CASE("graph avoiders pass [3,1] exhaustively up to n = 5") {
        for (int n = 1; n <= 5; ++n) {
            const int bits = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits);
                 ++mask) {
                const Graph g = graph_from_edge_mask(n, mask);
                const AvoiderVerdict v = check_avoider(build_avoider(g), 3, 1);
                CHECK(v.pass);
            }
        }
    }

    TEST_CASE("random graph avoiders pass [3,1] at n in {6,7,8}") {
        std::mt19937_64 rng(99);
        for (const int n : {6, 7, 8}) {
            for (int trial = 0; trial < 5; ++trial) {
                const Graph g = random_graph(n, 0.5, rng);
                CHECK(check_avoider(build_avoider(g), 3, 1).pass);
            }
        }
    }

    TEST_CASE("graph avoiders also pass [4,1] up to n = 6") {
        std::mt19937_64 rng(100);
        for (int n = 1; n <= 6; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                const Graph g = random_graph(n, 0.5, rng);
                CHECK(check_avoider(build_avoider(g), 4, 1).pass);
            }
        }
    }

    TEST_CASE("violations report the first flat in canonical order") {
        // A singleton meets the unique full flat of F_2^3 exactly once.
        const PointSet single = PointSet::of(3, {5});
        const AvoiderVerdict v = check_avoider(single, 3, 1);
        CHECK_FALSE(v.pass);
        REQUIRE(v.violator.has_value());
        CHECK(v.violator->index == 0);
        const auto pts = v.violator->points();
        CHECK(std::count(pts.begin(), pts.end(), 5) == 1);

        // The same verdict for every worker count, including the violator.
        const PointSet tricky = PointSet::of(4, {1, 2, 4, 8, 15});
        const AvoiderVerdict base = check_avoider(tricky, 3, 1, 1);
        for (const int workers : {2, 4, 16}) {
            const AvoiderVerdict w = check_avoider(tricky, 3, 1, workers);
            CHECK(w.pass == base.pass);
            if (!base.pass) {
                REQUIRE(w.violator.has_value());
                CHECK(w.violator->index == base.violator->index);
                CHECK(w.violator->basis == base.violator->basis);
                CHECK(w.violator->offset == base.violator->offset);
            }
        }
    }

    TEST_CASE("pass verdicts are worker independent") {
        const Graph g = graph_from_edge_mask(6, 0b101010101);
        const PointSet s = build_avoider(g);
        for (const int workers : {1, 3, 8}) {
            const AvoiderVerdict v = check_avoider(s, 3, 1, workers);
            CHECK(v.pass);
            CHECK(Count(v.flats_total) == total_flats(6, 3));
        }
    }

    TEST_CASE("validation") {
        CHECK_THROWS_AS(check_avoider(PointSet(4), 3, -1), validation_error);
        CHECK_THROWS_AS(check_avoider(PointSet(4), -1, 1), validation_error);
    }
}

TEST_SUITE("spectrum gaps") {
    TEST_CASE("frozen reports at n = 3 and n = 4") {
        const SpectrumGapReport r3 = spectrum_gap_report(3);
        CHECK(r3.n == 3);
        CHECK(r3.count == 4);
        CHECK(r3.sizes.values() ==
              std::vector<Count>{Count(0), Count(2), Count(3), Count(4)});

        const SpectrumGapReport r4 = spectrum_gap_report(4);
        CHECK(r4.count == 8);
        CHECK(r4.sizes.values() ==
              std::vector<Count>{Count(0), Count(4), Count(6), Count(7),
                                 Count(8), Count(9), Count(10), Count(11)});
    }

    TEST_CASE("size count equals the census cardinality") {
        for (int n = 1; n <= 6; ++n) {
            const SpectrumGapReport r = spectrum_gap_report(n);
            CHECK(Count(r.count) == Count(census(n).ni));
            CHECK(r.sizes.size() == r.count);
            CHECK(r.sizes.min() == Count(0));  // the edgeless graph
            CHECK(r.sizes.max() ==
                  pow2(static_cast<unsigned>(n)) - Count(n + 1));
            // Every reported size is realized by some avoider.
            CHECK(r.sizes.contains(Count(0)));
        }
        CHECK(spectrum_gap_report(6).count == kNi6);
    }

    TEST_CASE("domain limits") {
        CHECK_THROWS_AS(spectrum_gap_report(0), validation_error);
        CHECK_THROWS_AS(spectrum_gap_report(7), ceiling_error);
    }
}

}  // namespace
}  // namespace fibspec
