#include "fibspec/census.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fibspec/bigint.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/graph.hpp"
#include "fixtures.hpp"

namespace fibspec {
namespace {

using namespace fixtures;

ValueSet value_set(const std::vector<std::uint64_t>& xs) {
    std::vector<Count> v;
    for (const std::uint64_t x : xs) v.emplace_back(x);
    return ValueSet::of(std::move(v));
}

// Number of labelled partial matchings (graphs whose every component is an
// edge or an isolated vertex): t(n) = t(n-1) + (n-1) t(n-2).
std::uint64_t partial_matchings(int n) {
    std::uint64_t a = 1, b = 1;  // t(0), t(1)
    for (int k = 2; k <= n; ++k) {
        const std::uint64_t next = b + static_cast<std::uint64_t>(k - 1) * a;
        a = b;
        b = next;
    }
    return n == 0 ? a : b;
}

TEST_SUITE("census") {
    TEST_CASE("small censuses match the frozen value sets") {
        CHECK(census(1).values == value_set(kCensus1));
        CHECK(census(2).values == value_set(kCensus2));
        CHECK(census(3).values == value_set(kCensus3));
        CHECK(census(4).values == value_set(kCensus4));
        CHECK(census(5).values == value_set(kCensus5));
        CHECK(census(3).ni == 4);
        CHECK(census(4).ni == 8);
        CHECK(census(6).ni == kNi6);
        CHECK(census(7).ni == kNi7);
    }

    TEST_CASE("bookkeeping fields") {
        const CensusResult r = census(5);
        CHECK(r.n == 5);
        CHECK(r.graphs_enumerated == (std::uint64_t{1} << 10));
        CHECK(r.ni == r.values.size());
        CHECK(r.elapsed_seconds >= 0.0);
        CHECK(census(7).graphs_enumerated == (std::uint64_t{1} << 21));
    }

    TEST_CASE("identical results for every parallelism level") {
        const CensusResult base = census(6, 1);
        for (const int workers : {4, 16}) {
            const CensusResult r = census(6, workers);
            CHECK(r.values == base.values);
            CHECK(r.ni == base.ni);
        }
        CHECK(census(7, 4).ni == kNi7);
    }

    TEST_CASE("range endpoints and the guaranteed members") {
        for (int n = 1; n <= 7; ++n) {
            const CensusResult r = census(n);
            CHECK(r.values.min() == Count(n + 1));
            CHECK(r.values.max() == pow2(static_cast<unsigned>(n)));
            CHECK(r.values.contains(Count(n + 1)));
            CHECK(r.values.contains(pow2(static_cast<unsigned>(n))));
            if (n >= 2)
                CHECK(r.values.contains(
                    Count(3) * pow2(static_cast<unsigned>(n - 2))));
        }
    }

    TEST_CASE("the count of realized values never shrinks up to 7") {
        std::uint64_t prev = 0;
        for (int n = 1; n <= 7; ++n) {
            const std::uint64_t ni = census(n).ni;
            CHECK(ni >= prev);
            prev = ni;
        }
    }

    TEST_CASE("random graphs always land inside the census") {
        std::mt19937_64 rng(20260823);
        for (const int n : {6, 7}) {
            const CensusResult r = census(n);
            for (int trial = 0; trial < 25; ++trial) {
                const Graph g = random_graph(n, 0.5, rng);
                CHECK(r.values.contains(count_brute(g)));
            }
        }
    }

    TEST_CASE("domain limits") {
        CHECK_THROWS_AS(census(0), validation_error);
        CHECK_THROWS_AS(census(-3), validation_error);
        CHECK_THROWS_AS(census(9), ceiling_error);
    }
}

TEST_SUITE("matching bound audit") {
    TEST_CASE("no violations and maximum ratio one for n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            const MatchingBoundReport r = matching_bound_audit(n);
            CHECK(r.n == n);
            CHECK(r.violations == 0);
            CHECK(r.max_ratio == Rational(1));
            CHECK(r.graphs_enumerated ==
                  (std::uint64_t{1} << (n * (n - 1) / 2)));
            // The first maximizer in edge-mask order is the edgeless graph:
            // i = 2^n and nu = 0 meet the bound with equality.
            CHECK(r.witness_i == pow2(static_cast<unsigned>(n)));
            CHECK(r.witness_nu == 0);
            CHECK(parse_graph6(r.witness_graph6).edge_count() == 0);
            // Equality holds exactly for the partial matchings.
            CHECK(r.max_ratio_count == partial_matchings(n));
        }
        CHECK(matching_bound_audit(5).witness_graph6 == "D??");
    }

    TEST_CASE("n = 7 audit, deterministic across workers") {
        const MatchingBoundReport base = matching_bound_audit(7, 1);
        CHECK(base.violations == 0);
        CHECK(base.max_ratio == Rational(1));
        CHECK(base.max_ratio_count == partial_matchings(7));
        CHECK(base.max_ratio_count == 232);
        CHECK(base.witness_i == Count(128));
        for (const int workers : {4, 16}) {
            const MatchingBoundReport r = matching_bound_audit(7, workers);
            CHECK(r.max_ratio == base.max_ratio);
            CHECK(r.max_ratio_count == base.max_ratio_count);
            CHECK(r.witness_graph6 == base.witness_graph6);
            CHECK(r.violations == base.violations);
        }
    }

    TEST_CASE("equality cases recomputed directly") {
        // The edgeless graph and a perfect matching both meet the bound.
        const Graph empty(6);
        CHECK(count_brute(empty) == pow2(6));
        Graph pm(6);
        pm.add_edge(0, 1);
        pm.add_edge(2, 3);
        pm.add_edge(4, 5);
        CHECK(count_brute(pm) == pow3(3));
    }

    TEST_CASE("domain limits") {
        CHECK_THROWS_AS(matching_bound_audit(0), validation_error);
        CHECK_THROWS_AS(matching_bound_audit(8), ceiling_error);
    }
}

TEST_SUITE("entropy and upper bound") {
    TEST_CASE("binary entropy basics") {
        CHECK(binary_entropy(0.5) == 1.0);
        CHECK(binary_entropy(0.0) == 0.0);
        CHECK(binary_entropy(1.0) == 0.0);
        CHECK(binary_entropy(0.25) ==
              doctest::Approx(binary_entropy(0.75)).epsilon(1e-15));
        CHECK(binary_entropy(0.11) ==
              doctest::Approx(0.499915958164528).epsilon(1e-12));
        CHECK_THROWS_AS(binary_entropy(-0.1), validation_error);
        CHECK_THROWS_AS(binary_entropy(1.1), validation_error);
    }

    TEST_CASE("mu0 solves its defining equation") {
        const double mu0 = solve_mu0();
        CHECK(mu0 == doctest::Approx(0.146908).epsilon(1e-6));
        const double s = 1.0 + 2.0 * mu0;
        CHECK(s * binary_entropy(1.0 / s) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK_THROWS_AS(solve_mu0(0.0), validation_error);
    }

    TEST_CASE("upper bound evaluation") {
        const UpperBoundEval e = upper_bound_eval(100.0);
        CHECK(e.first_exponent == doctest::Approx(99.997).epsilon(1e-12));
        CHECK(e.second_exponent ==
              doctest::Approx(100.0 + 0.5 * std::log2(0.75) *
                                          std::log2(14.69))
                  .epsilon(1e-12));
        // log-sum-exp dominates both terms but adds at most one bit.
        const double hi = std::max(e.first_exponent, e.second_exponent);
        CHECK(e.total_log2 >= hi);
        CHECK(e.total_log2 <= hi + 1.0);
        CHECK(e.envelope_log2 ==
              doctest::Approx(100.0 - 0.2075 * std::log2(100.0))
                  .epsilon(1e-12));
        // The second exponent sits roughly 0.574 bits above the envelope
        // (0.2075 is a rounding of 0.5 * log2(4/3), so the gap drifts very
        // slowly with n instead of being an exact constant).
        CHECK(e.second_exponent > e.envelope_log2);
        CHECK(e.second_exponent - e.envelope_log2 ==
              doctest::Approx(0.574).epsilon(1e-3));
        CHECK_THROWS_AS(upper_bound_eval(9.99), validation_error);
    }

    TEST_CASE("the evaluation grows with n") {
        double prev = upper_bound_eval(10.0).total_log2;
        for (double n = 20.0; n <= 200.0; n += 10.0) {
            const double cur = upper_bound_eval(n).total_log2;
            CHECK(cur > prev);
            prev = cur;
        }
    }

    TEST_CASE("entropy sandwich holds exactly for n <= 30") {
        for (int n = 0; n <= 30; ++n)
            for (int k = 0; k <= n; ++k) CHECK(entropy_sandwich_holds(n, k));
        CHECK_THROWS_AS(entropy_sandwich_holds(3, 4), validation_error);
        CHECK_THROWS_AS(entropy_sandwich_holds(3, -1), validation_error);
    }
}

}  // namespace
}  // namespace fibspec
