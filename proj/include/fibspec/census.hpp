// Exhaustive censuses over all labelled graphs on few vertices.
//
// The central object is the census of independent-set counts: the set of
// integers realized as i(G) when G ranges over every labelled graph on n
// vertices, together with its cardinality.  The census engine enumerates all
// 2^C(n,2) edge subsets with a meet-in-the-middle split so that n = 8 (2^28
// graphs) stays tractable on one core; work is partitioned over the
// high-order bits of the edge mask so results are deterministic for any
// worker count.
//
// Two companion audits accompany the census:
//   * matching_bound_audit checks i(G) <= 3^nu(G) * 2^(n - 2 nu(G)) for every
//     graph on n vertices (nu = matching number) and reports the graphs
//     attaining the maximum ratio;
//   * upper_bound_eval evaluates the asymptotic two-term bound on the number
//     of distinct census values in log2 form, and entropy_sandwich_holds
//     verifies the exact binomial-entropy inequality used to justify it.
#pragma once

#include <cstdint>
#include <string>

#include "fibspec/bigint.hpp"
#include "fibspec/spectra.hpp"

namespace fibspec {

// Result of enumerating every labelled graph on n vertices.
struct CensusResult {
    int n = 0;
    ValueSet values;                      // all realized i(G)
    std::uint64_t ni = 0;                 // |values|
    std::uint64_t graphs_enumerated = 0;  // 2^C(n,2)
    double elapsed_seconds = 0.0;
};

// Enumerates all 2^C(n,2) labelled graphs on n vertices and collects the set
// of realized independent-set counts.  Requires 1 <= n (validation_error) and
// n <= 8 (ceiling_error beyond; 2^36 graphs at n = 9 is out of scope).
// The result is identical for every parallelism level.
CensusResult census(int n, int parallelism = 1);

// Audit of the matching bound i(G) <= 3^nu * 2^(n-2nu) over all labelled
// graphs on n vertices.  max_ratio is the maximum of i(G) / bound; the
// witness fields describe the first graph (in edge-mask order, so the
// edgeless graph when the maximum is 1) attaining it.
struct MatchingBoundReport {
    int n = 0;
    std::uint64_t graphs_enumerated = 0;
    std::uint64_t violations = 0;  // graphs with i(G) > bound (expected 0)
    Rational max_ratio{0};
    std::uint64_t max_ratio_count = 0;  // graphs attaining max_ratio
    std::string witness_graph6;
    Count witness_i = 0;
    int witness_nu = 0;
};

// Runs the audit for 1 <= n <= 7 (validation_error / ceiling_error
// otherwise).  Deterministic across parallelism levels.
MatchingBoundReport matching_bound_audit(int n, int parallelism = 1);

// Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

// The unique mu in (0, 1/2) with (1 + 2 mu) * H(1 / (1 + 2 mu)) = 1,
// approximately 0.146908.  Bisection to the given tolerance.
double solve_mu0(double tol = 1e-12);

// Evaluation, in log2 form, of the two-term upper bound on the number of
// distinct census values: 2^(0.99997 n) + 2^(n + 0.5 log2(3/4) log2(0.1469 n))
// together with the simpler envelope 2^(n - 0.2075 log2 n).
struct UpperBoundEval {
    double n = 0;
    double first_exponent = 0;   // 0.99997 n
    double second_exponent = 0;  // n + 0.5 log2(3/4) log2(0.1469 n)
    double total_log2 = 0;       // log2(2^first + 2^second)
    double envelope_log2 = 0;    // n - 0.2075 log2 n
};

// Requires n >= 10 (validation_error below; the bound is asymptotic and the
// inner logarithm must stay positive).
UpperBoundEval upper_bound_eval(double n);

// Exact integer check of the entropy sandwich for binomial coefficients:
//   C(n,k) k^k (n-k)^(n-k)  <=  n^n  <=  (n+1) C(n,k) k^k (n-k)^(n-k)
// with the convention 0^0 = 1.  Requires 0 <= k <= n.
bool entropy_sandwich_holds(int n, int k);

}  // namespace fibspec
