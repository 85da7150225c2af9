#pragma once
// Shared fixtures and frozen oracle values.
//
// Every constant here was computed by an independent reference implementation
// (Python, big-integer arithmetic) before the C++ engines existed, and is
// treated as ground truth by the unit and acceptance suites.

#include <cstdint>
#include <string>
#include <vector>

#include "fibspec/bigint.hpp"
#include "fibspec/graph.hpp"

namespace fixtures {

inline fibspec::Count fib(int k) {
  // F_1 = F_2 = 1.
  fibspec::Count a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    fibspec::Count next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// The 27-vertex partial join of the worked figure: left side K-bar_15 laid
// out as a 5x3 grid (vertex = x*3 + y for x in 0..4, y in 0..2), right side
// 4K_3.  Only three right vertices have nonempty neighborhoods:
//   w_{1,1}: the 9 grid points with x <= 2,
//   w_{3,2}: the 4 points (x, 2) with x >= 1,
//   w_{4,1}: the 4 points {2,3} x {1,2}.
inline fibspec::PartialJoin figure1_partial_join() {
  using namespace fibspec;
  Graph left = empty_graph(15);
  CliqueUnion right = CliqueUnion::of({3, 3, 3, 3});
  auto grid = [](int x, int y) { return x * 3 + y; };
  std::vector<VertexSet> nmap(right.vertex_count(), VertexSet(15));
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) nmap[right.index_of(0, 0)].set(grid(x, y));
  }
  for (int x = 1; x <= 4; ++x) nmap[right.index_of(2, 1)].set(grid(x, 2));
  for (int x = 2; x <= 3; ++x) {
    for (int y = 1; y <= 2; ++y) nmap[right.index_of(3, 0)].set(grid(x, y));
  }
  return PartialJoin::make(left, right, nmap);
}

// Census value sets over all labeled graphs (frozen oracle output).
inline const std::vector<std::uint64_t> kCensus1{2};
inline const std::vector<std::uint64_t> kCensus2{3, 4};
inline const std::vector<std::uint64_t> kCensus3{4, 5, 6, 8};
inline const std::vector<std::uint64_t> kCensus4{5, 6, 7, 8, 9, 10, 12, 16};
inline const std::vector<std::uint64_t> kCensus5{6,  7,  8,  9,  10, 11, 12, 13,
                                                 14, 15, 16, 17, 18, 20, 24, 32};
inline constexpr std::uint64_t kNi6 = 30;
inline constexpr std::uint64_t kNi7 = 55;

// Exhaustive partial-join spectra (frozen oracle output).
inline const std::vector<std::uint64_t> kSpK1K1{3, 4};
inline const std::vector<std::uint64_t> kSpK1K2{4, 5, 6};
inline const std::vector<std::uint64_t> kSpKbar2K1{5, 6, 8};

// Main-construction closed-form constants c and realized digit intervals
// [lo, hi] of ell(T) over the progression blocks (frozen oracle output).
inline const std::string kC_d1_m3 = "1320";
inline constexpr long long kEll_d1_m3_lo = 3, kEll_d1_m3_hi = 5;
inline const std::string kC_d1_m4 = "151280";
inline constexpr long long kEll_d1_m4_lo = 4, kEll_d1_m4_hi = 11;
inline const std::string kC_d2_m5 = "42658817046863599181838212762699825152";
inline constexpr long long kEll_d2_m5_lo = 41, kEll_d2_m5_hi = 65;

// Combination-plan invariants at (D=8, delta=1/1000, d0=5), frozen oracle
// output: n0 = 2^81, a = ceil(2^36 / 3), 45 blocks, and the extra vertex
// count n - n0.
inline constexpr int kPlanD = 8;
inline constexpr int kPlanD0 = 5;
inline constexpr long long kPlanBlocks = 45;
inline const std::string kPlanA = "22906492246";
inline const std::string kPlanExtraVertices = "237254";

}  // namespace fixtures
