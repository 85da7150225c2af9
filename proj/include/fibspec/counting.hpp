#pragma once
// Exact independent-set counting.
//
// Three independent engines compute i(G):
//   count_brute   - subset scan with packed edge tests (oracle; n-ceiling);
//   count_fast    - branching i(G) = i(G-v) + i(G-N[v]) on a max-degree
//                   vertex, multiplying over connected components, memoized
//                   per parent graph;
//   independence_polynomial - same skeleton carrying coefficient vectors;
//                   evaluating at 1 gives i(G).
// count_via_summation_trick re-expresses i(G) for a partial join as a sum of
// left induced counts over independent right-hand subsets (the partial
// transversals when the right side is a clique union).

#include <cstdint>
#include <unordered_map>

#include "fibspec/bigint.hpp"
#include "fibspec/graph.hpp"

namespace fibspec {

struct IndependencePolynomial {
  std::vector<Count> coeffs;  // i_0, i_1, ..., i_alpha

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Count value_at_one() const;
};

// Enumerates all 2^n vertex subsets.  Throws ceiling_error above max_n.
Count count_brute(const Graph& g, int max_n = 30);

// No ceiling; practical well beyond the brute range on the sparse-structured
// graphs this artifact builds.
Count count_fast(const Graph& g);

// i(G[alive]) for an arbitrary subset of the vertices, same engine as
// count_fast.  Exposed because the summation trick evaluates many induced
// counts of one fixed left graph and wants to share a memo across them.
class InducedCounter {
 public:
  explicit InducedCounter(const Graph& g);
  Count count(const VertexSet& alive);

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, Count, VertexSetHash> memo_;
};

// Coefficients are exact.  A single connected component larger than
// max_component throws ceiling_error; disconnected graphs convolve component
// polynomials and may be much larger.
IndependencePolynomial independence_polynomial(const Graph& g,
                                               int max_component = 36);

// i(realize(pj)) as sum over independent right-hand subsets S_R of
// i(G_L[V_L minus the union of N_L over S_R]).  When the right side carries
// clique-union structure the subsets are enumerated as partial transversals
// (at most one slot per block); otherwise the right graph must have at most
// max_right vertices.
Count count_via_summation_trick(const PartialJoin& pj, int max_right = 24);

// Exact tau(G) and nu(G) by exhaustive search; nu <= tau <= 2 nu.
int vertex_cover_number(const Graph& g, int max_n = 20);
int matching_number(const Graph& g, int max_n = 20);

}  // namespace fibspec
