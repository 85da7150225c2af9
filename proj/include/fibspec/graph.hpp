#pragma once
// Graph representation, join operations, partial joins, and graph6 I/O.
//
// Vertices are 0-indexed integers (the hypercube construction documents its
// own 1-indexed label mapping).  Adjacency rows are word-packed bitsets so
// that neighborhood unions and induced-subgraph masking are a handful of
// word operations; graphs above 64 vertices simply use more words per row.
// All types are immutable in practice once built and safe to share across
// worker threads.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fibspec/errors.hpp"

namespace fibspec {

// Subset of [0, n) for a fixed universe size n, word-packed.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet full(int universe);

  int universe() const { return n_; }
  bool test(int v) const;
  void set(int v);
  void reset(int v);
  int count() const;
  bool empty() const;
  bool intersects(const VertexSet& other) const;
  bool contains_all(const VertexSet& other) const;  // other subset of this
  int find_first() const;                           // -1 when empty

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& subtract(const VertexSet& other);  // this \ other

  std::vector<int> members() const;
  // Calls fn(v) for each member in ascending order.
  void for_each(const std::function<void(int)>& fn) const;

  bool operator==(const VertexSet&) const = default;
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  void check(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  long long edge_count() const { return edges_; }
  void add_edge(int u, int v);  // rejects loops and out-of-range endpoints
  bool has_edge(int u, int v) const;
  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return neighbors(v).count(); }
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  long long edges_ = 0;
  std::vector<VertexSet> adj_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complement(const Graph& g);
// Vertices of W keep their relative order and are relabeled onto [0, |W|).
Graph induced_subgraph(const Graph& g, const VertexSet& w);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph full_join(const Graph& a, const Graph& b);

// Erdos-Renyi sample: each edge present independently with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Disjoint union of cliques K_{m_1} | ... | K_{m_l} with (block, slot)
// addressing.  Block j, slot k are 0-indexed here; the construction's
// 1-indexed labels w_{j,k} map to (j-1, k-1).
struct CliqueUnion {
  std::vector<int> sizes;

  static CliqueUnion of(std::vector<int> sizes);  // each size >= 1, nonempty
  int vertex_count() const;
  int block_count() const { return static_cast<int>(sizes.size()); }
  int index_of(int block, int slot) const;  // flat vertex index
  Graph realize() const;
};

// A partial join of G_L and G_R: both sides induced intact, cross edges
// given per right vertex w as N_L(w), a subset of V_L.
struct PartialJoin {
  Graph left;
  Graph right;
  std::optional<CliqueUnion> right_blocks;  // set when right is a clique union
  std::vector<VertexSet> neighbor_map;      // size right.n()

  static PartialJoin make(Graph left, Graph right,
                          std::vector<VertexSet> neighbor_map);
  static PartialJoin make(Graph left, const CliqueUnion& right_blocks,
                          std::vector<VertexSet> neighbor_map);

  int total_vertices() const { return left.n() + right.n(); }
  // Realized graph: left vertices keep their indices, right vertex w becomes
  // left.n() + w.
  Graph realize() const;
};

// The two degenerate partial joins.
PartialJoin disjoint_partial_join(Graph left, Graph right);
PartialJoin full_partial_join(Graph left, Graph right);

// graph6, bit-exact per the published format.  Emission uses the 1-byte
// header for n <= 62 and the 3-byte '~' header up to 258047; parsing accepts
// the 6-byte '~~' header as well.  Nonzero padding bits are rejected.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

}  // namespace fibspec
