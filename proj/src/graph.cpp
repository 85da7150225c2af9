#include "fibspec/graph.hpp"

#include <algorithm>
#include <bit>

namespace fibspec {

namespace {
constexpr std::uint64_t kOne = 1;

int word_count(int universe) { return (universe + 63) / 64; }

// Mask selecting the valid bits of the final word.
std::uint64_t tail_mask(int universe) {
  int rem = universe % 64;
  return rem == 0 ? ~std::uint64_t{0} : (kOne << rem) - 1;
}
}  // namespace

VertexSet::VertexSet(int universe) : n_(universe) {
  if (universe < 0) throw validation_error("negative universe size");
  w_.assign(word_count(universe), 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  if (universe == 0) return s;
  for (auto& word : s.w_) word = ~std::uint64_t{0};
  s.w_.back() &= tail_mask(universe);
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= n_) throw validation_error("vertex index out of range");
}

bool VertexSet::test(int v) const {
  check(v);
  return (w_[v / 64] >> (v % 64)) & 1;
}

void VertexSet::set(int v) {
  check(v);
  w_[v / 64] |= kOne << (v % 64);
}

void VertexSet::reset(int v) {
  check(v);
  w_[v / 64] &= ~(kOne << (v % 64));
}

int VertexSet::count() const {
  int total = 0;
  for (auto word : w_) total += std::popcount(word);
  return total;
}

bool VertexSet::empty() const {
  for (auto word : w_) {
    if (word) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & other.w_[i]) return true;
  }
  return false;
}

bool VertexSet::contains_all(const VertexSet& other) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (other.w_[i] & ~w_[i]) return false;
  }
  return true;
}

int VertexSet::find_first() const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  }
  return -1;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&out](int v) { out.push_back(v); });
  return out;
}

void VertexSet::for_each(const std::function<void(int)>& fn) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t word = w_[i];
    while (word) {
      int bit = std::countr_zero(word);
      fn(static_cast<int>(i * 64 + bit));
      word &= word - 1;
    }
  }
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const {
  // FNV-1a over the words; the universe size is folded in so that sets over
  // different parents never collide by construction.
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(s.universe()));
  for (auto word : s.words()) mix(word);
  return static_cast<std::size_t>(h);
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw validation_error("negative vertex count");
  adj_.assign(n, VertexSet(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw validation_error("edge endpoint out of range");
  }
  if (u == v) throw validation_error("self-loops are not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw validation_error("edge endpoint out of range");
  }
  if (u == v) return false;
  return adj_[u].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw validation_error("vertex index out of range");
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u) {
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw validation_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.n()) {
    throw validation_error("vertex set universe does not match graph");
  }
  std::vector<int> verts = w.members();
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.has_edge(verts[i], verts[j])) {
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.n() + b.n());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
  return out;
}

Graph full_join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (int u = 0; u < a.n(); ++u) {
    for (int v = 0; v < b.n(); ++v) out.add_edge(u, a.n() + v);
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  if (p < 0.0 || p > 1.0) throw validation_error("edge probability outside [0,1]");
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

CliqueUnion CliqueUnion::of(std::vector<int> sizes) {
  if (sizes.empty()) throw validation_error("clique union needs at least one block");
  for (int s : sizes) {
    if (s < 1) throw validation_error("clique block size must be >= 1");
  }
  return CliqueUnion{std::move(sizes)};
}

int CliqueUnion::vertex_count() const {
  int total = 0;
  for (int s : sizes) total += s;
  return total;
}

int CliqueUnion::index_of(int block, int slot) const {
  if (block < 0 || block >= block_count()) {
    throw validation_error("clique block index out of range");
  }
  if (slot < 0 || slot >= sizes[block]) {
    throw validation_error("clique slot index out of range");
  }
  int base = 0;
  for (int j = 0; j < block; ++j) base += sizes[j];
  return base + slot;
}

Graph CliqueUnion::realize() const {
  Graph g(vertex_count());
  int base = 0;
  for (int s : sizes) {
    for (int u = 0; u < s; ++u) {
      for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
    }
    base += s;
  }
  return g;
}

PartialJoin PartialJoin::make(Graph left, Graph right,
                              std::vector<VertexSet> neighbor_map) {
  if (static_cast<int>(neighbor_map.size()) != right.n()) {
    throw validation_error("neighbor map size must equal right vertex count");
  }
  for (const auto& s : neighbor_map) {
    if (s.universe() != left.n()) {
      throw validation_error(
          "neighbor sets must be subsets of the left vertex set");
    }
  }
  PartialJoin pj;
  pj.left = std::move(left);
  pj.right = std::move(right);
  pj.neighbor_map = std::move(neighbor_map);
  return pj;
}

PartialJoin PartialJoin::make(Graph left, const CliqueUnion& right_blocks,
                              std::vector<VertexSet> neighbor_map) {
  PartialJoin pj =
      make(std::move(left), right_blocks.realize(), std::move(neighbor_map));
  pj.right_blocks = right_blocks;
  return pj;
}

Graph PartialJoin::realize() const {
  Graph g = disjoint_union(left, right);
  for (int w = 0; w < right.n(); ++w) {
    neighbor_map[w].for_each([&](int u) { g.add_edge(u, left.n() + w); });
  }
  return g;
}

PartialJoin disjoint_partial_join(Graph left, Graph right) {
  std::vector<VertexSet> nmap(right.n(), VertexSet(left.n()));
  return PartialJoin::make(std::move(left), std::move(right), std::move(nmap));
}

PartialJoin full_partial_join(Graph left, Graph right) {
  std::vector<VertexSet> nmap(right.n(), VertexSet::full(left.n()));
  return PartialJoin::make(std::move(left), std::move(right), std::move(nmap));
}

namespace {

// graph6 upper-triangle bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
// (column-major over pairs (i, j) with i < j).

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int group = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      group <<= 1;
      if (i + b < bits.size() && bits[i + b]) group |= 1;
    }
    out.push_back(static_cast<char>(group + 63));
  }
}

std::uint64_t take_sextets(const std::string& s, std::size_t pos,
                           std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    char c = s.at(pos + i);
    if (c < 63 || c > 126) throw validation_error("graph6 byte out of range");
    value = (value << 6) | static_cast<std::uint64_t>(c - 63);
  }
  return value;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw validation_error("graph too large for supported graph6 headers");
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  }
  append_bits(out, bits);
  return out;
}

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw validation_error("empty graph6 string");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      if (text.size() < 8) throw validation_error("truncated graph6 header");
      n = take_sextets(text, 2, 6);
      pos = 8;
    } else {
      if (text.size() < 4) throw validation_error("truncated graph6 header");
      n = take_sextets(text, 1, 3);
      pos = 4;
    }
  } else {
    n = take_sextets(text, 0, 1);
    pos = 1;
  }
  if (n > 100000) {
    // Far beyond anything this artifact materializes; refuse early instead of
    // allocating n^2 bits.
    throw ceiling_error("graph6 vertex count exceeds supported ceiling");
  }
  const int nn = static_cast<int>(n);
  std::uint64_t pair_bits = n * (n - 1) / 2;
  std::uint64_t need = (pair_bits + 5) / 6;
  if (text.size() - pos != need) {
    throw validation_error("graph6 bit field has the wrong length");
  }
  Graph g(nn);
  std::uint64_t bit_index = 0;
  int i = 0, j = 1;
  for (std::size_t k = pos; k < text.size(); ++k) {
    char c = text[k];
    if (c < 63 || c > 126) throw validation_error("graph6 byte out of range");
    int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      bool bit = (group >> b) & 1;
      if (bit_index < pair_bits) {
        if (bit) g.add_edge(i, j);
        ++i;
        if (i == j) {
          i = 0;
          ++j;
        }
      } else if (bit) {
        throw validation_error("graph6 padding bits must be zero");
      }
    }
  }
  return g;
}

}  // namespace fibspec
