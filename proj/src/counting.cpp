#include "fibspec/counting.hpp"

#include <algorithm>
#include <bit>

namespace fibspec {

namespace {

int degree_within(const Graph& g, int v, const VertexSet& alive) {
  const auto& row = g.neighbors(v).words();
  const auto& aw = alive.words();
  int deg = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    deg += std::popcount(row[i] & aw[i]);
  }
  return deg;
}

// Connected components of the subgraph induced by alive.
std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& alive) {
  std::vector<VertexSet> comps;
  VertexSet remaining = alive;
  while (true) {
    int start = remaining.find_first();
    if (start < 0) break;
    VertexSet comp(alive.universe());
    VertexSet frontier(alive.universe());
    comp.set(start);
    frontier.set(start);
    while (!frontier.empty()) {
      VertexSet next(alive.universe());
      frontier.for_each([&](int v) {
        VertexSet nbr = g.neighbors(v);
        nbr &= remaining;
        nbr.subtract(comp);
        next |= nbr;
      });
      comp |= next;
      frontier = next;
    }
    remaining.subtract(comp);
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Max-degree vertex within alive, ties broken by lowest index.
int branching_pivot(const Graph& g, const VertexSet& alive) {
  int best = -1, best_deg = -1;
  alive.for_each([&](int v) {
    int deg = degree_within(g, v, alive);
    if (deg > best_deg) {
      best = v;
      best_deg = deg;
    }
  });
  return best;
}

}  // namespace

Count IndependencePolynomial::value_at_one() const {
  Count total = 0;
  for (const auto& c : coeffs) total += c;
  return total;
}

Count count_brute(const Graph& g, int max_n) {
  const int n = g.n();
  if (n > max_n) {
    throw ceiling_error("count_brute ceiling exceeded: n=" + std::to_string(n) +
                        " > " + std::to_string(max_n));
  }
  if (n > 62) throw ceiling_error("count_brute requires n <= 62");
  if (n == 0) return 1;
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  Count total = 0;
  if (n <= 26) {
    // Bit-packed DP over subsets: a set is independent iff removing its
    // lowest vertex leaves an independent set not adjacent to that vertex.
    std::vector<std::uint64_t> ind((limit + 63) / 64, 0);
    ind[0] = 1;  // the empty set
    std::uint64_t hits = 1;
    for (std::uint64_t s = 1; s < limit; ++s) {
      int v = std::countr_zero(s);
      std::uint64_t rest = s & (s - 1);
      bool ok = ((ind[rest >> 6] >> (rest & 63)) & 1) && !(adj[v] & rest);
      if (ok) {
        ind[s >> 6] |= std::uint64_t{1} << (s & 63);
        ++hits;
      }
    }
    total = hits;
  } else {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < limit; ++s) {
      bool ok = true;
      std::uint64_t rest = s;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[v] & rest) {
          ok = false;
          break;
        }
      }
      if (ok) ++hits;
    }
    total = hits;
  }
  return total;
}

InducedCounter::InducedCounter(const Graph& g) : g_(g) {}

Count InducedCounter::count(const VertexSet& alive) {
  if (alive.empty()) return 1;
  auto it = memo_.find(alive);
  if (it != memo_.end()) return it->second;

  Count result;
  std::vector<VertexSet> comps = components_within(g_, alive);
  if (comps.size() > 1) {
    result = 1;
    for (const auto& comp : comps) result *= count(comp);
  } else {
    const VertexSet& comp = comps.front();
    int v = branching_pivot(g_, comp);
    if (degree_within(g_, v, comp) == 0) {
      result = pow2(static_cast<unsigned>(comp.count()));
    } else {
      VertexSet without_v = comp;
      without_v.reset(v);
      VertexSet without_closed = without_v;
      without_closed.subtract(g_.neighbors(v));
      result = count(without_v) + count(without_closed);
    }
  }
  memo_.emplace(alive, result);
  return result;
}

Count count_fast(const Graph& g) {
  InducedCounter counter(g);
  return counter.count(VertexSet::full(g.n()));
}

namespace {

std::vector<Count> poly_mul(const std::vector<Count>& a,
                            const std::vector<Count>& b) {
  std::vector<Count> out(a.size() + b.size() - 1, Count(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Count> poly_add(std::vector<Count> a, const std::vector<Count>& b) {
  if (b.size() > a.size()) a.resize(b.size(), Count(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

class PolyCounter {
 public:
  PolyCounter(const Graph& g, int max_component) : g_(g), max_component_(max_component) {}

  std::vector<Count> poly(const VertexSet& alive) {
    if (alive.empty()) return {Count(1)};
    auto it = memo_.find(alive);
    if (it != memo_.end()) return it->second;

    std::vector<Count> result;
    std::vector<VertexSet> comps = components_within(g_, alive);
    if (comps.size() > 1) {
      result = {Count(1)};
      for (const auto& comp : comps) result = poly_mul(result, poly(comp));
    } else {
      const VertexSet& comp = comps.front();
      if (comp.count() > max_component_) {
        throw ceiling_error(
            "independence_polynomial component ceiling exceeded: " +
            std::to_string(comp.count()) + " > " +
            std::to_string(max_component_));
      }
      int v = branching_pivot(g_, comp);
      if (degree_within(g_, v, comp) == 0) {
        // Edgeless component of size s: (1+x)^s, i.e. binomial coefficients.
        int s = comp.count();
        std::vector<Count> row(static_cast<std::size_t>(s) + 1, Count(1));
        for (int k = 1; k <= s; ++k) {
          row[k] = row[k - 1] * (s - k + 1) / k;
        }
        result = std::move(row);
      } else {
        VertexSet without_v = comp;
        without_v.reset(v);
        VertexSet without_closed = without_v;
        without_closed.subtract(g_.neighbors(v));
        std::vector<Count> with_v = poly(without_closed);
        with_v.insert(with_v.begin(), Count(0));  // multiply by x
        result = poly_add(poly(without_v), with_v);
      }
    }
    memo_.emplace(alive, result);
    return result;
  }

 private:
  const Graph& g_;
  int max_component_;
  std::unordered_map<VertexSet, std::vector<Count>, VertexSetHash> memo_;
};

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g,
                                               int max_component) {
  PolyCounter pc(g, max_component);
  IndependencePolynomial out;
  out.coeffs = pc.poly(VertexSet::full(g.n()));
  // Trim any trailing zeros so the leading coefficient counts maximum
  // independent sets (never zero for n >= 1; for n = 0 the polynomial is 1).
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

namespace {

// Enumerates independent subsets of the right side of pj, maintaining the
// union of left neighborhoods, and accumulates the left induced counts.
class SummationAccumulator {
 public:
  explicit SummationAccumulator(const PartialJoin& pj)
      : pj_(pj), counter_(pj.left), left_full_(VertexSet::full(pj.left.n())) {}

  Count total_over_clique_union(const CliqueUnion& cu) {
    Count total = 0;
    std::vector<int> choice(cu.sizes.size(), -1);  // -1 = block unused
    // Odometer over (m_j + 1) choices per block; each setting is one
    // partial transversal, i.e. one independent subset of the block graph.
    while (true) {
      VertexSet u(pj_.left.n());
      for (std::size_t j = 0; j < choice.size(); ++j) {
        if (choice[j] >= 0) {
          u |= pj_.neighbor_map[cu.index_of(static_cast<int>(j), choice[j])];
        }
      }
      total += induced_term(u);
      std::size_t j = 0;
      for (; j < choice.size(); ++j) {
        if (++choice[j] < cu.sizes[j]) break;
        choice[j] = -1;
      }
      if (j == choice.size()) break;
    }
    return total;
  }

  Count total_over_general_right() {
    Count total = 0;
    VertexSet allowed = VertexSet::full(pj_.right.n());
    VertexSet u(pj_.left.n());
    recurse(allowed, u, total);
    return total;
  }

 private:
  Count induced_term(const VertexSet& u) {
    VertexSet alive = left_full_;
    alive.subtract(u);
    return counter_.count(alive);
  }

  void recurse(const VertexSet& allowed, const VertexSet& u, Count& total) {
    int w = allowed.find_first();
    if (w < 0) {
      total += induced_term(u);
      return;
    }
    VertexSet rest = allowed;
    rest.reset(w);
    recurse(rest, u, total);  // w excluded
    VertexSet rest_ind = rest;
    rest_ind.subtract(pj_.right.neighbors(w));
    VertexSet u2 = u;
    u2 |= pj_.neighbor_map[w];
    recurse(rest_ind, u2, total);  // w included
  }

  const PartialJoin& pj_;
  InducedCounter counter_;
  VertexSet left_full_;
};

}  // namespace

Count count_via_summation_trick(const PartialJoin& pj, int max_right) {
  SummationAccumulator acc(pj);
  if (pj.right_blocks) {
    return acc.total_over_clique_union(*pj.right_blocks);
  }
  if (pj.right.n() > max_right) {
    throw ceiling_error("summation trick right side too large: " +
                        std::to_string(pj.right.n()) + " > " +
                        std::to_string(max_right));
  }
  return acc.total_over_general_right();
}

namespace {

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : g_(g) {}

  int alpha(const VertexSet& alive) {
    if (alive.empty()) return 0;
    auto it = memo_.find(alive);
    if (it != memo_.end()) return it->second;
    int v = branching_pivot(g_, alive);
    int result;
    if (degree_within(g_, v, alive) == 0) {
      result = alive.count();  // all isolated
    } else {
      VertexSet without_v = alive;
      without_v.reset(v);
      VertexSet without_closed = without_v;
      without_closed.subtract(g_.neighbors(v));
      result = std::max(alpha(without_v), 1 + alpha(without_closed));
    }
    memo_.emplace(alive, result);
    return result;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, int, VertexSetHash> memo_;
};

class MaxMatching {
 public:
  explicit MaxMatching(const Graph& g) : g_(g) {}

  int nu(const VertexSet& alive) {
    int v = alive.find_first();
    if (v < 0) return 0;
    auto it = memo_.find(alive);
    if (it != memo_.end()) return it->second;
    VertexSet without_v = alive;
    without_v.reset(v);
    int best = nu(without_v);  // v stays unmatched
    VertexSet nbrs = g_.neighbors(v);
    nbrs &= alive;
    nbrs.for_each([&](int u) {
      VertexSet rest = without_v;
      rest.reset(u);
      best = std::max(best, 1 + nu(rest));
    });
    memo_.emplace(alive, best);
    return best;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, int, VertexSetHash> memo_;
};

}  // namespace

int vertex_cover_number(const Graph& g, int max_n) {
  if (g.n() > max_n) {
    throw ceiling_error("vertex_cover_number ceiling exceeded");
  }
  MaxIndependentSet mis(g);
  return g.n() - mis.alpha(VertexSet::full(g.n()));
}

int matching_number(const Graph& g, int max_n) {
  if (g.n() > max_n) {
    throw ceiling_error("matching_number ceiling exceeded");
  }
  MaxMatching mm(g);
  return mm.nu(VertexSet::full(g.n()));
}

}  // namespace fibspec
