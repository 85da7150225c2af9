#include "fibspec/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "fibspec/errors.hpp"
#include "fibspec/graph.hpp"
#include "fibspec/parallel.hpp"

namespace fibspec {
namespace {

// Vertex pairs {u, v}, u < v, in lexicographic order; bit i of an edge mask
// selects the i-th pair.  This fixes the enumeration order that witnesses
// and work partitioning refer to.
std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ps.emplace_back(u, v);
    return ps;
}

// Independent-set counts for one side of the split, all edge masks at once:
// table[(bmask << nb) | allowed] = number of independent sets of the graph
// selected by bmask that live inside the vertex subset `allowed`.
std::vector<std::uint32_t> side_count_table(int nb) {
    const auto pairs = vertex_pairs(nb);
    const std::size_t masks = std::size_t{1} << pairs.size();
    const std::size_t subsets = std::size_t{1} << nb;
    std::vector<std::uint32_t> table(masks << nb);
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(nb));
    for (std::size_t bmask = 0; bmask < masks; ++bmask) {
        for (int v = 0; v < nb; ++v) closed[v] = 1u << v;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (bmask >> i & 1) {
                closed[pairs[i].first] |= 1u << pairs[i].second;
                closed[pairs[i].second] |= 1u << pairs[i].first;
            }
        std::uint32_t* cnt = table.data() + (bmask << nb);
        cnt[0] = 1;
        for (std::uint32_t s = 1; s < subsets; ++s) {
            const int v = std::countr_zero(s);
            // Independent sets avoiding v, plus those containing v (which
            // must then avoid its whole closed neighborhood).
            cnt[s] = cnt[s & (s - 1)] + cnt[s & ~closed[v]];
        }
    }
    return table;
}

// Independent subsets of the other side, one list per edge mask.
std::vector<std::vector<std::uint16_t>> side_independent_lists(int na) {
    const auto pairs = vertex_pairs(na);
    const std::size_t masks = std::size_t{1} << pairs.size();
    const std::uint32_t subsets = 1u << na;
    std::vector<std::vector<std::uint16_t>> lists(masks);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(na));
    std::vector<char> ind(subsets);
    for (std::size_t amask = 0; amask < masks; ++amask) {
        std::fill(adj.begin(), adj.end(), 0u);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (amask >> i & 1) {
                adj[pairs[i].first] |= 1u << pairs[i].second;
                adj[pairs[i].second] |= 1u << pairs[i].first;
            }
        ind[0] = 1;
        lists[amask].push_back(0);
        for (std::uint32_t s = 1; s < subsets; ++s) {
            const int v = std::countr_zero(s);
            ind[s] = ind[s & (s - 1)] && (adj[v] & (s & (s - 1))) == 0;
            if (ind[s]) lists[amask].push_back(static_cast<std::uint16_t>(s));
        }
    }
    return lists;
}

struct Bitmap {
    std::vector<std::uint64_t> words;
    explicit Bitmap(std::uint64_t bits) : words((bits + 63) / 64) {}
    void set(std::uint64_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::uint64_t i) const {
        return words[i >> 6] >> (i & 63) & 1;
    }
};

// Maximum matching size of the graph given by closed-neighborhood rows,
// restricted to the vertex subset `sub`; memo is indexed by subset.
int matching_number(std::uint32_t sub, const std::uint32_t* adj,
                    std::int8_t* memo) {
    if (sub == 0) return 0;
    if (memo[sub] >= 0) return memo[sub];
    const int v = std::countr_zero(sub);
    int best = matching_number(sub & (sub - 1), adj, memo);
    std::uint32_t rest = adj[v] & sub;
    while (rest != 0) {
        const int w = std::countr_zero(rest);
        rest &= rest - 1;
        const std::uint32_t next = sub & ~((1u << v) | (1u << w));
        best = std::max(best, 1 + matching_number(next, adj, memo));
    }
    memo[sub] = static_cast<std::int8_t>(best);
    return best;
}

struct AuditState {
    std::uint64_t violations = 0;
    std::uint64_t num = 0, den = 1;  // max ratio i / bound as a fraction
    std::uint64_t count = 0;
    std::uint64_t witness_mask = 0;
    std::uint64_t witness_i = 0;
    int witness_nu = 0;
};

}  // namespace

CensusResult census(int n, int parallelism) {
    if (n < 1) throw validation_error("census: n must be at least 1");
    if (n > 8)
        throw ceiling_error(
            "census: n > 8 is out of scope (2^36 graphs at n = 9)");
    const auto start = std::chrono::steady_clock::now();
    const int workers = std::max(parallelism, 1);

    // Split the vertices into A (first na) and B (last nb).  An edge mask
    // factors into edges inside A, cross edges, and edges inside B; for each
    // (amask, cross) the counts over all bmask reuse one table of
    // B-side partial counts and one pass over A's independent subsets.
    const int na = (n + 1) / 2;
    const int nb = n - na;
    const int a_bits = na * (na - 1) / 2;
    const int b_bits = nb * (nb - 1) / 2;
    const int cross_bits = na * nb;
    const auto cntb = side_count_table(nb);
    const auto ind_lists = side_independent_lists(na);
    const std::uint32_t full_b = (1u << nb) - 1;

    // Work items are the (amask, cross) prefixes: the high-order bits of the
    // edge mask.  Each worker marks realized counts in a private bitmap.
    const std::uint64_t items = std::uint64_t{1} << (a_bits + cross_bits);
    const std::uint64_t value_bits = (std::uint64_t{1} << n) + 1;
    std::vector<Bitmap> local(static_cast<std::size_t>(workers),
                              Bitmap(value_bits));
    run_partitioned(items, workers, [&](int worker, std::uint64_t begin,
                                        std::uint64_t end) {
        Bitmap& seen = local[static_cast<std::size_t>(worker)];
        std::vector<std::uint32_t> u_table(std::size_t{1} << na);
        std::vector<std::uint32_t> comp;
        comp.reserve(std::size_t{1} << na);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const std::uint64_t amask = idx >> cross_bits;
            const std::uint64_t cross =
                idx & ((std::uint64_t{1} << cross_bits) - 1);
            // U[s] = union over v in s of v's B-neighborhood under `cross`.
            for (std::uint32_t s = 1; s < (1u << na); ++s) {
                const int v = std::countr_zero(s);
                u_table[s] =
                    u_table[s & (s - 1)] |
                    (static_cast<std::uint32_t>(cross >> (v * nb)) & full_b);
            }
            const auto& ind = ind_lists[amask];
            comp.clear();
            for (const std::uint16_t s : ind)
                comp.push_back(full_b & ~u_table[s]);
            for (std::uint64_t bmask = 0; bmask < (std::uint64_t{1} << b_bits);
                 ++bmask) {
                const std::uint32_t* cnt = cntb.data() + (bmask << nb);
                std::uint64_t total = 0;
                for (const std::uint32_t allowed : comp) total += cnt[allowed];
                seen.set(total);
            }
        }
    });

    std::vector<Count> realized;
    Bitmap merged(value_bits);
    for (const Bitmap& b : local)
        for (std::size_t w = 0; w < merged.words.size(); ++w)
            merged.words[w] |= b.words[w];
    for (std::uint64_t v = 0; v < value_bits; ++v)
        if (merged.test(v)) realized.push_back(Count(v));

    CensusResult result;
    result.n = n;
    result.values = ValueSet::of(std::move(realized));
    result.ni = result.values.size();
    result.graphs_enumerated = std::uint64_t{1}
                               << (a_bits + cross_bits + b_bits);
    if (result.values.min() != Count(n + 1) ||
        result.values.max() != pow2(static_cast<unsigned>(n)))
        throw std::logic_error("census: realized range violates n+1 .. 2^n");
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

MatchingBoundReport matching_bound_audit(int n, int parallelism) {
    if (n < 1)
        throw validation_error("matching_bound_audit: n must be at least 1");
    if (n > 7)
        throw ceiling_error(
            "matching_bound_audit: n > 7 needs a matching-number engine "
            "beyond the 2^n-subset recursion budget");
    const int workers = std::max(parallelism, 1);
    const auto pairs = vertex_pairs(n);
    const std::uint64_t items = std::uint64_t{1} << pairs.size();
    const std::uint32_t full = (1u << n) - 1;

    std::vector<AuditState> local(static_cast<std::size_t>(workers));
    run_partitioned(items, workers, [&](int worker, std::uint64_t begin,
                                        std::uint64_t end) {
        AuditState& st = local[static_cast<std::size_t>(worker)];
        std::array<std::uint32_t, 8> closed{};
        std::array<std::uint32_t, 8> adj{};
        std::vector<std::uint64_t> f(std::size_t{1} << n);
        std::vector<std::int8_t> memo(std::size_t{1} << n);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            for (int v = 0; v < n; ++v) {
                adj[v] = 0;
                closed[v] = 1u << v;
            }
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) {
                    const auto [u, v] = pairs[i];
                    adj[u] |= 1u << v;
                    adj[v] |= 1u << u;
                    closed[u] |= 1u << v;
                    closed[v] |= 1u << u;
                }
            f[0] = 1;
            for (std::uint32_t s = 1; s <= full; ++s) {
                const int v = std::countr_zero(s);
                f[s] = f[s & (s - 1)] + f[s & ~closed[v]];
            }
            const std::uint64_t i_g = f[full];
            std::fill(memo.begin(), memo.end(), std::int8_t{-1});
            const int nu = matching_number(full, adj.data(), memo.data());
            const std::uint64_t bound =
                powi(Count(3), static_cast<unsigned>(nu))
                    .convert_to<std::uint64_t>()
                << (n - 2 * nu);
            if (i_g > bound) ++st.violations;
            // Compare i_g / bound with the running maximum by
            // cross-multiplication (all quantities fit in 64 bits).
            const std::uint64_t lhs = i_g * st.den;
            const std::uint64_t rhs = st.num * bound;
            if (lhs > rhs) {
                st.num = i_g;
                st.den = bound;
                st.count = 1;
                st.witness_mask = mask;
                st.witness_i = i_g;
                st.witness_nu = nu;
            } else if (lhs == rhs) {
                ++st.count;
            }
        }
    });

    // Merge in ascending worker order so the witness is the first graph in
    // edge-mask order attaining the final maximum.
    AuditState best;
    std::uint64_t violations = 0;
    for (const AuditState& st : local) {
        violations += st.violations;
        if (st.count == 0) continue;
        const Count lhs = Count(st.num) * best.den;
        const Count rhs = Count(best.num) * st.den;
        if (lhs > rhs)
            best = st;
        else if (lhs == rhs)
            best.count += st.count;
    }

    MatchingBoundReport report;
    report.n = n;
    report.graphs_enumerated = items;
    report.violations = violations;
    report.max_ratio = Rational(Count(best.num), Count(best.den));
    report.max_ratio_count = best.count;
    report.witness_i = Count(best.witness_i);
    report.witness_nu = best.witness_nu;
    Graph witness(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (best.witness_mask >> i & 1)
            witness.add_edge(pairs[i].first, pairs[i].second);
    report.witness_graph6 = emit_graph6(witness);
    return report;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0)
        throw validation_error("binary_entropy: x must lie in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double solve_mu0(double tol) {
    if (tol <= 0.0) throw validation_error("solve_mu0: tolerance must be > 0");
    // g(mu) = (1 + 2 mu) H(1 / (1 + 2 mu)) - 1 rises from -1 at mu = 0 to
    // +1 at mu = 1/2; bisect for its unique zero.
    const auto g = [](double mu) {
        const double s = 1.0 + 2.0 * mu;
        return s * binary_entropy(1.0 / s) - 1.0;
    };
    double lo = 0.0, hi = 0.5;
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2.0;
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

UpperBoundEval upper_bound_eval(double n) {
    if (!(n >= 10.0))
        throw validation_error("upper_bound_eval: n must be at least 10");
    UpperBoundEval e;
    e.n = n;
    e.first_exponent = 0.99997 * n;
    e.second_exponent = n + 0.5 * std::log2(0.75) * std::log2(0.1469 * n);
    const double hi = std::max(e.first_exponent, e.second_exponent);
    const double lo = std::min(e.first_exponent, e.second_exponent);
    e.total_log2 = hi + std::log2(1.0 + std::exp2(lo - hi));
    e.envelope_log2 = n - 0.2075 * std::log2(n);
    return e;
}

bool entropy_sandwich_holds(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw validation_error("entropy_sandwich_holds: need 0 <= k <= n");
    const auto power = [](int base, int exp) {
        return exp == 0 ? Count(1)
                        : powi(Count(base), static_cast<unsigned>(exp));
    };
    Count binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
    const Count middle = binom * power(k, k) * power(n - k, n - k);
    const Count nn = power(n, n);
    return middle <= nn && nn <= Count(n + 1) * middle;
}

}  // namespace fibspec
