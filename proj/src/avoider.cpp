#include "fibspec/avoider.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "fibspec/census.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/parallel.hpp"

namespace fibspec {
namespace {

constexpr int kMaxDimension = 24;

void check_dimension(int n) {
    if (n < 0) throw validation_error("point sets need dimension >= 0");
    if (n > kMaxDimension)
        throw ceiling_error(
            "point-set materialization is capped at dimension 24");
}

// Calls fn(subspace_index, rows, pivots) for every k-dimensional linear
// subspace of F_2^n whose canonical index lies in [begin, end).  rows are
// the reduced basis sorted by decreasing pivot; pivots are the pivot bit
// positions in ascending order.  Subspaces are ordered by (pivot set in
// lexicographic order, free-entry assignment).
void visit_subspaces(
    int n, int k, std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, const std::vector<std::uint32_t>&,
                             const std::vector<int>&)>& fn) {
    if (k > n || begin >= end) return;
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::iota(pivots.begin(), pivots.end(), 0);
    std::vector<std::vector<int>> freepos(static_cast<std::size_t>(k));
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(k));
    std::uint64_t cum = 0;
    while (true) {
        std::uint32_t pivot_mask = 0;
        for (const int p : pivots) pivot_mask |= 1u << p;
        int free_bits = 0;
        for (int i = 0; i < k; ++i) {
            const int p = pivots[static_cast<std::size_t>(k - 1 - i)];
            auto& fp = freepos[static_cast<std::size_t>(i)];
            fp.clear();
            for (int q = 0; q < p; ++q)
                if ((pivot_mask >> q & 1) == 0) fp.push_back(q);
            free_bits += static_cast<int>(fp.size());
        }
        const std::uint64_t here = std::uint64_t{1} << free_bits;
        if (cum + here > begin) {
            const std::uint64_t lo = begin > cum ? begin - cum : 0;
            const std::uint64_t hi = std::min(end - cum, here);
            for (std::uint64_t free_idx = lo; free_idx < hi; ++free_idx) {
                int cursor = 0;
                for (int i = 0; i < k; ++i) {
                    std::uint32_t row =
                        1u << pivots[static_cast<std::size_t>(k - 1 - i)];
                    for (const int q : freepos[static_cast<std::size_t>(i)]) {
                        if (free_idx >> cursor & 1) row |= 1u << q;
                        ++cursor;
                    }
                    rows[static_cast<std::size_t>(i)] = row;
                }
                fn(cum + free_idx, rows, pivots);
            }
        }
        cum += here;
        if (cum >= end) return;
        // Advance to the next pivot combination.
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pivots[static_cast<std::size_t>(j)] =
                pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<std::uint32_t> span_table(const std::vector<std::uint32_t>& rows) {
    std::vector<std::uint32_t> span(std::size_t{1} << rows.size());
    for (std::uint32_t s = 1; s < span.size(); ++s) {
        const int low = std::countr_zero(s);
        span[s] = span[s & (s - 1)] ^ rows[static_cast<std::size_t>(low)];
    }
    return span;
}

// Flat count as a checked 64-bit quantity.
std::uint64_t checked_total(int n, int k, std::uint64_t max_flats) {
    check_dimension(n);
    if (k < 0) throw validation_error("flat dimension k must be >= 0");
    const Count total = total_flats(n, k);
    if (total > Count(max_flats))
        throw ceiling_error("flat enumeration is capped at " +
                            to_decimal(Count(max_flats)) + " flats (asked " +
                            to_decimal(total) + ")");
    return total.convert_to<std::uint64_t>();
}

}  // namespace

PointSet::PointSet(int n) : n_(n) {
    check_dimension(n);
    bits_.assign(((std::uint64_t{1} << n) + 63) / 64, 0);
}

PointSet PointSet::of(int n, const std::vector<std::uint32_t>& points) {
    PointSet s(n);
    for (const std::uint32_t x : points) s.insert(x);
    return s;
}

void PointSet::check(std::uint32_t x) const {
    if (x >> n_ != 0)
        throw validation_error("point outside the 2^n universe");
}

bool PointSet::contains(std::uint32_t x) const {
    check(x);
    return bits_[x >> 6] >> (x & 63) & 1;
}

void PointSet::insert(std::uint32_t x) {
    check(x);
    bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

std::uint64_t PointSet::size() const {
    std::uint64_t total = 0;
    for (const std::uint64_t w : bits_)
        total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::vector<std::uint32_t> PointSet::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::uint64_t x = 0; x < universe_size(); ++x)
        if (bits_[x >> 6] >> (x & 63) & 1)
            out.push_back(static_cast<std::uint32_t>(x));
    return out;
}

std::vector<std::uint32_t> AffineFlat::points() const {
    std::vector<std::uint32_t> pts = span_table(basis);
    for (std::uint32_t& p : pts) p ^= offset;
    std::sort(pts.begin(), pts.end());
    return pts;
}

Count gaussian_binomial(int n, int k) {
    if (n < 0 || k < 0) throw validation_error("gaussian_binomial: n, k >= 0");
    if (k > n) return 0;
    Count g = 1;
    for (int i = 1; i <= k; ++i)
        g = g * (pow2(static_cast<unsigned>(n - k + i)) - 1) /
            (pow2(static_cast<unsigned>(i)) - 1);
    return g;
}

Count total_flats(int n, int k) {
    if (k > n) return 0;
    return gaussian_binomial(n, k) * pow2(static_cast<unsigned>(n - k));
}

void enumerate_flats(int n, int k,
                     const std::function<void(const AffineFlat&)>& fn,
                     std::uint64_t max_flats) {
    const std::uint64_t total = checked_total(n, k, max_flats);
    if (total == 0) return;
    const std::uint64_t offsets_per = std::uint64_t{1} << (n - k);
    AffineFlat flat;
    flat.n = n;
    flat.k = k;
    visit_subspaces(
        n, k, 0, total / offsets_per,
        [&](std::uint64_t sub_idx, const std::vector<std::uint32_t>& rows,
            const std::vector<int>& pivots) {
            flat.basis = rows;
            std::uint32_t pivot_mask = 0;
            for (const int p : pivots) pivot_mask |= 1u << p;
            const std::uint32_t non_pivots =
                static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1) &
                ~pivot_mask;
            // Offsets are exactly the vectors supported on non-pivot
            // positions, ascending: the subset-increment trick walks them in
            // increasing integer order.
            std::uint32_t off = 0;
            std::uint64_t off_idx = 0;
            do {
                flat.offset = off;
                flat.index = sub_idx * offsets_per + off_idx;
                fn(flat);
                off = (off - non_pivots) & non_pivots;
                ++off_idx;
            } while (off != 0);
        });
}

std::vector<AffineFlat> all_flats(int n, int k, std::uint64_t max_flats) {
    std::vector<AffineFlat> out;
    enumerate_flats(
        n, k, [&](const AffineFlat& f) { out.push_back(f); }, max_flats);
    return out;
}

PointSet build_avoider(const Graph& g) {
    const int n = g.n();
    check_dimension(n);
    PointSet s(n);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] =
            static_cast<std::uint32_t>(g.neighbors(v).words()[0]);
    // x lies in S_G iff some edge sits inside x's support; peel the lowest
    // set bit v: either the edge avoids v or it joins v to the rest.
    for (std::uint64_t x = 1; x < s.universe_size(); ++x) {
        const std::uint32_t rest = static_cast<std::uint32_t>(x) &
                                   static_cast<std::uint32_t>(x - 1);
        const int v = std::countr_zero(static_cast<std::uint32_t>(x));
        if (s.contains(rest) || (adj[static_cast<std::size_t>(v)] & rest) != 0)
            s.insert(static_cast<std::uint32_t>(x));
    }
    if (Count(s.size()) + count_fast(g) != pow2(static_cast<unsigned>(n)))
        throw std::logic_error(
            "avoider size does not complement the independent-set count");
    return s;
}

AvoiderVerdict check_avoider(const PointSet& s, int k, int t, int workers,
                             std::uint64_t max_flats) {
    if (t < 0) throw validation_error("check_avoider: t must be >= 0");
    const int n = s.dimension();
    const std::uint64_t total = checked_total(n, k, max_flats);
    AvoiderVerdict verdict;
    verdict.flats_total = total;
    if (total == 0) return verdict;

    const std::uint64_t offsets_per = std::uint64_t{1} << (n - k);
    const std::uint64_t subspaces = total / offsets_per;
    struct Hit {
        std::uint64_t index = 0;
        std::vector<std::uint32_t> basis;
        std::uint32_t offset = 0;
        bool found = false;
    };
    const int nw = std::max(workers, 1);
    std::vector<Hit> hits(static_cast<std::size_t>(nw));
    run_partitioned(
        subspaces, nw, [&](int worker, std::uint64_t begin, std::uint64_t end) {
            Hit& hit = hits[static_cast<std::size_t>(worker)];
            bool stop = false;
            visit_subspaces(
                n, k, begin, end,
                [&](std::uint64_t sub_idx, const std::vector<std::uint32_t>&
                        rows, const std::vector<int>& pivots) {
                    if (stop) return;
                    const std::vector<std::uint32_t> span = span_table(rows);
                    std::uint32_t pivot_mask = 0;
                    for (const int p : pivots) pivot_mask |= 1u << p;
                    const std::uint32_t non_pivots =
                        static_cast<std::uint32_t>((std::uint64_t{1} << n) -
                                                   1) &
                        ~pivot_mask;
                    std::uint32_t off = 0;
                    std::uint64_t off_idx = 0;
                    do {
                        int meet = 0;
                        for (const std::uint32_t sp : span) {
                            meet += s.contains(off ^ sp);
                            if (meet > t) break;
                        }
                        if (meet == t) {
                            hit.found = true;
                            hit.index = sub_idx * offsets_per + off_idx;
                            hit.basis = rows;
                            hit.offset = off;
                            stop = true;
                            return;
                        }
                        off = (off - non_pivots) & non_pivots;
                        ++off_idx;
                    } while (off != 0);
                });
        });

    for (const Hit& hit : hits) {
        if (!hit.found) continue;
        if (!verdict.violator || hit.index < verdict.violator->index) {
            AffineFlat flat;
            flat.n = n;
            flat.k = k;
            flat.basis = hit.basis;
            flat.offset = hit.offset;
            flat.index = hit.index;
            verdict.violator = std::move(flat);
            verdict.pass = false;
        }
    }
    return verdict;
}

SpectrumGapReport spectrum_gap_report(int n, int parallelism) {
    if (n < 1)
        throw validation_error("spectrum_gap_report: n must be at least 1");
    if (n > 6)
        throw ceiling_error("spectrum_gap_report is capped at n = 6");
    const CensusResult c = census(n, parallelism);
    std::vector<Count> sizes;
    sizes.reserve(c.values.size());
    const Count full = pow2(static_cast<unsigned>(n));
    for (const Count& v : c.values.values()) sizes.push_back(full - v);
    std::sort(sizes.begin(), sizes.end());
    SpectrumGapReport report;
    report.n = n;
    report.sizes = ValueSet::of(std::move(sizes));
    report.count = c.ni;
    return report;
}

}  // namespace fibspec
