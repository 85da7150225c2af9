#include "fibspec/spectra.hpp"

#include <algorithm>
#include <set>

#include "fibspec/parallel.hpp"

namespace fibspec {

DigitSupport DigitSupport::of(std::vector<std::uint64_t> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  DigitSupport j;
  j.positions_ = std::move(positions);
  return j;
}

DigitSupport DigitSupport::interval(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw validation_error("digit interval with lo > hi");
  std::vector<std::uint64_t> p;
  p.reserve(hi - lo + 1);
  for (std::uint64_t x = lo; x <= hi; ++x) p.push_back(x);
  return of(std::move(p));
}

bool DigitSupport::contains(std::uint64_t p) const {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

DigitSupport DigitSupport::unite(const DigitSupport& other) const {
  std::vector<std::uint64_t> all = positions_;
  all.insert(all.end(), other.positions_.begin(), other.positions_.end());
  return of(std::move(all));
}

bool DigitSupport::disjoint_with(const DigitSupport& other) const {
  for (auto p : positions_) {
    if (other.contains(p)) return false;
  }
  return true;
}

ValueSet ValueSet::of(std::vector<Count> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ValueSet v;
  v.values_ = std::move(values);
  return v;
}

bool ValueSet::contains(const Count& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

bool ValueSet::subset_of(const ValueSet& other) const {
  return std::includes(other.values_.begin(), other.values_.end(),
                       values_.begin(), values_.end());
}

const Count& ValueSet::min() const {
  if (values_.empty()) throw validation_error("min of empty value set");
  return values_.front();
}

const Count& ValueSet::max() const {
  if (values_.empty()) throw validation_error("max of empty value set");
  return values_.back();
}

ValueSet ValueSet::map_scale(const Count& factor) const {
  if (factor <= 0) throw validation_error("scale factor must be positive");
  std::vector<Count> out;
  out.reserve(values_.size());
  for (const auto& x : values_) out.push_back(x * factor);
  ValueSet v;
  v.values_ = std::move(out);  // order preserved for positive factors
  return v;
}

ValueSet ValueSet::map_shift(const Count& offset) const {
  std::vector<Count> out;
  out.reserve(values_.size());
  for (const auto& x : values_) out.push_back(x + offset);
  ValueSet v;
  v.values_ = std::move(out);
  return v;
}

Count ShiftedDigitSet::cardinality() const {
  return pow2(support.size());
}

bool ShiftedDigitSet::contains(const Count& x) const {
  Count y = x - offset;
  if (y < 0) return false;
  while (y != 0) {
    unsigned p = boost::multiprecision::lsb(y);
    if (!support.contains(p)) return false;
    boost::multiprecision::bit_unset(y, p);
  }
  return true;
}

ValueSet ShiftedDigitSet::expand(std::size_t max_positions) const {
  return expand_digit_set(support, max_positions).map_shift(offset);
}

ValueSet expand_digit_set(const DigitSupport& j, std::size_t max_positions) {
  if (j.size() > max_positions) {
    throw ceiling_error("digit support too large to materialize: " +
                        std::to_string(j.size()) + " positions");
  }
  // Doubling construction.  Since positions are distinct powers, every value
  // in the current list is smaller than the next power, so concatenation
  // keeps the list sorted and duplicate-free (|B(J)| = 2^|J| falls out).
  std::vector<Count> values{Count(0)};
  for (auto p : j.positions()) {
    Count step = pow2(p);
    std::size_t sz = values.size();
    values.reserve(sz * 2);
    for (std::size_t i = 0; i < sz; ++i) values.push_back(values[i] + step);
  }
  return ValueSet::of(std::move(values));
}

ValueSet sumset(const ValueSet& a, const ValueSet& b,
                std::uint64_t max_product) {
  std::uint64_t product =
      static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  if (a.size() != 0 && product / a.size() != b.size()) {
    throw ceiling_error("sumset size overflow");
  }
  if (product > max_product) {
    throw ceiling_error("sumset too large: |A|*|B| = " +
                        std::to_string(product));
  }
  std::vector<Count> out;
  out.reserve(product);
  for (const auto& x : a.values()) {
    for (const auto& y : b.values()) out.push_back(x + y);
  }
  return ValueSet::of(std::move(out));
}

namespace {

// All independent sets of g as member lists.
std::vector<std::vector<int>> independent_sets_of(const Graph& g) {
  if (g.n() > 20) {
    throw ceiling_error("independent-set enumeration side too large");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  // Recursion over the lowest allowed vertex keeps enumeration order stable.
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t allowed) {
    if (allowed == 0) {
      out.push_back(current);
      return;
    }
    int v = std::countr_zero(allowed);
    std::uint32_t rest = allowed & (allowed - 1);
    rec(rest);  // v excluded
    current.push_back(v);
    rec(rest & ~adj[v]);  // v included
    current.pop_back();
  };
  rec(g.n() == 0 ? 0 : ((std::uint32_t{1} << g.n()) - 1));
  return out;
}

// Induced-count table over all subsets of the vertex set: table[mask] =
// i(G[mask]); values fit u64 comfortably at tabling scale.
std::vector<std::uint64_t> induced_count_table(const Graph& g) {
  const int n = g.n();
  if (n > 24) throw ceiling_error("induced-count table side too large");
  std::vector<std::uint32_t> closed(n, 0);
  for (auto [u, v] : g.edges()) {
    closed[u] |= std::uint32_t{1} << v;
    closed[v] |= std::uint32_t{1} << u;
  }
  for (int v = 0; v < n; ++v) closed[v] |= std::uint32_t{1} << v;
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  table[0] = 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int v = std::countr_zero(mask);
    table[mask] = table[mask & ~(std::uint32_t{1} << v)] +
                  table[mask & ~closed[v]];
  }
  return table;
}

}  // namespace

ValueSet spectrum_exhaustive(const Graph& left_in, const Graph& right_in,
                             int workers, int max_bits) {
  const long long bits_ll =
      static_cast<long long>(left_in.n()) * right_in.n();
  if (bits_ll > max_bits) {
    throw ceiling_error("spectrum assignment space too large: " +
                        std::to_string(bits_ll) + " cross-edge bits");
  }
  if (max_bits > 30) {
    throw validation_error("spectrum ceiling above 30 bits is not supported");
  }
  if (left_in.n() == 0 || right_in.n() == 0) {
    // No cross edges exist; the only partial join is the disjoint union.
    return ValueSet::of({count_fast(left_in) * count_fast(right_in)});
  }
  // The spectrum is symmetric in the two sides; enumerate independent sets on
  // the side with fewer of them and table the other side.
  const bool swap = count_fast(right_in) > count_fast(left_in);
  const Graph& left = swap ? right_in : left_in;
  const Graph& right = swap ? left_in : right_in;
  const int nl = left.n();
  const int nr = right.n();
  const int bits = nl * nr;

  std::vector<std::uint64_t> table = induced_count_table(left);
  std::vector<std::vector<int>> right_sets = independent_sets_of(right);
  const std::uint32_t left_full = nl == 0 ? 0 : ((std::uint32_t{1} << nl) - 1);

  const std::uint64_t assignments = std::uint64_t{1} << bits;
  workers = workers < 1 ? 1 : workers;
  std::vector<std::set<std::uint64_t>> local(
      static_cast<std::size_t>(workers));
  // Cross-edge assignment layout: bit w*nl + v <=> edge (v, w); the slice for
  // right vertex w is nl contiguous bits.
  run_partitioned(assignments, workers,
                  [&](int worker, std::uint64_t begin, std::uint64_t end) {
                    auto& sink = local[static_cast<std::size_t>(worker)];
                    for (std::uint64_t a = begin; a < end; ++a) {
                      std::uint64_t total = 0;
                      for (const auto& members : right_sets) {
                        std::uint32_t u = 0;
                        for (int w : members) {
                          u |= static_cast<std::uint32_t>(
                              (a >> (w * nl)) & left_full);
                        }
                        total += table[left_full & ~u];
                      }
                      sink.insert(total);
                    }
                  });
  std::set<std::uint64_t> merged;
  for (const auto& s : local) merged.insert(s.begin(), s.end());
  std::vector<Count> values;
  values.reserve(merged.size());
  for (auto v : merged) values.push_back(Count(v));
  return ValueSet::of(std::move(values));
}

PadLeftResult pad_left_spectrum(const Graph& left, const Graph& right, int t,
                                int workers, int max_bits) {
  if (t < 0) throw validation_error("padding count must be nonnegative");
  ValueSet base = spectrum_exhaustive(left, right, workers, max_bits);
  Graph padded_left = disjoint_union(left, empty_graph(t));
  ValueSet padded = spectrum_exhaustive(padded_left, right, workers, max_bits);
  PadLeftResult out;
  out.scaled = base.map_scale(pow2(static_cast<unsigned>(t)));
  out.shifted =
      base.map_shift((pow2(static_cast<unsigned>(t)) - 1) * count_fast(left));
  out.padded_spectrum = padded;
  out.scaled_contained = out.scaled.subset_of(out.padded_spectrum);
  out.shifted_contained = out.shifted.subset_of(out.padded_spectrum);
  return out;
}

ValueSet combine_spectra(const std::vector<ValueSet>& parts,
                         const Count& i_left, std::uint64_t max_product) {
  if (parts.empty()) {
    throw validation_error("combine_spectra needs at least one part");
  }
  ValueSet acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = sumset(acc, parts[i], max_product);
  }
  Count sub = Count(static_cast<long long>(parts.size()) - 1) * i_left;
  std::vector<Count> out;
  out.reserve(acc.size());
  for (const auto& x : acc.values()) {
    Count y = x - sub;
    if (y < 0) {
      throw validation_error(
          "combine_spectra produced a negative value; inputs are not genuine "
          "spectra over the same left side");
    }
    out.push_back(std::move(y));
  }
  return ValueSet::of(std::move(out));
}

}  // namespace fibspec
