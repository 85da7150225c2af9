#pragma once
// Digit-set calculus and partial-join spectra.
//
// B(J) is the set of naturals whose binary 1-positions lie inside the finite
// support J; ShiftedDigitSet keeps B(J)+c symbolic (membership tests bit
// masks) because the interesting instances are astronomically large.  The
// partial-join spectrum Sp(G_L, G_R) = { i(G) : G a partial join } is only
// ever materialized exhaustively at small scale, where it doubles as the
// oracle for the two spectrum lemmas:
//   padding the left side with t isolated vertices keeps both
//     2^t * Sp(G_L, G_R)  and  Sp(G_L, G_R) + (2^t - 1) i(G_L)
//   inside Sp(G_L + K-bar_t, G_R); and a full join of right-hand blocks
//   turns the spectrum into a sumset:
//     Sp(G_L, R_1 v ... v R_l) = sum of Sp(G_L, R_j) - (l-1) i(G_L).

#include <cstdint>
#include <vector>

#include "fibspec/bigint.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/graph.hpp"

namespace fibspec {

// Finite set of bit positions, kept sorted and deduplicated.
class DigitSupport {
 public:
  DigitSupport() = default;
  static DigitSupport of(std::vector<std::uint64_t> positions);
  static DigitSupport interval(std::uint64_t lo, std::uint64_t hi);  // [lo, hi]

  const std::vector<std::uint64_t>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool contains(std::uint64_t p) const;
  // Union; the operands need not be disjoint.
  DigitSupport unite(const DigitSupport& other) const;
  bool disjoint_with(const DigitSupport& other) const;

  bool operator==(const DigitSupport&) const = default;

 private:
  std::vector<std::uint64_t> positions_;
};

// Sorted deduplicated set of Counts; the concrete form of small spectra.
class ValueSet {
 public:
  ValueSet() = default;
  static ValueSet of(std::vector<Count> values);

  const std::vector<Count>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const Count& x) const;
  bool subset_of(const ValueSet& other) const;
  const Count& min() const;
  const Count& max() const;

  ValueSet map_scale(const Count& factor) const;   // {factor * x}
  ValueSet map_shift(const Count& offset) const;   // {x + offset}

  bool operator==(const ValueSet&) const = default;

 private:
  std::vector<Count> values_;
};

// B(J) + c without materialization.
struct ShiftedDigitSet {
  DigitSupport support;
  Count offset;

  Count cardinality() const;  // 2^|J|
  bool contains(const Count& x) const;
  // Materializes offset + B(J); throws ceiling_error when |J| > max_positions.
  ValueSet expand(std::size_t max_positions = 20) const;
};

// B(J) itself.  Throws ceiling_error when |J| > max_positions.
ValueSet expand_digit_set(const DigitSupport& j, std::size_t max_positions = 20);

// {a + b}; the product |A| * |B| is capped.
ValueSet sumset(const ValueSet& a, const ValueSet& b,
                std::uint64_t max_product = 10'000'000);

// Sp(G_L, G_R) over all 2^(|V_L| * |V_R|) cross-edge assignments.  The
// assignment space is partitioned across workers and merged
// deterministically.  Throws ceiling_error when |V_L| * |V_R| > max_bits.
ValueSet spectrum_exhaustive(const Graph& left, const Graph& right,
                             int workers = 1, int max_bits = 20);

// Both containments obtained by padding the left side with t isolated
// vertices, certified against the exhaustively computed padded spectrum.
struct PadLeftResult {
  ValueSet scaled;           // 2^t * Sp(G_L, G_R)
  ValueSet shifted;          // Sp(G_L, G_R) + (2^t - 1) i(G_L)
  ValueSet padded_spectrum;  // Sp(G_L + K-bar_t, G_R)
  bool scaled_contained = false;
  bool shifted_contained = false;
};
PadLeftResult pad_left_spectrum(const Graph& left, const Graph& right, int t,
                                int workers = 1, int max_bits = 20);

// Sum of the parts minus (l-1) * i_left.  Throws validation_error if any
// combined value would be negative (inputs were not genuine spectra over a
// common left side).
ValueSet combine_spectra(const std::vector<ValueSet>& parts,
                         const Count& i_left,
                         std::uint64_t max_product = 10'000'000);

}  // namespace fibspec
