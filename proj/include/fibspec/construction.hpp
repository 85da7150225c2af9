#pragma once
// The hypercube construction with checkered extensions, its closed-form
// count, the digit encoder, and the interval-combination planner.
//
// The main construction realizes, for parameters (d, m) with m > 2^d, a
// partial join whose left side is the edgeless graph on m^(d+1) vertices
// (an extended hypercube [2m]^d plus auxiliary blocks A_1..A_{d+1}) and
// whose right side is the clique union (d+1) K_m.  The first d cliques have
// fixed hyperplane neighborhoods; the last clique's neighborhoods are the
// checkered extensions (S_k)_c of free subsets S_k of [m]^d, padded to
// prescribed sizes t_k.  Because every intersection of at most d
// neighborhoods has an S-independent size, the independent-set count
// collapses to
//     i(G) = c + sum over full transversals T with A(T) of 2^(ell(T)),
// where c depends only on (d, m, t-schedule) and the exponents ell(T) sweep
// an explicit integer interval as T varies.  Choosing the S_k therefore
// prescribes the binary digits of i(G) - c on that interval: encode_digits
// inverts the map from S-tuples to digit patterns.
//
// The combination planner scales this up: choose_m picks clique widths
// m_{d,q} whose digit intervals, together with their reflections, cover a
// long target interval J; plan_combination certifies the cover and the
// shift arithmetic with exact big integers; build_combined_toy realizes the
// same combination at desk scale and certifies B(J) + c against the
// exhaustive spectrum.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibspec/bigint.hpp"
#include "fibspec/graph.hpp"
#include "fibspec/spectra.hpp"

namespace fibspec {

// ---------------------------------------------------------------------------
// Hypercube geometry

struct HypercubeParams {
  int d = 1;        // dimension >= 1
  long long m = 3;  // width, must satisfy m > 2^d
};

// Validates d >= 1 and m >= 1; the geometric primitives need no more.
void validate_hypercube(const HypercubeParams& hp);

// Additionally requires the width margin m > 2^d, which the t-schedule and
// the realized digit interval rely on.
void validate_width_margin(const HypercubeParams& hp);

// A point of [m]^d or [2m]^d; coordinates are 1-indexed values.
using Point = std::vector<int>;

// One hyperplane constraint: coordinate `axis` (1-indexed) equals `value`.
struct AxisConstraint {
  int axis = 1;
  long long value = 1;
};

// All m^d points of [m]^d in odometer order (axis 1 fastest).
// Throws ceiling_error when m^d exceeds the enumeration cap.
std::vector<Point> hypercube_points(const HypercubeParams& hp,
                                    long long max_points = 1'000'000);

// |Q-hat restricted to the given hyperplanes| = (2m)^(d-ell) for ell
// distinct constraints.  Verified by direct enumeration whenever
// (2m)^d <= enumeration cap.  Throws validation_error on a repeated axis or
// an out-of-range axis/value.
Count hyperplane_count(const HypercubeParams& hp,
                       const std::vector<AxisConstraint>& constraints);

// The checkered extension S_c of S within [2m]^d: the point x + m*v (with
// x in [m]^d, v in {0,1}^d) belongs to S_c iff x is in S and |v| is even,
// or x is not in S and |v| is odd.  Always |S_c| = (2m)^d / 2.
std::vector<Point> checkered_extension(const std::vector<Point>& s,
                                       const HypercubeParams& hp);

// |S_c restricted to ell <= d-1 hyperplanes with values in [1, m]|, which
// equals (2m)^(d-ell) / 2 independently of S.  Verified by enumeration.
// Throws validation_error when ell > d-1 or a value exceeds m (the halving
// property genuinely needs both hypotheses).
Count checkered_hyperplane_count(const std::vector<Point>& s,
                                 const HypercubeParams& hp,
                                 const std::vector<AxisConstraint>& constraints);

// sigma(k_1..k_d) = sum_j (k_j - 1) m^(j-1), the base-m value of the
// d-digit word; a bijection [1,m]^d -> [0, m^d - 1].
long long sigma(const Point& kvec, long long m);

// The t_k schedule: t_k = 2^(d-1) m^d + (k-1) m^d for k <= m - 2^d, and
// t_k = 2^(d-1) m^d for the unused tail k > m - 2^d.
std::vector<long long> t_schedule(int d, long long m);

// The integral correction ((2m)^d - (2m-1)^d + 1) / 2 appearing in every
// full-transversal union size.
long long half_term(int d, long long m);

// ---------------------------------------------------------------------------
// Main construction

struct MainParams {
  HypercubeParams hp;
  Rational epsilon{1, 1000};        // slack parameter, must be > 0
  std::vector<std::vector<Point>> s;  // m subsets of [m]^d, sorted points
  std::vector<long long> t;           // m neighborhood sizes t_k
};

// Schedule t = t_schedule(d, m), every S_k empty, epsilon = 1/1000.
MainParams default_main_params(int d, long long m);

// Checks the size bounds 2^(d-1) m^d <= t_k <= m^(d+1) - (2^(d-1)+1) m^d + 1,
// coordinate ranges of every S_k, and epsilon > 0.
void validate_main_params(const MainParams& p);

// Left-side labeling of the realized partial join: first the extended
// hypercube Q-hat (point y at index sum_j (y_j - 1)(2m)^(j-1)), then the
// padding blocks A_1..A_{d+1} in order.
struct MainLayout {
  long long qhat_size = 0;             // (2m)^d
  std::vector<long long> a_offset;     // start index of A_j, entry j-1
  std::vector<long long> a_size;       // |A_j| = m^(j-1)(m-1); |A_{d+1}| =
                                       //   m^(d+1) - (2^d + 1) m^d + 1
  long long left_size = 0;             // m^(d+1)
};

// The flat left index of a point y of [2m]^d.
long long qhat_index(const Point& y, const HypercubeParams& hp);

struct MainGraph {
  PartialJoin join;  // left = edgeless m^(d+1), right = (d+1) K_m
  MainLayout layout;
};

// Realizes the construction: fixed neighborhoods
//   N(w_{j,k}) = (Q-hat cap {y_j = k}) + the first (k-1) m^(j-1) of A_j
// for j <= d, and variable neighborhoods
//   N(w_{d+1,k}) = (S_k)_c + the first t_k - 2^(d-1) m^d of A_{d+1}.
// Throws ceiling_error when m^(d+1) exceeds max_left.
MainGraph build_main_graph(const MainParams& p, long long max_left = 10'000);

// A full transversal: one clique vertex from each of the d+1 blocks,
// identified by the fixed-block values k_1..k_d and the free-block value k.
struct Transversal {
  Point kvec;        // values in [1, m], one per fixed block
  long long k = 1;   // value in [1, m] for the free block
};

// lambda_T = t_k + sigma(kvec) + half_term: the larger of the two possible
// dominated-set sizes of the full transversal T.
long long lambda_T(const MainParams& p, const Transversal& t);

struct ClosedFormTerm {
  Point kvec;
  long long k = 1;
  long long lambda = 0;    // lambda_T
  long long ell = 0;       // ell(T) = m^(d+1) - lambda_T
  bool membership = true;  // the term toggles on iff
                           //   (kvec in S_k) == membership
};

struct ClosedForm {
  Count c;                            // the S-independent constant
  std::vector<ClosedFormTerm> terms;  // one per full transversal
  long long ell_lo = 0;               // realized digit interval over the
  long long ell_hi = 0;               //   progression part k <= m - 2^d
};

// Computes c by inclusion-exclusion over all partial transversals with
// |T| <= d (every such union size is S-independent) plus the base part
// 2^(ell(T)) of each full transversal; the toggled parts become `terms`.
// The polarity is membership exactly when d is odd.  The partial-transversal
// sum partitions across workers with a deterministic reduction order.
// Throws ceiling_error when (m+1)^(d+1) exceeds max_transversals.
ClosedForm closed_form(const MainParams& p, int workers = 1,
                       long long max_transversals = 10'000'000);

// c + sum of 2^(ell) over the terms whose toggle matches p.s.
Count closed_form_value(const ClosedForm& form, const MainParams& p);

// Inverts the digit map: given target bits on positions inside
// [ell_lo, ell_hi], returns params whose S-tuple realizes exactly those
// bits, with every duplicate-exponent transversal (tail k > m - 2^d) pinned
// to its zero-contribution polarity.  Requires base.t to be the canonical
// t_schedule.  Throws validation_error on a position outside the interval.
MainParams encode_digits(const MainParams& base,
                         const std::map<long long, int>& target);

// ---------------------------------------------------------------------------
// Combination planning

// Closed integer interval [lo, hi] of digit positions.
struct Interval {
  Count lo, hi;

  bool operator==(const Interval&) const = default;
};

// Outcome of the width selection for block (d, q): the largest
// m in [2^(d+1), 2^(d+3)] with m^(d+1) <= X = 2^((d+2)^2 - q), accepted
// when also (8/9 + delta') X <= m^(d+1) with delta' = 4 delta.  Exact
// integer arithmetic throughout; found = false reports a failure of the
// step-ratio argument instead of panicking.
struct ChooseMResult {
  int d = 0;
  int q = 0;
  Rational delta;
  Rational delta_prime;
  Count x;             // 2^((d+2)^2 - q)
  bool found = false;
  Count m;             // meaningful iff found
};

ChooseMResult choose_m(int d, int q, const Rational& delta);

struct PlanBlock {
  int d = 0;
  int q = 0;
  Count m;        // m_{d,q}
  Count x;        // 2^((d+2)^2 - q)
  Count n_block;  // m^(d+1)
  Interval y;     // [ceil(X/3), X - ceil(X/3)]
  Interval z;     // reflection n_0 - y
  Count t;        // left-padding shift n_0 - X
  bool eps_certified = false;       // y inside the (1+4delta)-safe interval
  bool realized_certified = false;  // y inside the exact digit interval
};

struct CombinationPlan {
  int big_d = 0;  // D
  int d0 = 0;
  Rational delta;
  Count n0;       // 2^((D+1)^2)
  Interval y0;    // [ceil((1/4+delta) n0), floor((3/4-delta) n0)]
  Count a;        // ceil(2^((d0+1)^2) / 3)
  Interval target;  // J = [a, n0 - a]
  std::vector<PlanBlock> blocks;   // (d, q) for d in [d0, D-1], q in [1, 2d+3]
  bool cover_ok = false;    // y0, every y and z cover J gap-free
  bool shifts_ok = false;   // every t in [0, n0 - n_block]
  bool certified = false;   // all of the above plus per-block certificates
  std::vector<std::string> failures;
  Count spectrum_exponent;  // the plan certifies at least 2^(n0 - 2a) counts
  Count extra_vertices;     // right-side total (D+1) 2^(D+1) + 2 sum (d+1) m
  Count total_vertices;     // n0 + extra_vertices
};

// Lays out and certifies the full interval-combination plan for target
// dimension D (with n_0 = 2^((D+1)^2)).  Nothing is realized as a graph;
// every hypothesis is checked with exact big integers and any failure is
// recorded against the offending block.
CombinationPlan plan_combination(int big_d, const Rational& delta, int d0 = 5);

// ---------------------------------------------------------------------------
// Desk-scale combination

// One block of a toy plan: a small right-side graph whose spectrum over the
// edgeless n_block-vertex left side must contain B(y) shifted by some c.
struct ToyBlock {
  Graph block;
  long long n_block = 1;
  Interval y;
};

struct ToyPlan {
  long long n0 = 1;
  Graph a0;      // the unreflected base block
  Interval y0;
  std::vector<ToyBlock> blocks;  // each used twice: directly and reflected
};

struct ToyBlockCertificate {
  long long n_block = 1;
  Interval y, z;
  Count c_block;  // minimal shift with B(y) + c_block inside the spectrum
  Count t;        // n0 - (y.lo + y.hi), the reflection shift
  Count t_prime;  // n0 - n_block - t
  Count c1;       // shift certifying B(z) + c1 over the padded left side
  Count c2;       // shift certifying B(y) + c2 over the padded left side
};

struct ToyCertificate {
  PartialJoin join;  // left = edgeless n0, right = a0 v blocks v reflections
  Interval target;   // J = the gap-free union of y0 and all y, z
  Count c;
  Count c0;
  std::vector<ToyBlockCertificate> blocks;
  bool certified = false;  // B(J) + c inside the exhaustive spectrum
  ValueSet spectrum;       // Sp(left, right), exhaustively computed
};

// Realizes the combination at desk scale: finds the minimal certifying
// shifts per block, assembles c by the padding and join identities, and
// checks B(J) + c against spectrum_exhaustive.  Throws validation_error on
// an uncoverable plan (interval gap, impossible shift, or a block whose
// spectrum never contains its digit set) and ceiling_error when the
// exhaustive check is infeasible.
ToyCertificate build_combined_toy(const ToyPlan& plan, int workers = 1);

}  // namespace fibspec
