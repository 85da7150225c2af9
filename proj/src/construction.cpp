#include "fibspec/construction.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "fibspec/counting.hpp"
#include "fibspec/parallel.hpp"

namespace fibspec {

namespace {

long long ll_pow_checked(long long base, int exp, const char* what) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<long long>::max() / base) {
      throw ceiling_error(std::string(what) +
                          ": size exceeds 64-bit desk scale");
    }
    r *= base;
  }
  return r;
}

// Advances a 1-indexed odometer over [1, radix]^d, rightmost axis fastest.
// Returns false once the odometer wraps past the last point.
bool advance_point(Point& p, long long radix) {
  for (int j = static_cast<int>(p.size()); j-- > 0;) {
    if (p[j] < radix) {
      ++p[j];
      return true;
    }
    p[j] = 1;
  }
  return false;
}

void check_constraints(const std::vector<AxisConstraint>& constraints, int d,
                       long long max_value, const char* what) {
  std::set<int> axes;
  for (const auto& c : constraints) {
    if (c.axis < 1 || c.axis > d) {
      throw validation_error(std::string(what) + ": axis out of range");
    }
    if (!axes.insert(c.axis).second) {
      throw validation_error(std::string(what) + ": repeated axis");
    }
    if (c.value < 1 || c.value > max_value) {
      throw validation_error(std::string(what) + ": value out of range");
    }
  }
}

bool satisfies(const Point& y, const std::vector<AxisConstraint>& constraints) {
  for (const auto& c : constraints) {
    if (y[c.axis - 1] != c.value) return false;
  }
  return true;
}

void check_point_in(const Point& pt, int d, long long max_value,
                    const char* what) {
  if (static_cast<int>(pt.size()) != d) {
    throw validation_error(std::string(what) + ": point has wrong dimension");
  }
  for (int coord : pt) {
    if (coord < 1 || coord > max_value) {
      throw validation_error(std::string(what) +
                             ": point coordinate out of range");
    }
  }
}

std::set<Point> point_set(const std::vector<Point>& pts) {
  return std::set<Point>(pts.begin(), pts.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// Hypercube geometry

void validate_hypercube(const HypercubeParams& hp) {
  if (hp.d < 1 || hp.d > 60) {
    throw validation_error("hypercube dimension must be in [1, 60]");
  }
  if (hp.m < 1) {
    throw validation_error("hypercube width must be positive");
  }
}

void validate_width_margin(const HypercubeParams& hp) {
  validate_hypercube(hp);
  if (hp.m <= (1LL << hp.d)) {
    throw validation_error("hypercube width must satisfy m > 2^d");
  }
}

std::vector<Point> hypercube_points(const HypercubeParams& hp,
                                    long long max_points) {
  validate_hypercube(hp);
  long long total = ll_pow_checked(hp.m, hp.d, "hypercube_points");
  if (total > max_points) {
    throw ceiling_error("hypercube_points: m^d exceeds the enumeration cap");
  }
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(total));
  Point p(hp.d, 1);
  do {
    out.push_back(p);
  } while (advance_point(p, hp.m));
  return out;
}

Count hyperplane_count(const HypercubeParams& hp,
                       const std::vector<AxisConstraint>& constraints) {
  validate_hypercube(hp);
  check_constraints(constraints, hp.d, 2 * hp.m, "hyperplane_count");
  int ell = static_cast<int>(constraints.size());
  Count result = powi(Count(2 * hp.m), hp.d - ell);
  long long qhat = ll_pow_checked(2 * hp.m, hp.d, "hyperplane_count");
  if (qhat <= 1'000'000) {
    long long seen = 0;
    Point y(hp.d, 1);
    do {
      if (satisfies(y, constraints)) ++seen;
    } while (advance_point(y, 2 * hp.m));
    if (Count(seen) != result) {
      throw std::logic_error("hyperplane_count: enumeration mismatch");
    }
  }
  return result;
}

std::vector<Point> checkered_extension(const std::vector<Point>& s,
                                       const HypercubeParams& hp) {
  validate_hypercube(hp);
  long long qhat = ll_pow_checked(2 * hp.m, hp.d, "checkered_extension");
  if (qhat > 1'000'000) {
    throw ceiling_error("checkered_extension: (2m)^d exceeds the cap");
  }
  for (const auto& pt : s) check_point_in(pt, hp.d, hp.m, "checkered_extension");
  std::set<Point> base = point_set(s);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(qhat / 2));
  Point x(hp.d, 1);
  Point y(hp.d, 0);
  do {
    bool in_s = base.count(x) > 0;
    for (unsigned v = 0; v < (1u << hp.d); ++v) {
      bool even = (std::popcount(v) % 2) == 0;
      if ((in_s && even) || (!in_s && !even)) {
        for (int j = 0; j < hp.d; ++j) {
          y[j] = x[j] + ((v >> j) & 1u ? static_cast<int>(hp.m) : 0);
        }
        out.push_back(y);
      }
    }
  } while (advance_point(x, hp.m));
  std::sort(out.begin(), out.end());
  if (static_cast<long long>(out.size()) != qhat / 2) {
    throw std::logic_error("checkered_extension: size is not (2m)^d / 2");
  }
  return out;
}

Count checkered_hyperplane_count(
    const std::vector<Point>& s, const HypercubeParams& hp,
    const std::vector<AxisConstraint>& constraints) {
  validate_hypercube(hp);
  if (static_cast<int>(constraints.size()) > hp.d - 1) {
    throw validation_error(
        "checkered_hyperplane_count: at most d-1 constraints allowed");
  }
  check_constraints(constraints, hp.d, hp.m, "checkered_hyperplane_count");
  int ell = static_cast<int>(constraints.size());
  Count result = powi(Count(2 * hp.m), hp.d - ell) / 2;
  if (ll_pow_checked(2 * hp.m, hp.d, "checkered_hyperplane_count") <=
      1'000'000) {
    long long seen = 0;
    for (const Point& y : checkered_extension(s, hp)) {
      if (satisfies(y, constraints)) ++seen;
    }
    if (Count(seen) != result) {
      throw std::logic_error("checkered_hyperplane_count: enumeration mismatch");
    }
  }
  return result;
}

long long sigma(const Point& kvec, long long m) {
  if (m < 1) throw validation_error("sigma: width must be positive");
  long long value = 0;
  long long weight = 1;
  for (std::size_t j = 0; j < kvec.size(); ++j) {
    if (kvec[j] < 1 || kvec[j] > m) {
      throw validation_error("sigma: coordinate out of range");
    }
    if (j > 0) weight = ll_pow_checked(m, static_cast<int>(j), "sigma");
    value += (kvec[j] - 1) * weight;
  }
  return value;
}

std::vector<long long> t_schedule(int d, long long m) {
  validate_width_margin({d, m});
  long long md = ll_pow_checked(m, d, "t_schedule");
  long long t1 = (1LL << (d - 1)) * md;
  long long progression = m - (1LL << d);
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long long k = 1; k <= m; ++k) {
    out.push_back(k <= progression ? t1 + (k - 1) * md : t1);
  }
  return out;
}

long long half_term(int d, long long m) {
  validate_hypercube({d, m});
  long long big = ll_pow_checked(2 * m, d, "half_term");
  long long small = ll_pow_checked(2 * m - 1, d, "half_term");
  long long numerator = big - small + 1;
  if (numerator % 2 != 0) {
    throw std::logic_error("half_term: numerator is odd");
  }
  return numerator / 2;
}

// ---------------------------------------------------------------------------
// Main construction

MainParams default_main_params(int d, long long m) {
  validate_width_margin({d, m});
  MainParams p;
  p.hp = {d, m};
  p.epsilon = Rational(1, 1000);
  p.s.assign(static_cast<std::size_t>(m), {});
  p.t = t_schedule(d, m);
  return p;
}

void validate_main_params(const MainParams& p) {
  validate_width_margin(p.hp);
  if (p.epsilon <= Rational(0)) {
    throw validation_error("main params: epsilon must be positive");
  }
  long long m = p.hp.m;
  int d = p.hp.d;
  if (static_cast<long long>(p.s.size()) != m) {
    throw validation_error("main params: need exactly m subsets S_k");
  }
  if (static_cast<long long>(p.t.size()) != m) {
    throw validation_error("main params: need exactly m sizes t_k");
  }
  long long md = ll_pow_checked(m, d, "main params");
  long long nl = ll_pow_checked(m, d + 1, "main params");
  long long t_lo = (1LL << (d - 1)) * md;
  long long t_hi = nl - ((1LL << (d - 1)) + 1) * md + 1;
  for (long long tk : p.t) {
    if (tk < t_lo || tk > t_hi) {
      throw validation_error("main params: t_k outside its admissible range");
    }
  }
  for (const auto& sk : p.s) {
    for (const auto& pt : sk) check_point_in(pt, d, m, "main params");
  }
}

long long qhat_index(const Point& y, const HypercubeParams& hp) {
  validate_hypercube(hp);
  check_point_in(y, hp.d, 2 * hp.m, "qhat_index");
  long long idx = 0;
  for (int j = hp.d; j-- > 0;) {
    idx = idx * (2 * hp.m) + (y[j] - 1);
  }
  return idx;
}

MainGraph build_main_graph(const MainParams& p, long long max_left) {
  validate_main_params(p);
  int d = p.hp.d;
  long long m = p.hp.m;
  long long nl = ll_pow_checked(m, d + 1, "build_main_graph");
  if (nl > max_left) {
    throw ceiling_error("build_main_graph: left side exceeds the cap");
  }

  MainLayout layout;
  layout.qhat_size = ll_pow_checked(2 * m, d, "build_main_graph");
  layout.left_size = nl;
  long long offset = layout.qhat_size;
  for (int j = 1; j <= d; ++j) {
    layout.a_offset.push_back(offset);
    long long size = ll_pow_checked(m, j - 1, "build_main_graph") * (m - 1);
    layout.a_size.push_back(size);
    offset += size;
  }
  long long md = ll_pow_checked(m, d, "build_main_graph");
  layout.a_offset.push_back(offset);
  layout.a_size.push_back(nl - ((1LL << d) + 1) * md + 1);
  offset += layout.a_size.back();
  if (offset != nl) {
    throw std::logic_error("build_main_graph: layout does not tile the side");
  }

  int n_left = static_cast<int>(nl);
  CliqueUnion right = CliqueUnion::of(
      std::vector<int>(static_cast<std::size_t>(d) + 1, static_cast<int>(m)));
  std::vector<VertexSet> nmap(right.vertex_count(), VertexSet(n_left));

  // Fixed neighborhoods: hyperplane slice plus an A_j prefix.
  for (int j = 1; j <= d; ++j) {
    for (long long k = 1; k <= m; ++k) {
      VertexSet& nb = nmap[static_cast<std::size_t>(
          right.index_of(j - 1, static_cast<int>(k) - 1))];
      Point y(d, 1);
      do {
        if (y[j - 1] == k) nb.set(static_cast<int>(qhat_index(y, p.hp)));
      } while (advance_point(y, 2 * m));
      long long prefix = (k - 1) * ll_pow_checked(m, j - 1, "build_main_graph");
      for (long long i = 0; i < prefix; ++i) {
        nb.set(static_cast<int>(layout.a_offset[j - 1] + i));
      }
      long long expected =
          ll_pow_checked(2 * m, d - 1, "build_main_graph") + prefix;
      if (static_cast<long long>(nb.count()) != expected) {
        throw std::logic_error("build_main_graph: fixed neighborhood size");
      }
    }
  }

  // Variable neighborhoods: checkered extension plus an A_{d+1} prefix.
  long long t1 = (1LL << (d - 1)) * md;
  for (long long k = 1; k <= m; ++k) {
    VertexSet& nb = nmap[static_cast<std::size_t>(
        right.index_of(d, static_cast<int>(k) - 1))];
    for (const Point& y :
         checkered_extension(p.s[static_cast<std::size_t>(k - 1)], p.hp)) {
      nb.set(static_cast<int>(qhat_index(y, p.hp)));
    }
    long long tstar = p.t[static_cast<std::size_t>(k - 1)] - t1;
    for (long long i = 0; i < tstar; ++i) {
      nb.set(static_cast<int>(layout.a_offset[static_cast<std::size_t>(d)] + i));
    }
    if (static_cast<long long>(nb.count()) !=
        p.t[static_cast<std::size_t>(k - 1)]) {
      throw std::logic_error("build_main_graph: variable neighborhood size");
    }
  }

  PartialJoin join = PartialJoin::make(empty_graph(n_left), right, std::move(nmap));
  return MainGraph{std::move(join), std::move(layout)};
}

long long lambda_T(const MainParams& p, const Transversal& t) {
  validate_main_params(p);
  check_point_in(t.kvec, p.hp.d, p.hp.m, "lambda_T");
  if (t.k < 1 || t.k > p.hp.m) {
    throw validation_error("lambda_T: free-block value out of range");
  }
  return p.t[static_cast<std::size_t>(t.k - 1)] + sigma(t.kvec, p.hp.m) +
         half_term(p.hp.d, p.hp.m);
}

ClosedForm closed_form(const MainParams& p, int workers,
                       long long max_transversals) {
  validate_main_params(p);
  int d = p.hp.d;
  long long m = p.hp.m;
  long long nl = ll_pow_checked(m, d + 1, "closed_form");
  long long md = ll_pow_checked(m, d, "closed_form");
  long long odometer = ll_pow_checked(m + 1, d + 1, "closed_form");
  if (odometer > max_transversals) {
    throw ceiling_error("closed_form: transversal space exceeds the cap");
  }
  long long half = half_term(d, m);
  long long q_slice = ll_pow_checked(2 * m, d - 1, "closed_form");
  bool membership = (d % 2 == 1);

  // |intersection of the chosen neighborhoods|; S-independent by the
  // halving property as long as the transversal is partial.
  auto inter_size = [&](const std::vector<std::pair<int, long long>>& chosen)
      -> long long {
    int ell = static_cast<int>(chosen.size());
    bool special = false;
    for (const auto& [j, k] : chosen) {
      if (j == d + 1) special = true;
    }
    if (!special) {
      if (ell == 1) {
        auto [j, k] = chosen.front();
        return q_slice + (k - 1) * ll_pow_checked(m, j - 1, "closed_form");
      }
      return ll_pow_checked(2 * m, d - ell, "closed_form");
    }
    if (ell == 1) {
      return p.t[static_cast<std::size_t>(chosen.front().second - 1)];
    }
    return ll_pow_checked(2 * m, d - ell + 1, "closed_form") / 2;
  };

  // Partial transversals, partitioned by odometer index with a
  // deterministic worker-order reduction.
  if (workers < 1) workers = 1;
  std::vector<Count> partial(static_cast<std::size_t>(workers), Count(0));
  run_partitioned(
      static_cast<std::uint64_t>(odometer), workers,
      [&](int worker, std::uint64_t begin, std::uint64_t end) {
        Count local = 0;
        std::vector<std::pair<int, long long>> chosen;
        std::vector<std::pair<int, long long>> subset;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          std::uint64_t rest = idx;
          chosen.clear();
          for (int j = 1; j <= d + 1; ++j) {
            long long k = static_cast<long long>(
                rest % static_cast<std::uint64_t>(m + 1));
            rest /= static_cast<std::uint64_t>(m + 1);
            if (k > 0) chosen.emplace_back(j, k);
          }
          if (static_cast<int>(chosen.size()) > d) continue;  // full: below
          long long covered = 0;
          unsigned limit = 1u << chosen.size();
          for (unsigned mask = 1; mask < limit; ++mask) {
            subset.clear();
            for (std::size_t b = 0; b < chosen.size(); ++b) {
              if (mask >> b & 1u) subset.push_back(chosen[b]);
            }
            long long sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
            covered += sign * inter_size(subset);
          }
          local += pow2(static_cast<unsigned long long>(nl - covered));
        }
        partial[static_cast<std::size_t>(worker)] = std::move(local);
      });

  ClosedForm form;
  form.c = 0;
  for (const Count& piece : partial) form.c += piece;

  // Full transversals: base part 2^(ell) joins c, toggled part becomes a term.
  Point kvec(d, 1);
  do {
    long long sig = sigma(kvec, m);
    for (long long k = 1; k <= m; ++k) {
      long long lambda = p.t[static_cast<std::size_t>(k - 1)] + sig + half;
      long long ell = nl - lambda;
      if (ell < 0) {
        throw std::logic_error("closed_form: negative exponent");
      }
      form.c += pow2(static_cast<unsigned long long>(ell));
      form.terms.push_back({kvec, k, lambda, ell, membership});
    }
  } while (advance_point(kvec, m));

  // The progression part k <= m - 2^d must realize an exact digit interval.
  long long progression = m - (1LL << d);
  std::vector<long long> ells;
  for (const auto& term : form.terms) {
    if (term.k <= progression) ells.push_back(term.ell);
  }
  std::sort(ells.begin(), ells.end());
  long long t1 = (1LL << (d - 1)) * md;
  form.ell_lo = t1 + 1 - half;
  form.ell_hi = nl - t1 - half;
  bool exact = static_cast<long long>(ells.size()) ==
               form.ell_hi - form.ell_lo + 1;
  for (std::size_t i = 0; exact && i < ells.size(); ++i) {
    exact = ells[i] == form.ell_lo + static_cast<long long>(i);
  }
  if (!exact) {
    throw std::logic_error("closed_form: exponents do not tile the interval");
  }
  return form;
}

Count closed_form_value(const ClosedForm& form, const MainParams& p) {
  validate_main_params(p);
  std::vector<std::set<Point>> chosen;
  chosen.reserve(p.s.size());
  for (const auto& sk : p.s) chosen.push_back(point_set(sk));
  Count value = form.c;
  for (const auto& term : form.terms) {
    bool in_s =
        chosen[static_cast<std::size_t>(term.k - 1)].count(term.kvec) > 0;
    if (in_s == term.membership) {
      value += pow2(static_cast<unsigned long long>(term.ell));
    }
  }
  return value;
}

MainParams encode_digits(const MainParams& base,
                         const std::map<long long, int>& target) {
  validate_main_params(base);
  int d = base.hp.d;
  long long m = base.hp.m;
  if (base.t != t_schedule(d, m)) {
    throw validation_error(
        "encode_digits: digit control needs the canonical t-schedule");
  }
  long long nl = ll_pow_checked(m, d + 1, "encode_digits");
  long long md = ll_pow_checked(m, d, "encode_digits");
  long long half = half_term(d, m);
  long long t1 = (1LL << (d - 1)) * md;
  long long lo = t1 + 1 - half;
  long long hi = nl - t1 - half;
  long long progression = m - (1LL << d);

  // Zero-contribution start: S_k empty when toggling is membership (d odd),
  // the full grid when it is non-membership (d even).
  bool membership = (d % 2 == 1);
  std::vector<std::set<Point>> chosen(static_cast<std::size_t>(m));
  if (!membership) {
    std::set<Point> full;
    for (const Point& pt : hypercube_points(base.hp)) full.insert(pt);
    chosen.assign(static_cast<std::size_t>(m), full);
  }

  for (const auto& [position, bit] : target) {
    if (bit != 0 && bit != 1) {
      throw validation_error("encode_digits: bits must be 0 or 1");
    }
    if (position < lo || position > hi) {
      throw validation_error(
          "encode_digits: target position outside the covered interval");
    }
    if (bit == 0) continue;  // the zero-contribution start already encodes it
    long long lambda = nl - position;
    long long v = lambda - half - t1;
    long long k = v / md + 1;
    long long rest = v % md;
    if (k < 1 || k > progression) {
      throw std::logic_error("encode_digits: decoded block out of range");
    }
    Point kvec(d, 1);
    for (int j = 0; j < d; ++j) {
      kvec[j] = static_cast<int>(rest % m) + 1;
      rest /= m;
    }
    if (membership) {
      chosen[static_cast<std::size_t>(k - 1)].insert(kvec);
    } else {
      chosen[static_cast<std::size_t>(k - 1)].erase(kvec);
    }
  }

  MainParams out = base;
  out.s.clear();
  out.s.reserve(chosen.size());
  for (const auto& sk : chosen) {
    out.s.emplace_back(sk.begin(), sk.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combination planning

namespace {

// Largest r with r^k <= x.
Count integer_root(const Count& x, int k) {
  if (x < 0) throw validation_error("integer_root: negative radicand");
  if (x == 0) return 0;
  Count lo = 1;
  Count hi = 2;
  while (powi(hi, static_cast<unsigned long long>(k)) <= x) hi <<= 1;
  while (lo + 1 < hi) {
    Count mid = (lo + hi) / 2;
    if (powi(mid, static_cast<unsigned long long>(k)) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

ChooseMResult choose_m(int d, int q, const Rational& delta) {
  if (d < 5) throw validation_error("choose_m: dimension must be at least 5");
  if (q < 1 || q > 2 * d + 3) {
    throw validation_error("choose_m: q must lie in [1, 2d+3]");
  }
  if (delta <= Rational(0)) {
    throw validation_error("choose_m: delta must be positive");
  }
  ChooseMResult result;
  result.d = d;
  result.q = q;
  result.delta = delta;
  result.delta_prime = Rational(4) * delta;
  unsigned long long exponent =
      static_cast<unsigned long long>(d + 2) *
          static_cast<unsigned long long>(d + 2) -
      static_cast<unsigned long long>(q);
  result.x = pow2(exponent);

  Count m = integer_root(result.x, d + 1);
  Count cap = pow2(static_cast<unsigned long long>(d + 3));
  if (m > cap) m = cap;
  Count floor_m = pow2(static_cast<unsigned long long>(d + 1));
  Count power = powi(m, static_cast<unsigned long long>(d + 1));
  const Count& num = result.delta_prime.numerator();
  const Count& den = result.delta_prime.denominator();
  bool lower_ok = (8 * den + 9 * num) * result.x <= 9 * den * power;
  result.found = m >= floor_m && power <= result.x && lower_ok;
  if (result.found) result.m = m;
  return result;
}

CombinationPlan plan_combination(int big_d, const Rational& delta, int d0) {
  if (d0 < 5) {
    throw validation_error("plan_combination: d0 must be at least 5");
  }
  if (big_d <= d0) {
    throw validation_error("plan_combination: need D > d0");
  }
  if (delta <= Rational(0)) {
    throw validation_error("plan_combination: delta must be positive");
  }

  CombinationPlan plan;
  plan.big_d = big_d;
  plan.d0 = d0;
  plan.delta = delta;
  unsigned long long n0_exp = static_cast<unsigned long long>(big_d + 1) *
                              static_cast<unsigned long long>(big_d + 1);
  plan.n0 = pow2(n0_exp);
  plan.y0 = {ceil_scale(Rational(1, 4) + delta, plan.n0),
             floor_scale(Rational(3, 4) - delta, plan.n0)};
  unsigned long long a_exp = static_cast<unsigned long long>(d0 + 1) *
                             static_cast<unsigned long long>(d0 + 1);
  plan.a = ceil_div(pow2(a_exp), 3);
  plan.target = {plan.a, plan.n0 - plan.a};
  plan.shifts_ok = true;
  Rational one_plus_eps = Rational(1) + Rational(4) * delta;

  Count right_sum = 0;
  for (int d = d0; d < big_d; ++d) {
    for (int q = 1; q <= 2 * d + 3; ++q) {
      ChooseMResult cm = choose_m(d, q, delta);
      if (!cm.found) {
        plan.failures.push_back("block d=" + std::to_string(d) + " q=" +
                                std::to_string(q) + ": no admissible width");
        continue;
      }
      PlanBlock block;
      block.d = d;
      block.q = q;
      block.m = cm.m;
      block.x = cm.x;
      block.n_block = powi(cm.m, static_cast<unsigned long long>(d + 1));
      block.y = {ceil_div(cm.x, 3), cm.x - ceil_div(cm.x, 3)};
      block.z = {plan.n0 - block.y.hi, plan.n0 - block.y.lo};
      block.t = plan.n0 - cm.x;
      if (block.t < 0 || block.t > plan.n0 - block.n_block) {
        plan.shifts_ok = false;
        plan.failures.push_back("block d=" + std::to_string(d) + " q=" +
                                std::to_string(q) +
                                ": shift outside [0, n0 - n_j]");
      }

      // Digit-interval certificates, both the slack form and the exact form.
      Count base = pow2(static_cast<unsigned long long>(d - 1)) *
                   powi(cm.m, static_cast<unsigned long long>(d));
      Count eps_lo = ceil_scale(one_plus_eps, base);
      Count eps_hi = block.n_block - eps_lo;
      block.eps_certified = eps_lo <= block.y.lo && block.y.hi <= eps_hi;
      Count two_m = 2 * cm.m;
      Count half =
          (powi(two_m, static_cast<unsigned long long>(d)) -
           powi(two_m - 1, static_cast<unsigned long long>(d)) + 1) /
          2;
      Count real_lo = base + 1 - half;
      Count real_hi = block.n_block - base - half;
      block.realized_certified =
          real_lo <= block.y.lo && block.y.hi <= real_hi;
      if (!block.eps_certified) {
        plan.failures.push_back("block d=" + std::to_string(d) + " q=" +
                                std::to_string(q) +
                                ": digits escape the slack interval");
      }
      if (!block.realized_certified) {
        plan.failures.push_back("block d=" + std::to_string(d) + " q=" +
                                std::to_string(q) +
                                ": digits escape the exact interval");
      }
      right_sum += Count(d + 1) * cm.m;
      plan.blocks.push_back(std::move(block));
    }
  }

  // Gap-free cover of the target by y0 and every y and z, left to right.
  std::vector<Interval> intervals{plan.y0};
  for (const auto& block : plan.blocks) {
    intervals.push_back(block.y);
    intervals.push_back(block.z);
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  bool started = false;
  bool failed = false;
  Count covered_to = 0;
  for (const auto& iv : intervals) {
    if (!started) {
      if (iv.lo > plan.target.lo) {
        plan.failures.push_back("cover misses the left endpoint");
        failed = true;
        break;
      }
      covered_to = iv.hi;
      started = true;
    } else {
      if (iv.lo > covered_to + 1) {
        if (covered_to >= plan.target.hi) break;
        plan.failures.push_back("cover gap after " + to_decimal(covered_to));
        failed = true;
        break;
      }
      if (iv.hi > covered_to) covered_to = iv.hi;
    }
  }
  plan.cover_ok = started && !failed && covered_to >= plan.target.hi;
  if (started && !failed && covered_to < plan.target.hi) {
    plan.failures.push_back("cover stops before the right endpoint");
  }

  plan.spectrum_exponent = plan.n0 - 2 * plan.a;
  plan.extra_vertices =
      Count(big_d + 1) * pow2(static_cast<unsigned long long>(big_d + 1)) +
      2 * right_sum;
  plan.total_vertices = plan.n0 + plan.extra_vertices;

  bool blocks_ok = static_cast<int>(plan.blocks.size()) ==
                   big_d * big_d + 2 * big_d - d0 * d0 - 2 * d0;
  for (const auto& block : plan.blocks) {
    blocks_ok = blocks_ok && block.eps_certified && block.realized_certified;
  }
  plan.certified =
      plan.cover_ok && plan.shifts_ok && blocks_ok && plan.failures.empty();
  return plan;
}

// ---------------------------------------------------------------------------
// Desk-scale combination

namespace {

// Minimal c with B(y) + c inside the spectrum; every admissible c is itself
// a spectrum element because 0 is in every digit set.
Count minimal_certifying_shift(const ValueSet& spectrum, const Interval& y,
                               const std::string& what) {
  DigitSupport support =
      DigitSupport::interval(y.lo.convert_to<std::uint64_t>(),
                             y.hi.convert_to<std::uint64_t>());
  ValueSet digits = expand_digit_set(support);
  for (const Count& candidate : spectrum.values()) {
    bool ok = true;
    for (const Count& b : digits.values()) {
      if (!spectrum.contains(candidate + b)) {
        ok = false;
        break;
      }
    }
    if (ok) return candidate;
  }
  throw validation_error(what + ": no shift certifies the digit set");
}

void validate_toy_interval(const Interval& y, long long n_cap,
                           const std::string& what) {
  if (y.lo < 0 || y.lo > y.hi || y.hi > n_cap) {
    throw validation_error(what + ": digit interval outside [0, n]");
  }
}

}  // namespace

ToyCertificate build_combined_toy(const ToyPlan& plan, int workers) {
  if (plan.n0 < 1 || plan.n0 > 8) {
    throw validation_error("toy plan: n0 must lie in [1, 8]");
  }
  if (plan.a0.n() < 1 || plan.a0.n() > 4) {
    throw validation_error("toy plan: base block must have 1..4 vertices");
  }
  validate_toy_interval(plan.y0, plan.n0, "toy plan base");
  for (const auto& block : plan.blocks) {
    if (block.block.n() < 1 || block.block.n() > 4) {
      throw validation_error("toy plan: block must have 1..4 vertices");
    }
    if (block.n_block < 1 || block.n_block > plan.n0) {
      throw validation_error("toy plan: block left side must fit inside n0");
    }
    validate_toy_interval(block.y, block.n_block, "toy plan block");
  }

  Graph left = empty_graph(static_cast<int>(plan.n0));
  ToyCertificate cert;
  cert.c0 = minimal_certifying_shift(
      spectrum_exhaustive(left, plan.a0, workers), plan.y0, "toy plan base");
  cert.c = cert.c0;

  std::vector<Interval> intervals{plan.y0};
  Graph right = plan.a0;
  for (const auto& block : plan.blocks) {
    ToyBlockCertificate bc;
    bc.n_block = block.n_block;
    bc.y = block.y;
    bc.z = {plan.n0 - block.y.hi, plan.n0 - block.y.lo};
    Graph small_left = empty_graph(static_cast<int>(block.n_block));
    bc.c_block = minimal_certifying_shift(
        spectrum_exhaustive(small_left, block.block, workers), block.y,
        "toy plan block");
    bc.t = Count(plan.n0) - (block.y.lo + block.y.hi);
    bc.t_prime = Count(plan.n0 - block.n_block) - bc.t;
    if (bc.t < 0 || bc.t_prime < 0) {
      throw validation_error("toy plan: reflection shift outside [0, n0 - n_j]");
    }
    unsigned long long t = bc.t.convert_to<unsigned long long>();
    unsigned long long tp = bc.t_prime.convert_to<unsigned long long>();
    unsigned long long nb = static_cast<unsigned long long>(block.n_block);
    // Scale by 2^t, then pad the rest: certifies the reflected interval.
    bc.c1 = pow2(t) * bc.c_block + (pow2(tp) - 1) * pow2(nb + t);
    // Pad without scaling: certifies the interval in place.
    bc.c2 = bc.c_block +
            (pow2(static_cast<unsigned long long>(plan.n0) - nb) - 1) * pow2(nb);
    cert.c += bc.c1 + bc.c2;
    intervals.push_back(bc.y);
    intervals.push_back(bc.z);
    right = full_join(right, block.block);
    cert.blocks.push_back(std::move(bc));
  }
  for (const auto& block : plan.blocks) {
    right = full_join(right, block.block);  // the reflected copies
  }

  Count overlap = Count(2) * static_cast<long long>(plan.blocks.size()) *
                  pow2(static_cast<unsigned long long>(plan.n0));
  if (cert.c < overlap) {
    throw validation_error("toy plan: combined shift went negative");
  }
  cert.c -= overlap;

  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  Count reach = intervals.front().hi;
  for (const auto& iv : intervals) {
    if (iv.lo > reach + 1) {
      throw validation_error("toy plan: digit intervals leave a gap");
    }
    if (iv.hi > reach) reach = iv.hi;
  }
  cert.target = {intervals.front().lo, reach};

  cert.join = PartialJoin::make(
      left, right, std::vector<VertexSet>(
                       static_cast<std::size_t>(right.n()),
                       VertexSet(static_cast<int>(plan.n0))));
  cert.spectrum = spectrum_exhaustive(left, right, workers);

  DigitSupport support =
      DigitSupport::interval(cert.target.lo.convert_to<std::uint64_t>(),
                             cert.target.hi.convert_to<std::uint64_t>());
  ValueSet digits = expand_digit_set(support);
  cert.certified = true;
  for (const Count& b : digits.values()) {
    if (!cert.spectrum.contains(cert.c + b)) {
      cert.certified = false;
      break;
    }
  }
  return cert;
}

}  // namespace fibspec
