// Python bindings for the main operations: exact counts, spectra, the
// census, digit-controlled constructions, combination plans, and affine-flat
// avoiders.  Arbitrary-precision counts cross the boundary as Python ints
// (via decimal strings), so every value is exact.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fibspec/avoider.hpp"
#include "fibspec/census.hpp"
#include "fibspec/cli.hpp"
#include "fibspec/construction.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/graph.hpp"
#include "fibspec/spectra.hpp"

namespace py = pybind11;
using namespace fibspec;

namespace {

py::object py_int(const Count& c) {
    return py::module_::import("builtins").attr("int")(to_decimal(c));
}

py::list py_counts(const std::vector<Count>& xs) {
    py::list out;
    for (const Count& x : xs) out.append(py_int(x));
    return out;
}

py::dict interval_dict(const Interval& iv) {
    py::dict d;
    d["lo"] = py_int(iv.lo);
    d["hi"] = py_int(iv.hi);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "independent-set counts, partial-join spectra, censuses, and "
        "digit-controlled graph constructions";

    py::register_exception<validation_error>(m, "ValidationError",
                                             PyExc_ValueError);
    py::register_exception<ceiling_error>(m, "CeilingError");

    m.def(
        "count",
        [](const std::string& graph6) {
            return py_int(count_fast(parse_graph6(graph6)));
        },
        py::arg("graph6"), "Exact independent-set count i(G).");

    m.def(
        "count_brute",
        [](const std::string& graph6, int max_n) {
            return py_int(count_brute(parse_graph6(graph6), max_n));
        },
        py::arg("graph6"), py::arg("max_n") = 30,
        "i(G) by full subset enumeration (cross-check engine).");

    m.def(
        "independence_polynomial",
        [](const std::string& graph6) {
            return py_counts(
                independence_polynomial(parse_graph6(graph6)).coeffs);
        },
        py::arg("graph6"),
        "Coefficients of the independence polynomial, index = set size.");

    m.def(
        "path_graph6", [](int n) { return emit_graph6(path_graph(n)); },
        py::arg("n"), "graph6 string of the n-vertex path.");

    m.def(
        "spectrum",
        [](const std::string& graph6, int blocks, long long m, int workers,
           int max_bits) {
            if (blocks < 1 || m < 1)
                throw validation_error("blocks and m must be >= 1");
            const Graph left = parse_graph6(graph6);
            const Graph right =
                CliqueUnion::of(std::vector<int>(
                                    static_cast<std::size_t>(blocks),
                                    static_cast<int>(m)))
                    .realize();
            return py_counts(
                spectrum_exhaustive(left, right, workers, max_bits).values());
        },
        py::arg("graph6"), py::arg("blocks") = 1, py::arg("m") = 1,
        py::arg("workers") = 1, py::arg("max_bits") = 20,
        "Partial-join spectrum of a left graph against blocks x K_m.");

    m.def(
        "census",
        [](int n, int parallelism) {
            const CensusResult r = census(n, parallelism);
            py::dict d;
            py::list values;
            for (const Count& v : r.values.values())
                values.append(v.convert_to<std::uint64_t>());
            d["n"] = r.n;
            d["values"] = values;
            d["ni"] = r.ni;
            d["graphs"] = r.graphs_enumerated;
            d["elapsed_seconds"] = r.elapsed_seconds;
            return d;
        },
        py::arg("n"), py::arg("parallelism") = 1,
        "All realized i(G) over the 2^C(n,2) labelled graphs on n vertices.");

    m.def(
        "matching_bound_audit",
        [](int n, int parallelism) {
            const MatchingBoundReport r = matching_bound_audit(n, parallelism);
            py::dict d;
            d["n"] = r.n;
            d["graphs"] = r.graphs_enumerated;
            d["violations"] = r.violations;
            d["max_ratio"] = rational_to_string(r.max_ratio);
            d["max_ratio_count"] = r.max_ratio_count;
            d["witness_graph6"] = r.witness_graph6;
            d["witness_i"] = py_int(r.witness_i);
            d["witness_nu"] = r.witness_nu;
            return d;
        },
        py::arg("n"), py::arg("parallelism") = 1,
        "Audit of i(G) <= 3^nu 2^(n-2nu) over all graphs on n vertices.");

    m.def(
        "closed_form_anchor",
        [](int d, long long m) {
            const ClosedForm form = closed_form(default_main_params(d, m));
            py::dict out;
            out["c"] = py_int(form.c);
            out["ell_lo"] = form.ell_lo;
            out["ell_hi"] = form.ell_hi;
            return out;
        },
        py::arg("d"), py::arg("m"),
        "Anchor count c and controlled bit interval for the (d, m) main "
        "graph.");

    m.def(
        "encode_value",
        [](int d, long long m, const std::string& bits) {
            const MainParams base = default_main_params(d, m);
            const ClosedForm form = closed_form(base);
            const long long width = form.ell_hi - form.ell_lo + 1;
            if (static_cast<long long>(bits.size()) != width)
                throw validation_error("bits must have length " +
                                       std::to_string(width));
            std::map<long long, int> target;
            for (long long i = 0; i < width; ++i) {
                const char ch = bits[static_cast<std::size_t>(i)];
                if (ch != '0' && ch != '1')
                    throw validation_error("bits must be 0/1");
                target[form.ell_lo + i] = ch - '0';
            }
            const MainParams encoded = encode_digits(base, target);
            py::dict out;
            out["c"] = py_int(form.c);
            out["i"] = py_int(closed_form_value(form, encoded));
            out["graph6"] =
                emit_graph6(build_main_graph(encoded).join.realize());
            out["ell_lo"] = form.ell_lo;
            out["ell_hi"] = form.ell_hi;
            return out;
        },
        py::arg("d"), py::arg("m"), py::arg("bits"),
        "Realize chosen binary digits (little-endian over the controlled "
        "interval) in the count of a main graph.");

    m.def(
        "choose_m",
        [](int d, int q, const std::string& delta) {
            const ChooseMResult r = choose_m(d, q, parse_rational(delta));
            py::dict out;
            out["found"] = r.found;
            out["m"] = py_int(r.m);
            out["x"] = py_int(r.x);
            return out;
        },
        py::arg("d"), py::arg("q"), py::arg("delta") = "1/1000",
        "Width choice for one combination block.");

    m.def(
        "plan_combination",
        [](int big_d, const std::string& delta, int d0) {
            const CombinationPlan p =
                plan_combination(big_d, parse_rational(delta), d0);
            py::dict out;
            out["D"] = p.big_d;
            out["d0"] = p.d0;
            out["certified"] = p.certified;
            out["cover_ok"] = p.cover_ok;
            out["shifts_ok"] = p.shifts_ok;
            out["blocks"] = p.blocks.size();
            out["a"] = py_int(p.a);
            out["n0"] = py_int(p.n0);
            out["target"] = interval_dict(p.target);
            out["spectrum_exponent"] = py_int(p.spectrum_exponent);
            out["extra_vertices"] = py_int(p.extra_vertices);
            out["total_vertices"] = py_int(p.total_vertices);
            return out;
        },
        py::arg("D"), py::arg("delta") = "1/1000", py::arg("d0") = 5,
        "Certified block-combination plan at scale D.");

    m.def(
        "build_avoider",
        [](const std::string& graph6) {
            std::vector<std::uint32_t> pts =
                build_avoider(parse_graph6(graph6)).members();
            return pts;
        },
        py::arg("graph6"),
        "Sorted points of S_G, the union of edge flats; |S_G| = 2^n - "
        "i(G).");

    m.def(
        "check_avoider",
        [](int n, const std::vector<std::uint32_t>& points, int k, int t,
           int workers) {
            const AvoiderVerdict v = check_avoider(PointSet::of(n, points), k,
                                                   t, workers);
            py::dict out;
            out["pass"] = v.pass;
            out["flats"] = v.flats_total;
            if (v.violator) {
                out["violator_index"] = v.violator->index;
                out["violator_points"] = v.violator->points();
            } else {
                out["violator_index"] = py::none();
            }
            return out;
        },
        py::arg("n"), py::arg("points"), py::arg("k") = 3, py::arg("t") = 1,
        py::arg("workers") = 1,
        "Check that no k-flat meets the set in exactly t points.");

    m.def(
        "spectrum_gap_report",
        [](int n, int parallelism) {
            const SpectrumGapReport r = spectrum_gap_report(n, parallelism);
            py::dict out;
            py::list sizes;
            for (const Count& s : r.sizes.values())
                sizes.append(s.convert_to<std::uint64_t>());
            out["n"] = r.n;
            out["sizes"] = sizes;
            out["count"] = r.count;
            return out;
        },
        py::arg("n"), py::arg("parallelism") = 1,
        "Avoider sizes {2^n - i(G)} realized over all graphs on n "
        "vertices.");

    m.def("entropy_sandwich_holds", &entropy_sandwich_holds, py::arg("n"),
          py::arg("k"),
          "Exact binomial-entropy sandwich for C(n, k).");
    m.def("solve_mu0", &solve_mu0, py::arg("tol") = 1e-12,
          "Root of (1 + 2 mu) H(1/(1 + 2 mu)) = 1.");
    m.def("binary_entropy", &binary_entropy, py::arg("x"));
    m.def(
        "upper_bound_eval",
        [](double n) {
            const UpperBoundEval e = upper_bound_eval(n);
            py::dict out;
            out["first_exponent"] = e.first_exponent;
            out["second_exponent"] = e.second_exponent;
            out["total_log2"] = e.total_log2;
            out["envelope_log2"] = e.envelope_log2;
            return out;
        },
        py::arg("n"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"),
        "Run the command-line interface in process; returns (exit_code, "
        "stdout, stderr).");
}
