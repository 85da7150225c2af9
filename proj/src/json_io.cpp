#include "fibspec/json_io.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "fibspec/errors.hpp"

namespace fibspec {
namespace {

using nlohmann::json;

json counts_json(const std::vector<Count>& xs) {
    json arr = json::array();
    for (const Count& x : xs) arr.push_back(to_decimal(x));
    return arr;
}

json interval_json(const Interval& iv) {
    return json{{"lo", to_decimal(iv.lo)}, {"hi", to_decimal(iv.hi)}};
}

json point_json(const Point& p) {
    json arr = json::array();
    for (const int c : p) arr.push_back(c);
    return arr;
}

std::string hex_string(std::uint32_t x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", x);
    return buf;
}

std::uint32_t parse_point(const json& j) {
    if (j.is_number_unsigned()) return j.get<std::uint32_t>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return static_cast<std::uint32_t>(std::stoul(s, nullptr, 0));
        } catch (const std::exception&) {
            throw validation_error("unparseable point: " + s);
        }
    }
    throw validation_error("points must be numbers or strings");
}

}  // namespace

json value_set_json(const ValueSet& v) { return counts_json(v.values()); }

json shifted_digit_set_json(const ShiftedDigitSet& s) {
    json support = json::array();
    for (const std::uint64_t p : s.support.positions()) support.push_back(p);
    return json{{"support", support}, {"offset", to_decimal(s.offset)}};
}

json polynomial_json(const IndependencePolynomial& p) {
    return json{{"coefficients", counts_json(p.coeffs)},
                {"degree", p.degree()},
                {"i", to_decimal(p.value_at_one())}};
}

json census_json(const CensusResult& c) {
    json values = json::array();
    for (const Count& v : c.values.values())
        values.push_back(v.convert_to<std::uint64_t>());
    return json{{"n", c.n},
                {"values", values},
                {"Ni", c.ni},
                {"graphs", c.graphs_enumerated},
                {"elapsed_seconds", c.elapsed_seconds}};
}

json matching_report_json(const MatchingBoundReport& r) {
    return json{{"n", r.n},
                {"graphs", r.graphs_enumerated},
                {"violations", r.violations},
                {"max_ratio", rational_to_string(r.max_ratio)},
                {"max_ratio_count", r.max_ratio_count},
                {"witness_graph6", r.witness_graph6},
                {"witness_i", to_decimal(r.witness_i)},
                {"witness_nu", r.witness_nu}};
}

json main_params_json(const MainParams& p) {
    json s = json::array();
    for (const auto& sk : p.s) {
        json members = json::array();
        for (const Point& pt : sk) members.push_back(point_json(pt));
        s.push_back(members);
    }
    json t = json::array();
    for (const long long tk : p.t) t.push_back(tk);
    return json{{"d", p.hp.d},
                {"m", p.hp.m},
                {"epsilon", rational_to_string(p.epsilon)},
                {"s", s},
                {"t", t}};
}

json closed_form_json(const ClosedForm& c) {
    return json{{"c", to_decimal(c.c)},
                {"terms", c.terms.size()},
                {"ell_lo", c.ell_lo},
                {"ell_hi", c.ell_hi}};
}

json combination_plan_json(const CombinationPlan& p) {
    json blocks = json::array();
    for (const PlanBlock& b : p.blocks)
        blocks.push_back(json{{"d", b.d},
                              {"q", b.q},
                              {"m", to_decimal(b.m)},
                              {"x", to_decimal(b.x)},
                              {"n", to_decimal(b.n_block)},
                              {"y", interval_json(b.y)},
                              {"z", interval_json(b.z)},
                              {"t", to_decimal(b.t)},
                              {"eps_certified", b.eps_certified},
                              {"realized_certified", b.realized_certified}});
    return json{{"D", p.big_d},
                {"d0", p.d0},
                {"delta", rational_to_string(p.delta)},
                {"n0", to_decimal(p.n0)},
                {"y0", interval_json(p.y0)},
                {"a", to_decimal(p.a)},
                {"target", interval_json(p.target)},
                {"blocks", blocks},
                {"cover_ok", p.cover_ok},
                {"shifts_ok", p.shifts_ok},
                {"certified", p.certified},
                {"failures", p.failures},
                {"spectrum_exponent", to_decimal(p.spectrum_exponent)},
                {"extra_vertices", to_decimal(p.extra_vertices)},
                {"total_vertices", to_decimal(p.total_vertices)}};
}

json toy_certificate_json(const ToyCertificate& c) {
    json blocks = json::array();
    for (const ToyBlockCertificate& b : c.blocks)
        blocks.push_back(json{{"n", b.n_block},
                              {"y", interval_json(b.y)},
                              {"z", interval_json(b.z)},
                              {"c_block", to_decimal(b.c_block)},
                              {"t", to_decimal(b.t)},
                              {"t_prime", to_decimal(b.t_prime)},
                              {"c1", to_decimal(b.c1)},
                              {"c2", to_decimal(b.c2)}});
    return json{{"target", interval_json(c.target)},
                {"c", to_decimal(c.c)},
                {"c0", to_decimal(c.c0)},
                {"blocks", blocks},
                {"certified", c.certified},
                {"spectrum", value_set_json(c.spectrum)}};
}

json point_set_json(const PointSet& s, bool include_points) {
    json j{{"n", s.dimension()}, {"size", s.size()}};
    if (include_points) {
        json points = json::array();
        for (const std::uint32_t x : s.members())
            points.push_back(hex_string(x));
        j["points"] = points;
    }
    return j;
}

json flat_json(const AffineFlat& f) {
    json basis = json::array();
    for (const std::uint32_t row : f.basis) basis.push_back(hex_string(row));
    return json{{"n", f.n},
                {"k", f.k},
                {"basis", basis},
                {"offset", hex_string(f.offset)},
                {"index", f.index}};
}

json verdict_json(const AvoiderVerdict& v) {
    json j{{"pass", v.pass}, {"flats", v.flats_total}};
    if (v.violator) j["violator"] = flat_json(*v.violator);
    return j;
}

json gap_report_json(const SpectrumGapReport& r) {
    json sizes = json::array();
    for (const Count& s : r.sizes.values())
        sizes.push_back(s.convert_to<std::uint64_t>());
    return json{{"n", r.n}, {"sizes", sizes}, {"count", r.count}};
}

PointSet point_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw validation_error("point set JSON needs an object with \"n\"");
    const int n = j.at("n").get<int>();
    PointSet s(n);
    if (j.contains("points"))
        for (const json& p : j.at("points")) s.insert(parse_point(p));
    return s;
}

}  // namespace fibspec
