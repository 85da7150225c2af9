#include "fibspec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "fibspec/avoider.hpp"
#include "fibspec/census.hpp"
#include "fibspec/construction.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/graph.hpp"
#include "fibspec/json_io.hpp"
#include "fibspec/parallel.hpp"
#include "fibspec/spectra.hpp"

namespace fibspec {
namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("malformed JSON input: ") +
                               e.what());
    }
    return j;
}

// Resolves a graph from --graph6 or from an --input JSON {"graph6": "..."}.
Graph load_graph(const std::string& graph6, const std::string& input) {
    if (!graph6.empty() && !input.empty())
        throw validation_error("give either --graph6 or --input, not both");
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!input.empty()) {
        const json j = read_json_file(input);
        if (!j.is_object() || !j.contains("graph6"))
            throw validation_error("input JSON needs a \"graph6\" field");
        return parse_graph6(j.at("graph6").get<std::string>());
    }
    throw validation_error("a graph is required (--graph6 or --input)");
}

json graph_payload(const Graph& g) {
    if (g.n() <= 62) return json{{"n", g.n()}, {"graph6", emit_graph6(g)}};
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.n()}, {"edges", edges}};
}

void render_table(const json& payload, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& [key, value] : payload.items())
        width = std::max(width, key.size());
    for (const auto& [key, value] : payload.items()) {
        out << key << std::string(width - key.size() + 2, ' ');
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// verify-lemmas: each check re-derives one verified statement end to end.

struct LemmaCheck {
    std::string name;
    std::function<bool(std::mt19937_64&, int)> run;  // (rng, workers)
};

PartialJoin random_partial_join(std::mt19937_64& rng) {
    const int nl = 1 + static_cast<int>(rng() % 4);
    const Graph left = random_graph(nl, 0.5, rng);
    std::vector<VertexSet> nmap;
    if (rng() % 2 == 0) {
        const int blocks = 1 + static_cast<int>(rng() % 2);
        std::vector<int> sizes;
        for (int b = 0; b < blocks; ++b)
            sizes.push_back(1 + static_cast<int>(rng() % 2));
        const CliqueUnion right = CliqueUnion::of(sizes);
        for (int w = 0; w < right.vertex_count(); ++w) {
            VertexSet s(nl);
            for (int v = 0; v < nl; ++v)
                if (rng() % 2 == 0) s.set(v);
            nmap.push_back(s);
        }
        return PartialJoin::make(left, right, std::move(nmap));
    }
    const Graph right = random_graph(1 + static_cast<int>(rng() % 3), 0.5, rng);
    for (int w = 0; w < right.n(); ++w) {
        VertexSet s(nl);
        for (int v = 0; v < nl; ++v)
            if (rng() % 2 == 0) s.set(v);
        nmap.push_back(s);
    }
    return PartialJoin::make(left, right, std::move(nmap));
}

std::vector<LemmaCheck> lemma_checks() {
    std::vector<LemmaCheck> checks;
    checks.push_back({"fibonacci-path-counts", [](std::mt19937_64&, int) {
        Count a = 1, b = 2;  // F(2), F(3)
        for (int n = 1; n <= 25; ++n) {
            const Count expect = b;  // F(n+2)
            if (count_fast(path_graph(n)) != expect) return false;
            const Count next = a + b;
            a = b;
            b = next;
        }
        return true;
    }});
    checks.push_back({"engine-agreement", [](std::mt19937_64& rng, int) {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 12);
            const Graph g = random_graph(n, 0.5, rng);
            const Count brute = count_brute(g);
            if (count_fast(g) != brute) return false;
            if (independence_polynomial(g).value_at_one() != brute)
                return false;
        }
        return true;
    }});
    checks.push_back({"summation-trick", [](std::mt19937_64& rng, int) {
        for (int trial = 0; trial < 20; ++trial) {
            const PartialJoin pj = random_partial_join(rng);
            if (count_via_summation_trick(pj) != count_brute(pj.realize()))
                return false;
        }
        return true;
    }});
    checks.push_back({"padding-containments", [](std::mt19937_64&, int w) {
        const std::vector<Graph> lefts = {empty_graph(1), empty_graph(2),
                                          complete_graph(2)};
        const std::vector<Graph> rights = {complete_graph(1), empty_graph(2),
                                           complete_graph(2)};
        for (const Graph& l : lefts)
            for (const Graph& r : rights)
                for (int t = 1; t <= 2; ++t) {
                    const PadLeftResult p = pad_left_spectrum(l, r, t, w);
                    if (!p.scaled_contained || !p.shifted_contained)
                        return false;
                }
        return true;
    }});
    checks.push_back({"join-spectrum-sumset", [](std::mt19937_64&, int w) {
        const std::vector<Graph> lefts = {empty_graph(1), empty_graph(2),
                                          complete_graph(2)};
        const std::vector<Graph> rights = {complete_graph(1), empty_graph(2),
                                           complete_graph(2)};
        for (const Graph& l : lefts) {
            const Count il = count_fast(l);
            for (const Graph& r1 : rights)
                for (const Graph& r2 : rights) {
                    const ValueSet combined = combine_spectra(
                        {spectrum_exhaustive(l, r1, w),
                         spectrum_exhaustive(l, r2, w)},
                        il);
                    if (!(combined ==
                          spectrum_exhaustive(l, full_join(r1, r2), w)))
                        return false;
                }
        }
        return true;
    }});
    checks.push_back({"checkered-halving", [](std::mt19937_64& rng, int) {
        for (int d = 1; d <= 2; ++d)
            for (long long m = 1; m <= 4; ++m) {
                const HypercubeParams hp{d, m};
                for (int ell = 0; ell <= d - 1; ++ell)
                    for (int trial = 0; trial < 5; ++trial) {
                        std::vector<AxisConstraint> cs;
                        for (int i = 0; i < ell; ++i)
                            cs.push_back(
                                {i + 1, static_cast<long long>(rng() % m) + 1});
                        std::vector<Point> s;
                        for (const Point& p : hypercube_points(hp))
                            if (rng() % 2 == 0) s.push_back(p);
                        const Count got =
                            checkered_hyperplane_count(s, hp, cs);
                        if (got != powi(Count(2 * m),
                                        static_cast<unsigned>(d - ell)) /
                                       2)
                            return false;
                    }
            }
        return true;
    }});
    checks.push_back({"closed-form-vs-oracles", [](std::mt19937_64&, int w) {
        const MainParams p = default_main_params(1, 3);
        const Count c = closed_form(p, w).c;
        const MainGraph g = build_main_graph(p);
        return c == count_via_summation_trick(g.join) &&
               c == count_brute(g.join.realize(), 16);
    }});
    checks.push_back({"transversal-interval-tiling", [](std::mt19937_64&,
                                                        int w) {
        const ClosedForm c13 = closed_form(default_main_params(1, 3), w);
        const ClosedForm c14 = closed_form(default_main_params(1, 4), w);
        const ClosedForm c25 = closed_form(default_main_params(2, 5), w);
        return c13.ell_lo == 3 && c13.ell_hi == 5 && c14.ell_lo == 4 &&
               c14.ell_hi == 11 && c25.ell_lo == 41 && c25.ell_hi == 65;
    }});
    checks.push_back({"digit-control", [](std::mt19937_64&, int w) {
        const MainParams base = default_main_params(1, 3);
        const ClosedForm form = closed_form(base, w);
        for (int pattern = 0; pattern < 8; ++pattern) {
            std::map<long long, int> target;
            for (int b = 0; b < 3; ++b) target[3 + b] = pattern >> b & 1;
            const Count got =
                closed_form_value(form, encode_digits(base, target));
            if (got != form.c + Count(8) * pattern) return false;
        }
        return true;
    }});
    checks.push_back({"choose-m-grid", [](std::mt19937_64&, int) {
        const Rational delta(1, 1000);
        for (int d = 5; d <= 10; ++d)
            for (int q = 1; q <= 2 * d + 3; ++q)
                if (!choose_m(d, q, delta).found) return false;
        return true;
    }});
    checks.push_back({"combination-plan-d8", [](std::mt19937_64&, int) {
        const CombinationPlan p = plan_combination(8, Rational(1, 1000));
        return p.certified && p.cover_ok && p.shifts_ok && p.failures.empty();
    }});
    checks.push_back({"toy-combination-certificate", [](std::mt19937_64&,
                                                        int w) {
        ToyPlan plan;
        plan.n0 = 4;
        plan.a0 = complete_graph(1);
        plan.y0 = {Count(2), Count(2)};
        plan.blocks.push_back({complete_graph(1), 2, {Count(1), Count(1)}});
        const ToyCertificate cert = build_combined_toy(plan, w);
        return cert.certified && cert.c == Count(30) &&
               cert.target == Interval{Count(1), Count(3)};
    }});
    checks.push_back({"matching-bound", [](std::mt19937_64&, int w) {
        for (int n = 1; n <= 5; ++n) {
            const MatchingBoundReport r = matching_bound_audit(n, w);
            if (r.violations != 0 || r.max_ratio != Rational(1)) return false;
        }
        return true;
    }});
    checks.push_back({"entropy-sandwich", [](std::mt19937_64&, int) {
        for (int n = 0; n <= 20; ++n)
            for (int k = 0; k <= n; ++k)
                if (!entropy_sandwich_holds(n, k)) return false;
        return true;
    }});
    checks.push_back({"avoider-3-1", [](std::mt19937_64& rng, int w) {
        for (int n = 1; n <= 4; ++n) {
            const int bits = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits);
                 ++mask) {
                Graph g(n);
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v, ++bit)
                        if (mask >> bit & 1) g.add_edge(u, v);
                if (!check_avoider(build_avoider(g), 3, 1, w).pass)
                    return false;
            }
        }
        for (int trial = 0; trial < 10; ++trial)
            if (!check_avoider(build_avoider(random_graph(6, 0.5, rng)), 3, 1,
                               w)
                     .pass)
                return false;
        return true;
    }});
    return checks;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"independent-set counting, spectra, and constructions"};
    app.require_subcommand(1);

    std::string graph6, input, output, format = "json";
    int parallelism = 0;
    std::uint64_t seed = 2026;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output", output);
        sub->add_option("--parallelism", parallelism);
        return sub;
    };

    // count
    auto* count_cmd = add_common(app.add_subcommand(
        "count", "independent-set count of a graph"));
    count_cmd->add_option("--graph6", graph6);
    count_cmd->add_option("--input", input);

    // poly
    auto* poly_cmd = add_common(app.add_subcommand(
        "poly", "independence polynomial coefficients"));
    poly_cmd->add_option("--graph6", graph6);
    poly_cmd->add_option("--input", input);
    int max_component = 36;
    poly_cmd->add_option("--max-n", max_component);

    // spectrum
    auto* spectrum_cmd = add_common(app.add_subcommand(
        "spectrum", "partial-join spectrum against a union of cliques"));
    spectrum_cmd->add_option("--graph6", graph6);
    spectrum_cmd->add_option("--input", input);
    int sp_blocks = 1;
    long long sp_m = 1;
    int max_bits = 20;
    spectrum_cmd->add_option("--k", sp_blocks);
    spectrum_cmd->add_option("--m", sp_m);
    spectrum_cmd->add_option("--max-bits", max_bits);

    // census
    auto* census_cmd = add_common(app.add_subcommand(
        "census", "realized independent-set counts over all graphs on n "
                  "vertices"));
    int census_n = 0;
    int max_n = 8;
    std::string csv_path;
    census_cmd->add_option("-n,--n", census_n)->required();
    census_cmd->add_option("--max-n", max_n);
    census_cmd->add_option("--csv", csv_path);

    // construct
    auto* construct_cmd = add_common(app.add_subcommand(
        "construct", "build the hypercube main graph for (d, m)"));
    int c_d = 1;
    long long c_m = 3;
    long long max_left = 10'000;
    construct_cmd->add_option("--d", c_d);
    construct_cmd->add_option("--m", c_m);
    construct_cmd->add_option("--max-left", max_left);

    // encode
    auto* encode_cmd = add_common(app.add_subcommand(
        "encode", "realize chosen binary digits in the count of a main "
                  "graph"));
    std::string bits;
    encode_cmd->add_option("--d", c_d);
    encode_cmd->add_option("--m", c_m);
    encode_cmd->add_option("--bits", bits)->required();
    long long max_transversals = 10'000'000;
    encode_cmd->add_option("--max-transversals", max_transversals);

    // combine-plan
    auto* plan_cmd = add_common(app.add_subcommand(
        "combine-plan", "certified block-combination plan at scale D"));
    int plan_d = 8;
    int plan_d0 = 5;
    std::string delta = "1/1000";
    plan_cmd->add_option("-D,--D", plan_d)->required();
    plan_cmd->add_option("--delta", delta);
    plan_cmd->add_option("--d0", plan_d0);

    // avoider
    auto* avoider_cmd = add_common(app.add_subcommand(
        "avoider", "build and check affine-flat avoiders in F_2^n"));
    avoider_cmd->add_option("--graph6", graph6);
    avoider_cmd->add_option("--input", input);
    int av_n = 0;
    int av_k = 3;
    int av_t = 1;
    std::uint64_t max_flats = 10'000'000;
    avoider_cmd->add_option("-n,--n", av_n);
    avoider_cmd->add_option("--k", av_k);
    avoider_cmd->add_option("--t", av_t);
    avoider_cmd->add_option("--max-flats", max_flats);

    // verify-lemmas
    auto* verify_cmd = add_common(app.add_subcommand(
        "verify-lemmas", "re-run the verified-lemma suites and print a "
                         "pass/fail matrix"));
    verify_cmd->add_option("--seed", seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    int exit_code = 0;
    try {
        const int workers = resolve_workers(parallelism);
        json payload;

        if (count_cmd->parsed()) {
            payload = json{{"i", to_decimal(count_fast(
                                     load_graph(graph6, input)))}};
        } else if (poly_cmd->parsed()) {
            payload = polynomial_json(independence_polynomial(
                load_graph(graph6, input), max_component));
        } else if (spectrum_cmd->parsed()) {
            if (sp_blocks < 1 || sp_m < 1)
                throw validation_error("--k and --m must be >= 1");
            const Graph left = load_graph(graph6, input);
            const CliqueUnion right = CliqueUnion::of(std::vector<int>(
                static_cast<std::size_t>(sp_blocks),
                static_cast<int>(sp_m)));
            const ValueSet sp = spectrum_exhaustive(left, right.realize(),
                                                    workers, max_bits);
            payload = json{{"left_n", left.n()},
                           {"right_n", right.vertex_count()},
                           {"spectrum", value_set_json(sp)}};
        } else if (census_cmd->parsed()) {
            if (census_n > max_n)
                throw ceiling_error("census: n exceeds --max-n");
            const CensusResult r = census(census_n, workers);
            payload = census_json(r);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv)
                    throw validation_error("cannot open CSV output: " +
                                           csv_path);
                csv << "n,Ni\n" << r.n << ',' << r.ni << '\n';
            }
        } else if (construct_cmd->parsed()) {
            const MainParams params = default_main_params(c_d, c_m);
            const MainGraph mg = build_main_graph(params, max_left);
            payload = graph_payload(mg.join.realize());
            payload["left_n"] = mg.join.left.n();
            payload["right_n"] = mg.join.right.n();
        } else if (encode_cmd->parsed()) {
            const MainParams base = default_main_params(c_d, c_m);
            const ClosedForm base_form = closed_form(
                base, workers, max_transversals);
            const long long width = base_form.ell_hi - base_form.ell_lo + 1;
            if (static_cast<long long>(bits.size()) != width)
                throw validation_error(
                    "--bits must give one bit per controlled position (" +
                    std::to_string(width) + " for this shape)");
            std::map<long long, int> target;
            json positions = json::array();
            Count delta_value = 0;
            for (long long i = 0; i < width; ++i) {
                const char ch = bits[static_cast<std::size_t>(i)];
                if (ch != '0' && ch != '1')
                    throw validation_error("--bits must be 0/1 characters");
                const long long pos = base_form.ell_lo + i;
                target[pos] = ch - '0';
                positions.push_back(pos);
                if (ch == '1') delta_value += pow2(
                    static_cast<unsigned long long>(pos));
            }
            const MainParams encoded = encode_digits(base, target);
            const Count value = closed_form_value(base_form, encoded);
            if (value != base_form.c + delta_value)
                throw std::logic_error("encoded value is off target");
            const MainGraph mg = build_main_graph(encoded, max_left);
            payload = graph_payload(mg.join.realize());
            payload["i"] = to_decimal(value);
            payload["c"] = to_decimal(base_form.c);
            payload["positions"] = positions;
        } else if (plan_cmd->parsed()) {
            const CombinationPlan plan =
                plan_combination(plan_d, parse_rational(delta), plan_d0);
            payload = combination_plan_json(plan);
        } else if (avoider_cmd->parsed()) {
            const int modes = (graph6.empty() ? 0 : 1) +
                              (input.empty() ? 0 : 1) + (av_n > 0 ? 1 : 0);
            if (modes != 1)
                throw validation_error(
                    "avoider needs exactly one of --graph6, --input, -n");
            if (av_n > 0) {
                payload = gap_report_json(spectrum_gap_report(av_n, workers));
            } else {
                PointSet s = input.empty()
                                 ? build_avoider(parse_graph6(graph6))
                                 : point_set_from_json(read_json_file(input));
                const AvoiderVerdict v =
                    check_avoider(s, av_k, av_t, workers, max_flats);
                payload = point_set_json(s, s.dimension() <= 12);
                payload["check"] = verdict_json(v);
                payload["k"] = av_k;
                payload["t"] = av_t;
            }
        } else if (verify_cmd->parsed()) {
            json rows = json::array();
            bool all_pass = true;
            for (const LemmaCheck& check : lemma_checks()) {
                std::mt19937_64 rng(seed);
                const bool pass = check.run(rng, workers);
                all_pass = all_pass && pass;
                rows.push_back(json{{"name", check.name}, {"pass", pass}});
            }
            payload = json{{"checks", rows}, {"all_pass", all_pass}};
            if (!all_pass) exit_code = 1;
            if (format == "table" && output.empty()) {
                for (const json& row : rows)
                    out << (row.at("pass").get<bool>() ? "PASS  " : "FAIL  ")
                        << row.at("name").get<std::string>() << '\n';
                out << (all_pass ? "all lemma suites passed"
                                 : "some lemma suites FAILED")
                    << '\n';
                return exit_code;
            }
        }

        if (!output.empty()) {
            std::ofstream f(output);
            if (!f)
                throw validation_error("cannot open output file: " + output);
            f << payload.dump(2) << '\n';
        } else if (format == "table") {
            render_table(payload, out);
        } else {
            out << payload.dump(2) << '\n';
        }
        return exit_code;
    } catch (const ceiling_error& e) {
        err << "ceiling exceeded: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fibspec
