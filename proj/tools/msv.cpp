// Command-line surface for the matrix Schubert / Gaussian CI toolkit.
//
// Exit codes: 0 success, 2 malformed input, 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "msv/ci.hpp"
#include "msv/enumerate.hpp"
#include "msv/error.hpp"
#include "msv/export.hpp"
#include "msv/mixed_graph.hpp"
#include "msv/param.hpp"
#include "msv/rank_array.hpp"
#include "msv/schubert.hpp"

namespace {

using namespace msv;

json read_json_source(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
}

void print_component_rendering(std::ostream& os, const CIComponent& c) {
    os << "component " << c.w.to_string();
    if (c.ci_renderable) {
        os << "  =  ";
        for (size_t k = 0; k < c.statements.size(); ++k) {
            if (k) os << "  +  ";
            os << c.statements[k].to_string();
        }
        os << "\n";
    } else {
        os << "  (not a sum of CI ideals; generators below)\n";
        for (const auto& g : c.spec.generators) {
            os << "  minors of size " << g.size << " on rows {";
            for (size_t k = 0; k < g.rows.size(); ++k) os << (k ? "," : "") << g.rows[k];
            os << "} x cols {";
            for (size_t k = 0; k < g.cols.size(); ++k) os << (k ? "," : "") << g.cols[k];
            os << "}\n";
        }
    }
}

int run_decompose(const std::string& flavor_str, const std::vector<std::string>& perm_strs,
                  bool as_json) {
    Flavor flavor = parse_flavor(flavor_str);
    std::vector<Permutation> ws;
    for (const auto& s : perm_strs) ws.push_back(parse_one_line(s));
    auto comps = decompose_sum(flavor, ws);
    if (as_json) {
        json out = json::array();
        for (const auto& w : comps) out.push_back(to_json(w));
        std::cout << json{{"flavor", flavor_str}, {"components", out}}.dump(2) << "\n";
    } else {
        std::cout << comps.size() << " component" << (comps.size() == 1 ? "" : "s") << ":\n";
        for (const auto& w : comps) std::cout << "  " << w.to_string() << "\n";
    }
    return 0;
}

int run_ci_decompose(const std::string& text, int n, bool as_json) {
    auto statements = parse_ci_statements(text, n);
    auto comps = decompose_ci(statements);
    if (as_json) {
        json out = json::array();
        for (const auto& c : comps) {
            json stmts = json::array();
            for (const auto& s : c.statements) stmts.push_back(to_json(s));
            out.push_back(json{{"permutation", c.w.entries()},
                               {"ci_renderable", c.ci_renderable},
                               {"statements", stmts},
                               {"ideal", to_json(c.spec)}});
        }
        std::cout << json{{"n", n}, {"components", out}}.dump(2) << "\n";
    } else {
        std::cout << comps.size() << " component" << (comps.size() == 1 ? "" : "s") << ":\n";
        for (const auto& c : comps) print_component_rendering(std::cout, c);
    }
    return 0;
}

int run_graph_analyze(const std::string& path, bool as_json) {
    MixedGraph g = graph_from_json(read_json_source(path));
    validate(g);
    const bool gmc = is_generalized_markov_chain(g);

    RankArray r(g.m, std::vector<int>(static_cast<size_t>(g.m) * g.m, 0));
    std::vector<int> rows, cols;
    for (int i = 1; i <= g.m; ++i) {
        rows.push_back(i);
        for (int j = 1; j <= g.m; ++j) {
            cols.clear();
            for (int v = j; v <= g.m; ++v) cols.push_back(v);
            r.cell(i, j) = min_tsep_rank(g, rows, cols);
        }
    }

    if (!gmc) {
        if (as_json) {
            std::cout << json{{"generalized_markov_chain", false}, {"rank_array", to_json(r)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "generalized Markov chain: no\n";
            std::cout << "t-separation rank array (no primality claim):\n" << r.to_string();
        }
        return 0;
    }

    VanishingIdeal vi = vanishing_ideal(g);
    std::optional<std::vector<CIStatement>> rendering;
    if (defined_by_inclusions(vi.w)) {
        auto parts = split_by_essential_boxes(vi.w);
        std::vector<CIStatement> stmts;
        for (const auto& part : parts) {
            auto s = perm_to_ci(part);
            if (s) stmts.push_back(*s);
        }
        if (stmts.size() == parts.size()) rendering = stmts;
    }

    if (as_json) {
        json out{{"generalized_markov_chain", true},
                 {"rank_array", to_json(vi.rank_array)},
                 {"permutation", vi.w.entries()},
                 {"ideal", to_json(vi.spec)}};
        if (rendering) {
            json stmts = json::array();
            for (const auto& s : *rendering) stmts.push_back(to_json(s));
            out["ci_statements"] = stmts;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "generalized Markov chain: yes\n";
        std::cout << "rank array:\n" << vi.rank_array.to_string();
        std::cout << "vanishing ideal = J_sym(" << vi.w.to_string() << ")\n";
        for (const auto& gspec : vi.spec.generators) {
            std::cout << "  minors of size " << gspec.size << " on rows {";
            for (size_t k = 0; k < gspec.rows.size(); ++k)
                std::cout << (k ? "," : "") << gspec.rows[k];
            std::cout << "} x cols {";
            for (size_t k = 0; k < gspec.cols.size(); ++k)
                std::cout << (k ? "," : "") << gspec.cols[k];
            std::cout << "}\n";
        }
        if (rendering) {
            std::cout << "CI form:  ";
            for (size_t k = 0; k < rendering->size(); ++k) {
                if (k) std::cout << "  +  ";
                std::cout << (*rendering)[k].to_string();
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_count(const std::string& space_str, int n, bool brute, bool as_json) {
    Flavor space = parse_flavor(space_str);
    BigInt formula = space == Flavor::full ? x_count(n)
                    : space == Flavor::sym ? sigma_count(n)
                                           : y_count(n);
    std::optional<BigInt> oracle;
    if (brute) oracle = brute_count(space, n);
    if (as_json) {
        json out{{"space", space_str}, {"n", n}, {"formula", formula.to_string()}};
        if (oracle) out["brute_force"] = oracle->to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << formula.to_string();
        if (oracle) std::cout << ", " << oracle->to_string();
        std::cout << "\n";
    }
    return 0;
}

int run_param_sample(const std::string& flavor_str, const std::string& perm_str, uint64_t seed,
                     bool as_json) {
    Flavor flavor = parse_flavor(flavor_str);
    Permutation w = parse_one_line(perm_str);
    FlavorSample s = sample_stratum(flavor, w, seed);
    RankReport report = verify_rank_array(s.matrix, w);
    if (as_json) {
        json mat = json::array();
        for (int i = 1; i <= s.matrix.rows; ++i) {
            json row = json::array();
            for (int j = 1; j <= s.matrix.cols; ++j) row.push_back(s.matrix.at(i, j).to_string());
            mat.push_back(row);
        }
        std::cout << json{{"flavor", flavor_str},
                          {"permutation", w.entries()},
                          {"seed", seed},
                          {"matrix", mat},
                          {"report", to_json(report)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "sample of the " << flavor_str << " stratum of " << w.to_string()
                  << " (seed " << seed << "):\n"
                  << s.matrix.to_string();
        for (const auto& b : report.boxes) {
            std::cout << "box (" << b.i << "," << b.j << "): bound " << b.bound << ", rank "
                      << b.achieved << (b.ok ? " ok" : " VIOLATED");
            if (b.essential) std::cout << (b.equality ? " [essential, tight]" : " [essential]");
            std::cout << "\n";
        }
        std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

int run_ideal_gens(const std::string& flavor_str, const std::string& perm_str,
                   const std::string& format, bool full_family) {
    Flavor flavor = parse_flavor(flavor_str);
    Permutation w = parse_one_line(perm_str);
    IdealSpec spec = ideal_spec(flavor, w, full_family);
    if (format == "json") std::cout << to_json(spec).dump(2) << "\n";
    else if (format == "m2") std::cout << to_macaulay2(spec);
    else if (format == "singular") std::cout << to_singular(spec);
    else throw input_error("unknown format '" + format + "' (expected json, m2 or singular)");
    return 0;
}

int run_rank_array_decompose(const std::string& path, bool type_c, bool hexagonal, bool as_json,
                             bool with_trace) {
    RankArray r = rank_array_from_json(read_json_source(path));
    DecomposeOptions opts;
    opts.type_c = type_c;
    opts.hexagonal = hexagonal || type_c;
    opts.want_trace = with_trace;
    DecompositionResult dec = primary_decomposition(r, opts);
    if (as_json) {
        json comps = json::array();
        for (const auto& w : dec.components) comps.push_back(to_json(w));
        json out{{"unit_ideal", dec.unit_ideal}, {"components", comps}};
        if (with_trace) out["trace"] = dec.trace;
        std::cout << out.dump(2) << "\n";
    } else {
        if (dec.unit_ideal) {
            std::cout << "unit ideal (infeasible rank request)\n";
        } else {
            std::cout << dec.components.size() << " component"
                      << (dec.components.size() == 1 ? "" : "s") << ":\n";
            for (const auto& w : dec.components) std::cout << "  " << w.to_string() << "\n";
        }
        if (with_trace)
            for (const auto& line : dec.trace) std::cout << "# " << line << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial primary decomposition for matrix Schubert varieties,\n"
                 "Gaussian conditional independence, and generalized Markov chains"};
    app.require_subcommand(1);

    // decompose
    std::string dec_flavor = "sym";
    std::vector<std::string> dec_perms;
    bool dec_json = false;
    auto* dec = app.add_subcommand("decompose", "decompose a sum of Schubert determinantal ideals");
    dec->add_option("--flavor", dec_flavor, "full, sym or up")->capture_default_str();
    dec->add_option("perms", dec_perms, "permutations in one-line notation")->required();
    dec->add_flag("--json", dec_json, "JSON output");

    // ci decompose
    auto* ci = app.add_subcommand("ci", "conditional independence statements");
    ci->require_subcommand(1);
    std::string ci_text;
    int ci_n = 0;
    bool ci_json = false;
    auto* cid = ci->add_subcommand("decompose", "decompose a CI family");
    cid->add_option("statements", ci_text, "e.g. \"1 _||_ 3; 1 _||_ 3 | 2\"")->required();
    cid->add_option("--n", ci_n, "ground set size")->required();
    cid->add_flag("--json", ci_json, "JSON output");

    // graph analyze
    auto* graph = app.add_subcommand("graph", "mixed graph analysis");
    graph->require_subcommand(1);
    std::string graph_path;
    bool graph_json = false;
    auto* ga = graph->add_subcommand("analyze", "GMC verdict, rank array, vanishing ideal");
    ga->add_option("file", graph_path, "graph JSON file, or - for stdin")->required();
    ga->add_flag("--json", graph_json, "JSON output");

    // count
    std::string count_space = "full";
    int count_n = 1;
    bool count_brute = false, count_json = false;
    auto* count = app.add_subcommand("count", "stratum counts");
    count->add_option("--space", count_space, "full, sym or up")->required();
    count->add_option("--n", count_n, "size parameter")->required();
    count->add_flag("--brute-force", count_brute, "also run the direct enumeration");
    count->add_flag("--json", count_json, "JSON output");

    // param sample
    auto* param = app.add_subcommand("param", "stratum parametrizations");
    param->require_subcommand(1);
    std::string param_flavor = "sym", param_perm;
    uint64_t param_seed = 1;
    bool param_json = false;
    auto* ps = param->add_subcommand("sample", "sample a stratum point and verify rank bounds");
    ps->add_option("--flavor", param_flavor, "sym or up")->capture_default_str();
    ps->add_option("--perm", param_perm, "permutation in one-line notation")->required();
    ps->add_option("--seed", param_seed, "sample seed")->capture_default_str();
    ps->add_flag("--json", param_json, "JSON output");

    // ideal gens
    auto* ideal = app.add_subcommand("ideal", "determinantal generators");
    ideal->require_subcommand(1);
    std::string ideal_flavor = "sym", ideal_perm, ideal_format = "json";
    bool ideal_full_family = false;
    auto* ig = ideal->add_subcommand("gens", "essential-minor generator list / CAS export");
    ig->add_option("--flavor", ideal_flavor, "full, sym or up")->capture_default_str();
    ig->add_option("--perm", ideal_perm, "permutation in one-line notation")->required();
    ig->add_option("--format", ideal_format, "json, m2 or singular")->capture_default_str();
    ig->add_flag("--full-family", ideal_full_family, "emit every constraining box, not just essential ones");

    // rank-array decompose
    auto* ra = app.add_subcommand("rank-array", "rank array calculus");
    ra->require_subcommand(1);
    std::string ra_path;
    bool ra_type_c = false, ra_hex = false, ra_json = false, ra_trace = false;
    auto* rad = ra->add_subcommand("decompose", "combinatorial primary decomposition");
    rad->add_option("file", ra_path, "rank array JSON file, or - for stdin")->required();
    rad->add_flag("--type-c", ra_type_c, "paired replacements for symmetric-side arrays");
    rad->add_flag("--hexagonal", ra_hex, "treat as a 2n x 2n hexagonal array");
    rad->add_flag("--json", ra_json, "JSON output");
    rad->add_flag("--trace", ra_trace, "log the replacements applied");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return run_decompose(dec_flavor, dec_perms, dec_json);
        if (cid->parsed()) return run_ci_decompose(ci_text, ci_n, ci_json);
        if (ga->parsed()) return run_graph_analyze(graph_path, graph_json);
        if (count->parsed()) return run_count(count_space, count_n, count_brute, count_json);
        if (ps->parsed()) return run_param_sample(param_flavor, param_perm, param_seed, param_json);
        if (ig->parsed())
            return run_ideal_gens(ideal_flavor, ideal_perm, ideal_format, ideal_full_family);
        if (rad->parsed())
            return run_rank_array_decompose(ra_path, ra_type_c, ra_hex, ra_json, ra_trace);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
