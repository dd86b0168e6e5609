#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "specdl/analysis.hpp"
#include "specdl/closed_form.hpp"
#include "specdl/energy.hpp"
#include "specdl/enumerate.hpp"
#include "specdl/graph_io.hpp"
#include "specdl/report.hpp"
#include "specdl/search.hpp"
#include "specdl/theorems.hpp"

using namespace specdl;

namespace {

struct InputOptions {
    std::string family;
    std::string edgelist_path;
    std::string graph6;

    bool any() const { return !family.empty() || !edgelist_path.empty() || !graph6.empty(); }
};

struct LoadedGraph {
    Graph g;
    json input_desc;
    std::optional<FamilySpec> family;
};

LoadedGraph load_graph(const InputOptions& in) {
    int sources = !in.family.empty() + !in.edgelist_path.empty() + !in.graph6.empty();
    if (sources != 1)
        throw parse_error("exactly one of --family, --edgelist, --graph6 is required");
    if (!in.family.empty()) {
        FamilySpec spec = parse_family_spec(in.family);
        json desc;
        desc["family"] = family_name(spec);
        return {build(spec), desc, spec};
    }
    if (!in.graph6.empty()) {
        json desc;
        desc["graph6"] = in.graph6;
        return {parse_graph6(in.graph6), desc, std::nullopt};
    }
    std::ifstream f(in.edgelist_path, std::ios::binary);
    if (!f) throw parse_error("cannot open edge list file: " + in.edgelist_path);
    std::stringstream buf;
    buf << f.rdbuf();
    json desc;
    desc["edgelist"] = in.edgelist_path;
    desc["digest_fnv1a"] = fnv1a_hex(buf.str());
    return {parse_edge_list(buf.str()), desc, std::nullopt};
}

json graph_summary(const Graph& g) {
    json j;
    j["n"] = g.order();
    j["m"] = g.size();
    if (g.order() <= 62) j["graph6"] = emit_graph6(g);
    return j;
}

json spectra_json(const GraphAnalysis& a, const std::optional<FamilySpec>& family) {
    json spectra;
    spectra["distance_laplacian"] = json_spectrum(a.dl.values);
    spectra["laplacian"] = json_spectrum(a.lap.values);
    spectra["distance"] =
        json_spectrum(sym_eigenvalues(distance_matrix(a.dd)).values);
    if (family) {
        if (auto exact = analytic_dl(*family)) {
            spectra["analytic_distance_laplacian"] = to_json(*exact);
        }
    }
    return spectra;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

bool g_timing = false;

void emit(json& report, const Timer& timer) {
    if (g_timing) {
        json t;
        t["seconds"] = round12(timer.seconds());
        report["timing"] = t;
    }
    std::cout << report.dump(2) << "\n";
}

// ----- verify ---------------------------------------------------------------

struct TheoremRunner {
    std::string name;
    bool identity = false;      // violations also include failed equalities
    bool characterized = false; // carries an equality <-> extremal-graph claim
    // Returns the checks for one graph; empty when the theorem does not
    // apply to it (sweeps skip it silently, single-graph mode reports it).
    std::function<std::vector<BoundCheck>(const GraphAnalysis&)> run;
};

std::vector<BoundCheck> run_monotonicity(const GraphAnalysis& a) {
    std::vector<BoundCheck> out;
    for (auto e : a.g.edges()) {
        if (!is_connected(delete_edge(a.g, e))) continue;
        auto checks = check_edge_monotonicity(a, e);
        std::string tag = "-e(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
        for (auto& c : checks) {
            c.case_label += tag;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<TheoremRunner> theorem_runners() {
    auto diam2 = [](const GraphAnalysis& a) { return a.n() >= 3 && a.dd.diameter == 2; };
    std::vector<TheoremRunner> runners;
    runners.push_back({"edge-monotonicity", false, false, run_monotonicity});
    runners.push_back({"dle-via-sk", true, false, [diam2](const GraphAnalysis& a) {
                           return diam2(a) ? std::vector<BoundCheck>{check_thm_dle_via_sk(a)}
                                           : std::vector<BoundCheck>{};
                       }});
    runners.push_back({"brouwer", false, false, [](const GraphAnalysis& a) {
                           std::vector<BoundCheck> out;
                           for (int k = 1; k <= a.n(); ++k) out.push_back(check_brouwer(a, k));
                           return out;
                       }});
    runners.push_back({"sandwich", false, false, [diam2](const GraphAnalysis& a) {
                           if (!diam2(a)) return std::vector<BoundCheck>{};
                           auto [upper, lower] = check_sandwich(a);
                           return std::vector<BoundCheck>{upper, lower};
                       }});
    runners.push_back({"sigma-t", false, false, [diam2](const GraphAnalysis& a) {
                           return diam2(a)
                                      ? std::vector<BoundCheck>{check_sigma_t_relation(a)}
                                      : std::vector<BoundCheck>{};
                       }});
    runners.push_back({"second-smallest", false, true, [](const GraphAnalysis& a) {
                           return a.n() >= 3
                                      ? std::vector<BoundCheck>{check_second_smallest_bound(a)}
                                      : std::vector<BoundCheck>{};
                       }});
    runners.push_back({"wiener-lower", false, true, [](const GraphAnalysis& a) {
                           return a.n() >= 3
                                      ? std::vector<BoundCheck>{check_wiener_lower_bound(a)}
                                      : std::vector<BoundCheck>{};
                       }});
    runners.push_back({"bipartite-bound", false, true, [](const GraphAnalysis& a) {
                           if (a.n() < 3 || !bipartition(a.g)) return std::vector<BoundCheck>{};
                           return std::vector<BoundCheck>{check_bipartite_bound(a)};
                       }});
    runners.push_back({"independence-bound", false, true, [](const GraphAnalysis& a) {
                           return a.n() >= 3
                                      ? std::vector<BoundCheck>{check_independence_bound(a)}
                                      : std::vector<BoundCheck>{};
                       }});
    runners.push_back({"connectivity-bound", false, true, [](const GraphAnalysis& a) {
                           return a.n() >= 4
                                      ? std::vector<BoundCheck>{check_connectivity_bound(a)}
                                      : std::vector<BoundCheck>{};
                       }});
    runners.push_back({"eigenvalue-floors", false, false, check_eigenvalue_floor_corollaries});
    return runners;
}

std::vector<TheoremRunner> select_runners(const std::string& theorem) {
    auto all = theorem_runners();
    if (theorem == "all") return all;
    for (auto& r : all)
        if (r.name == theorem) return {r};
    throw parse_error("unknown theorem '" + theorem + "'; see --help for the list");
}

bool is_violation(const TheoremRunner& runner, const BoundCheck& c) {
    if (!c.applicable) return false;
    return !c.holds || (runner.identity && !c.equality);
}

int cmd_verify_graph(const std::string& theorem, const InputOptions& in,
                     const std::string& format) {
    Timer timer;
    LoadedGraph loaded = load_graph(in);
    if (theorem == "integral-family") {
        if (!loaded.family) throw parse_error("integral-family requires --family join:...");
        BoundCheck c = check_integral_family(*loaded.family);
        json report = report_shell("verify", loaded.input_desc);
        report["theorem"] = theorem;
        report["graph"] = graph_summary(build(*loaded.family));
        report["bound_checks"] = json::array({to_json(c)});
        report["all_hold"] = c.holds;
        emit(report, timer);
        return c.holds ? 0 : 1;
    }

    auto runners = select_runners(theorem);
    GraphAnalysis a = analyze(loaded.g);
    std::vector<std::pair<std::string, BoundCheck>> rows;
    bool all_hold = true;
    bool any = false;
    for (const auto& runner : runners) {
        for (const auto& c : runner.run(a)) {
            any = true;
            if (is_violation(runner, c)) all_hold = false;
            rows.emplace_back(emit_graph6(loaded.g), c);
        }
    }
    if (!any && runners.size() == 1)
        throw domain_error("theorem '" + theorem + "' does not apply to this graph");

    if (format == "csv") {
        std::cout << bound_checks_csv(rows);
        return all_hold ? 0 : 1;
    }
    json report = report_shell("verify", loaded.input_desc);
    report["theorem"] = theorem;
    report["graph"] = graph_summary(loaded.g);
    json checks = json::array();
    for (const auto& [graph, c] : rows) checks.push_back(to_json(c));
    report["bound_checks"] = checks;
    report["all_hold"] = all_hold;
    emit(report, timer);
    return all_hold ? 0 : 1;
}

int cmd_verify_sweep(const std::string& theorem, int n, int k_filter,
                     const std::string& format) {
    if (n < 3 || n > 7) throw parse_error("verify sweep supports --n 3..7");
    Timer timer;
    auto runners = select_runners(theorem);

    struct Local {
        long long graphs = 0, checks = 0, equalities = 0;
        std::vector<std::pair<std::string, BoundCheck>> violations;
        std::vector<std::pair<std::string, BoundCheck>> mismatches;
    };
    int workers = worker_count();
    std::vector<Local> locals(workers);

    scan_connected_parallel(n, workers, [&](int w, const Graph& g) {
        Local& loc = locals[w];
        if (k_filter > 0 && vertex_connectivity(g) != k_filter) return;
        GraphAnalysis a = analyze(g);
        bool counted = false;
        for (const auto& runner : runners) {
            for (const auto& c : runner.run(a)) {
                counted = true;
                ++loc.checks;
                if (c.applicable && c.equality) ++loc.equalities;
                if (is_violation(runner, c))
                    loc.violations.emplace_back(emit_graph6(g), c);
                if (runner.characterized && c.applicable && c.equality != c.equality_predicted)
                    loc.mismatches.emplace_back(emit_graph6(g), c);
            }
        }
        if (counted) ++loc.graphs;
    });

    Local total;
    for (auto& loc : locals) {
        total.graphs += loc.graphs;
        total.checks += loc.checks;
        total.equalities += loc.equalities;
        for (auto& v : loc.violations) total.violations.push_back(std::move(v));
        for (auto& m : loc.mismatches) total.mismatches.push_back(std::move(m));
    }
    auto by_graph = [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first
                                  : x.second.case_label < y.second.case_label;
    };
    std::sort(total.violations.begin(), total.violations.end(), by_graph);
    std::sort(total.mismatches.begin(), total.mismatches.end(), by_graph);

    if (format == "csv") {
        std::cout << bound_checks_csv(total.violations);
        return total.violations.empty() ? 0 : 1;
    }

    json report = report_shell("verify", json{{"sweep_n", n}});
    report["theorem"] = theorem;
    if (k_filter > 0) report["k_filter"] = k_filter;
    report["graphs_checked"] = total.graphs;
    report["checks_evaluated"] = total.checks;
    report["equalities"] = total.equalities;
    auto listed = [](const std::vector<std::pair<std::string, BoundCheck>>& rows) {
        json arr = json::array();
        size_t cap = std::min<size_t>(rows.size(), 100);
        for (size_t i = 0; i < cap; ++i) {
            json j = to_json(rows[i].second);
            j["graph6"] = rows[i].first;
            arr.push_back(j);
        }
        return arr;
    };
    report["violations_total"] = total.violations.size();
    report["violations"] = listed(total.violations);
    report["equality_characterization_mismatches_total"] = total.mismatches.size();
    report["equality_characterization_mismatches"] = listed(total.mismatches);
    report["all_hold"] = total.violations.empty();
    emit(report, timer);
    return total.violations.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance Laplacian spectra, energies, bounds, and small-graph searches"};
    app.require_subcommand(1);
    app.fallthrough(); // global input flags may follow the subcommand

    InputOptions input;
    std::string format = "json";
    app.add_option("--family", input.family,
                   "family spec, e.g. complete:5, complete_bipartite:2,3, complete_split:2,5, "
                   "connectivity_family:6,1,2, join:complete:1|complete:1+complete:2");
    app.add_option("--edgelist", input.edgelist_path, "edge list file: 'n m' then 'u v' lines");
    app.add_option("--graph6", input.graph6, "graph6 string (n <= 62)");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--timing", g_timing, "include wall-clock timing in the report");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "numeric and analytic spectra");
    auto* energy_cmd = app.add_subcommand("energy", "DLE, LE, DE and related parameters");

    auto* verify_cmd = app.add_subcommand(
        "verify", "evaluate one theorem (or 'all') on a graph or exhaustively for an order");
    std::string theorem;
    int sweep_n = 0, k_filter = 0;
    verify_cmd->add_option("theorem", theorem,
                           "edge-monotonicity | dle-via-sk | brouwer | sandwich | sigma-t | "
                           "second-smallest | wiener-lower | bipartite-bound | "
                           "independence-bound | connectivity-bound | eigenvalue-floors | "
                           "integral-family | all")
        ->required();
    verify_cmd->add_option("--n", sweep_n, "sweep all connected graphs of this order (3..7)");
    verify_cmd->add_option("--k", k_filter, "restrict a sweep to vertex connectivity k");

    auto* search_cmd =
        app.add_subcommand("search", "minimum-DLE scan over a class of connected graphs");
    std::string klass;
    int search_n = 0, alpha = 0, conn_k = 0;
    bool allow_large = false;
    search_cmd->add_option("class", klass, "bipartite | independence | connectivity | all")
        ->required();
    search_cmd->add_option("--n", search_n, "graph order (3..8)")->required();
    search_cmd->add_option("--alpha", alpha, "independence number (independence class)");
    search_cmd->add_option("--k", conn_k, "vertex connectivity (connectivity class)");
    search_cmd->add_flag("--allow-large", allow_large, "permit the n = 8 scan (2^28 masks)");
    bool maximize = false;
    search_cmd->add_flag("--maximize", maximize,
                         "report the empirical DLE maximizers instead (evidence only)");

    auto* census_cmd = app.add_subcommand("census", "sigma distribution over connected graphs");
    int census_n = 0;
    census_cmd->add_option("--n", census_n, "graph order (3..7)")->required();

    try {
        app.parse(argc, argv);

        if (spectrum_cmd->parsed() || energy_cmd->parsed()) {
            Timer timer;
            LoadedGraph loaded = load_graph(input);
            if (format == "csv") throw parse_error("csv output applies to verify only");
            GraphAnalysis a = analyze(loaded.g);
            json report =
                report_shell(spectrum_cmd->parsed() ? "spectrum" : "energy", loaded.input_desc);
            report["graph"] = graph_summary(loaded.g);
            if (energy_cmd->parsed()) {
                EnergyReport er = compute_energy_report(loaded.g);
                if (loaded.family) {
                    if (auto exact = analytic_dl(*loaded.family)) {
                        er.exact = true;
                        er.dle_exact_str = dle_exact(*exact).str();
                        er.sigma = sigma_exact(*exact);
                    }
                }
                report["energy"] = to_json(er);
            }
            report["spectra"] = spectra_json(a, loaded.family);
            emit(report, timer);
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (sweep_n > 0 && input.any())
                throw parse_error("verify takes either an input graph or --n, not both");
            if (sweep_n > 0) return cmd_verify_sweep(theorem, sweep_n, k_filter, format);
            return cmd_verify_graph(theorem, input, format);
        }
        if (search_cmd->parsed()) {
            Timer timer;
            if (format == "csv") throw parse_error("csv output applies to verify only");
            ClassSpec cls;
            if (klass == "all") cls.kind = ClassSpec::Kind::all;
            else if (klass == "bipartite") cls.kind = ClassSpec::Kind::bipartite;
            else if (klass == "independence") {
                cls.kind = ClassSpec::Kind::independence;
                if (alpha <= 0) throw parse_error("independence class requires --alpha");
                cls.alpha = alpha;
            } else if (klass == "connectivity") {
                cls.kind = ClassSpec::Kind::connectivity;
                if (conn_k <= 0) throw parse_error("connectivity class requires --k");
                cls.k = conn_k;
            } else {
                throw parse_error("unknown search class '" + klass + "'");
            }
            ExtremalResult r = maximize ? max_dle_over_class(cls, search_n, 0, allow_large)
                                        : min_dle_over_class(cls, search_n, 0, allow_large);
            json report = report_shell("search", json{{"class", cls.name()}, {"n", search_n}});
            report["result"] = to_json(r);
            emit(report, timer);
            if (maximize) return 0; // evidence only, nothing predicted
            return r.matches_predicted_family ? 0 : 1;
        }
        if (census_cmd->parsed()) {
            Timer timer;
            if (format == "csv") throw parse_error("csv output applies to verify only");
            SigmaCensus census = sigma_census(census_n);
            json report = report_shell("census", json{{"n", census_n}});
            report["result"] = to_json(census);
            emit(report, timer);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const disconnected_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
