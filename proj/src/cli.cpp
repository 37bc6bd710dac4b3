#include "cosmo/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "cosmo/halfopen.hpp"
#include "cosmo/hstar.hpp"
#include "cosmo/json_io.hpp"
#include "cosmo/limits.hpp"
#include "cosmo/multigraph.hpp"
#include "cosmo/polytope.hpp"
#include "cosmo/tutte.hpp"

namespace cosmo::cli {

namespace {

using nlohmann::json;

Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Multigraph::parse(buffer.str());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + item + "' in list '" + text + "'");
        }
    }
    if (values.empty()) throw parse_error("empty integer list");
    return values;
}

struct CommonFlags {
    bool as_json = false;
    bool as_latex = false;
    std::optional<std::uint64_t> seed;
    int limit_subsets = 20;

    EnumLimits limits() const {
        EnumLimits l;
        l.max_subset_edges = limit_subsets;
        return l;
    }
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
    CLI::Option* json = cmd->add_flag("--json", flags.as_json, "emit JSON");
    CLI::Option* latex =
        cmd->add_flag("--latex", flags.as_latex, "emit LaTeX-style text (the default text form)");
    json->excludes(latex);
}

void add_limit_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--limit-subsets", flags.limit_subsets,
                    "edge-count cap for 2^m subset enumerations")
        ->capture_default_str();
}

Poly compute_method(const Multigraph& g, HstarMethod method, const EnumLimits& limits) {
    if (method == HstarMethod::triangulation) return hstar_triangulation(g);
    return hstar_report(g, method, limits).polynomial;
}

const std::vector<std::pair<std::string, HstarMethod>> kMethods = {
    {"acyclic", HstarMethod::acyclic},         {"delcon", HstarMethod::delcon},
    {"tutte", HstarMethod::tutte},             {"moebius", HstarMethod::moebius},
    {"triangulation", HstarMethod::triangulation},
};

int run_hstar(const std::string& path, const std::string& method, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(path);
    const EnumLimits limits = flags.limits();
    if (method != "all") {
        HstarMethod m = HstarMethod::delcon;
        bool found = false;
        for (const auto& [name, value] : kMethods) {
            if (name == method) {
                m = value;
                found = true;
            }
        }
        if (!found) throw parse_error("unknown method '" + method + "'");
        const Poly p = compute_method(g, m, limits);
        if (flags.as_json) {
            out << json{{"method", method},
                        {"h_star", poly_to_json(p)},
                        {"volume", p.eval_one().get_str()},
                        {"degree_bound", g.edge_count()}}
                       .dump(2)
                << "\n";
        } else {
            out << p.to_latex() << "\n";
        }
        return 0;
    }

    std::vector<std::pair<std::string, Poly>> results;
    for (const auto& [name, value] : kMethods) results.emplace_back(name, compute_method(g, value, limits));
    bool agree = true;
    for (const auto& [name, p] : results) agree = agree && p == results.front().second;

    if (flags.as_json) {
        json methods;
        for (const auto& [name, p] : results) methods[name] = poly_to_json(p);
        out << json{{"methods", std::move(methods)},
                    {"agree", agree},
                    {"volume", results.front().second.eval_one().get_str()},
                    {"degree_bound", g.edge_count()}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& [name, p] : results) out << name << ": " << p.to_latex() << "\n";
    }
    if (!agree) {
        err << "method disagreement detected\n";
        return 1;
    }
    return 0;
}

int run_tutte(const std::string& path, const CommonFlags& flags, std::ostream& out) {
    const Multigraph g = load_graph(path);
    const BivarPoly t = tutte_delcon(g, flags.limits());
    if (flags.as_json)
        out << json{{"tutte", bivar_to_json(t)}}.dump(2) << "\n";
    else
        out << t.to_latex() << "\n";
    return 0;
}

int run_volume(const std::string& path, const CommonFlags& flags, std::ostream& out) {
    const Multigraph g = load_graph(path);
    const Int v = volume(g, flags.limits());
    if (flags.as_json)
        out << json{{"volume", v.get_str()}}.dump(2) << "\n";
    else
        out << v.get_str() << "\n";
    return 0;
}

Triangulation build_triangulation(const Multigraph& g, const CommonFlags& flags) {
    if (flags.seed) return placing_triangulation(g, random_insertion_order(g, *flags.seed));
    return placing_triangulation(g);
}

int run_triangulate(const std::string& path, const CommonFlags& flags, std::ostream& out) {
    const Multigraph g = load_graph(path);
    const Triangulation t = build_triangulation(g, flags);
    if (flags.as_json) {
        out << triangulation_to_json(t).dump(2) << "\n";
    } else {
        out << "cells " << t.cells.size() << "\n";
        out << "h_vector " << h_vector_from_triangulation(t).to_latex() << "\n";
        out << "dual_edges " << t.dual_edges.size() << "\n";
    }
    return 0;
}

int run_decompose(const std::string& path, const CommonFlags& flags, std::ostream& out) {
    const Multigraph g = load_graph(path);
    const Triangulation t = build_triangulation(g, flags);
    const HalfOpenDecomposition h = half_open_decomposition(t);
    if (flags.as_json) {
        out << halfopen_to_json(t, h).dump(2) << "\n";
    } else {
        std::size_t removed = 0;
        for (const HalfOpenCell& c : h.cells) removed += c.removed_count();
        out << "cells " << h.cells.size() << "\n";
        out << "h_vector " << h_vector_from_triangulation(t).to_latex() << "\n";
        out << "removed_facets " << removed << "\n";
        out << "perturbation_retries " << h.retries << "\n";
    }
    return 0;
}

int run_ehrhart(const std::string& path, long dilations, bool brute, const CommonFlags& flags,
                std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(path);
    if (dilations < 0) throw parse_error("--dilations must be non-negative");
    if (g.node_count() + g.edge_count() < 1)
        throw parse_error("the empty graph has no cosmological polytope");
    const Poly h = hstar_delcon(g, flags.limits());
    const int d = g.node_count() + g.edge_count() - 1;

    std::vector<Int> counts, brute_counts;
    for (long j = 0; j <= dilations; ++j) counts.push_back(ehrhart_from_hstar(h, d, j));
    if (brute)
        for (long j = 0; j <= dilations; ++j) brute_counts.push_back(ehrhart_brute(g, j));

    if (flags.as_json) {
        json jc = json::array(), jb = json::array();
        for (const Int& c : counts) jc.push_back(c.get_str());
        for (const Int& c : brute_counts) jb.push_back(c.get_str());
        json result{{"dilations", dilations}, {"counts", std::move(jc)}};
        if (brute) result["brute_counts"] = std::move(jb);
        out << result.dump(2) << "\n";
    } else {
        for (long j = 0; j <= dilations; ++j) {
            out << "L(" << j << ") = " << counts[static_cast<std::size_t>(j)].get_str();
            if (brute) out << "  brute " << brute_counts[static_cast<std::size_t>(j)].get_str();
            out << "\n";
        }
    }
    if (brute && counts != brute_counts) {
        err << "brute-force count disagrees with the h* count\n";
        return 1;
    }
    return 0;
}

int run_family(const std::string& name, const std::vector<std::string>& params, bool volume_only,
               const CommonFlags& flags, std::ostream& out, std::ostream& err) {
    Poly p;
    Multigraph g;
    std::vector<int> numeric;
    if (name == "multitree" || name == "multicycle") {
        if (params.size() != 1)
            throw parse_error(name + " expects one comma-separated multiplicity list");
        numeric = parse_int_list(params[0]);
        p = name == "multitree" ? closed_form_multitree(numeric) : closed_form_multicycle(numeric);
        g = name == "multitree" ? multitree_graph(numeric) : multicycle_graph(numeric);
    } else if (name == "theta") {
        if (params.size() != 3) throw parse_error("theta expects three path lengths");
        for (const std::string& s : params) numeric.push_back(parse_int_list(s).at(0));
        p = closed_form_theta(numeric[0], numeric[1], numeric[2]);
        g = theta_graph(numeric[0], numeric[1], numeric[2]);
    } else if (name == "k2n") {
        if (params.size() != 1) throw parse_error("k2n expects one integer");
        numeric = parse_int_list(params[0]);
        p = closed_form_k2n(numeric.at(0));
        g = k2n_graph(numeric.at(0));
    } else {
        throw parse_error("unknown family '" + name + "' (multitree, multicycle, theta, k2n)");
    }

    // The closed form must reproduce the subset-sum pipeline on the
    // materialized graph whenever the enumeration fits the limit.
    std::string cross_check = "skipped";
    if (g.edge_count() <= flags.limit_subsets) {
        if (hstar_acyclic(g, flags.limits()) != p) {
            err << "closed form disagrees with the acyclic-subset pipeline\n";
            return 1;
        }
        cross_check = "ok";
    }

    if (flags.as_json) {
        json jparams = json::array();
        for (const int v : numeric) jparams.push_back(v);
        out << json{{"family", name},
                    {"parameters", std::move(jparams)},
                    {"h_star", poly_to_json(p)},
                    {"volume", p.eval_one().get_str()},
                    {"cross_check", cross_check}}
                   .dump(2)
            << "\n";
    } else if (volume_only) {
        out << p.eval_one().get_str() << "\n";
    } else {
        out << p.to_latex() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: the per-graph invariant suite

struct CheckLog {
    std::ostream& out;
    bool all_ok = true;

    void pass(const std::string& name) { out << "[PASS] " << name << "\n"; }
    void fail(const std::string& name, const std::string& detail) {
        all_ok = false;
        out << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
    void skip(const std::string& name, const std::string& why) {
        out << "[SKIP] " << name << " (" << why << ")\n";
    }
    void check(bool ok, const std::string& name, const std::string& detail = "") {
        if (ok)
            pass(name);
        else
            fail(name, detail);
    }
};

int run_verify(const std::string& path, const CommonFlags& flags, std::ostream& out,
               std::ostream& err) {
    const Multigraph g = load_graph(path);
    const EnumLimits limits = flags.limits();
    const int n = g.node_count();
    const int m = g.edge_count();
    const std::uint64_t seed = flags.seed.value_or(0);
    CheckLog log{out};

    const Poly h_acyclic = hstar_acyclic(g, limits);
    const Poly h_delcon = hstar_delcon(g, limits);
    const Poly h_tutte = hstar_tutte(g, limits);
    const Poly h_moebius = hstar_moebius(g, limits);
    log.check(h_acyclic == h_delcon && h_acyclic == h_tutte && h_acyclic == h_moebius,
              "four formula pipelines agree: " + h_acyclic.to_latex());

    log.check(h_acyclic.coeff(1) == Int(3 * m - 2 * g.loop_count()), "h*_1 = 3m - 2 loops");
    const UlcResult ulc = check_ultra_log_concave(h_acyclic, m);
    log.check(ulc.ok, "ultra log-concave coefficients",
              ulc.ok ? "" : "violated at index " + std::to_string(ulc.violating_index));
    log.check(check_coefficient_bound(h_acyclic, m), "coefficients within 3^i C(m,i)");

    const Int vol = volume(g, limits);
    log.check(vol == h_acyclic.eval_one(), "volume equals h*(1)");
    const bool bounds_ok = pow2(static_cast<unsigned long>(m)) <= vol &&
                           vol <= int_pow(4, static_cast<unsigned long>(m));
    const bool forest_equality = (vol == int_pow(4, static_cast<unsigned long>(m))) == g.is_forest();
    log.check(bounds_ok, "volume within [2^m, 4^m]");
    log.check(forest_equality, "volume attains 4^m exactly for forests");

    {
        const std::vector<EdgeSubset> acyclic = acyclic_subsets(g);
        log.check(Int(static_cast<unsigned long>(acyclic.size())) == count_acyclic_via_tutte(g, limits),
                  "acyclic subset count equals T_G(2,1)");
        bool sizes_ok = true;
        for (const EdgeSubset h : acyclic)
            sizes_ok = sizes_ok && subset_size(h) == n - g.component_count(h);
        log.check(sizes_ok, "acyclic subsets satisfy |H| = n - c(H)");
    }
    {
        bool closed = true;
        for (const EdgeSubset h : bridge_free_subsets(g)) {
            for (int e = 0; e < m && closed; ++e) {
                if (!(h >> e & 1) || g.is_loop(e)) continue;
                // independent per-edge bridge test via component counts
                const EdgeSubset without = h & ~(EdgeSubset{1} << e);
                closed = g.component_count(without) == g.component_count(h);
            }
        }
        log.check(closed, "bridge-free subsets have every edge on a cycle");
    }

    if (n >= 1 && n + m <= 9) {
        const Int expected_cells = vol;
        std::vector<std::vector<int>> orders{default_insertion_order(g)};
        for (int i = 1; i <= 10; ++i) orders.push_back(random_insertion_order(g, seed + static_cast<std::uint64_t>(i)));

        bool cells_ok = true, unimodular_ok = true, standard_ok = true, bijection_ok = true,
             hvec_ok = true;
        std::string detail;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const Triangulation t = placing_triangulation(g, orders[i]);
            if (Int(static_cast<unsigned long>(t.cells.size())) != expected_cells) cells_ok = false;
            for (int c = 0; c < static_cast<int>(t.cells.size()); ++c)
                if (abs(t.cell_determinant(c)) != 1) unimodular_ok = false;
            if (!t.contains_standard_simplex()) standard_ok = false;
            const BijectionReport report = verify_main_bijection(t);
            if (!report.ok) {
                bijection_ok = false;
                detail = "order " + std::to_string(i) + ": " + report.witness;
            }
            if (h_vector_from_triangulation(t) != h_acyclic) hvec_ok = false;
        }
        log.check(cells_ok, "placing triangulation has 2^m T(2,1) cells (11 orders)");
        log.check(unimodular_ok, "every maximal cell is unimodular");
        log.check(standard_ok, "standard simplex is a maximal cell");
        log.check(bijection_ok, "decoration bijection holds (11 orders)", detail);
        log.check(hvec_ok, "triangulation h-vector equals the formula h*");

        const Triangulation t = placing_triangulation(g);
        {
            bool coords_ok = true;
            for (int c = 0; c < static_cast<int>(t.cells.size()) && coords_ok; ++c) {
                for (int w = 0; w < n && coords_ok; ++w) {
                    const AffineCoordinates ac = affine_coordinates(t, c, w);
                    for (const auto& [u, lambda] : ac.node_coefficient)
                        coords_ok = coords_ok && (lambda == 0 || lambda == 1 || lambda == -1);
                    for (const auto& [f, lambda] : ac.edge_coefficient)
                        coords_ok = coords_ok && (lambda == 0 || lambda == 1 || lambda == -1);
                }
            }
            log.check(coords_ok, "affine coordinates lie in {-1, 0, 1}");
        }

        const HalfOpenDecomposition ho = half_open_decomposition(t);
        bool b_matches_k = true;
        for (const HalfOpenCell& cell : ho.cells)
            b_matches_k = b_matches_k &&
                          static_cast<int>(cell.removed_count()) == decoration_of(t, cell.cell).k();
        log.check(b_matches_k, "half-open cells drop exactly k(S) facets");

        bool ehrhart_ok = true;
        const int d = t.dim();
        for (long j = 0; j <= d + 1; ++j)
            ehrhart_ok = ehrhart_ok &&
                         ehrhart_from_halfopen(t, ho, j) == ehrhart_from_hstar(h_acyclic, d, j);
        log.check(ehrhart_ok, "half-open lattice counts match h* for j = 0..d+1");
    } else {
        log.skip("geometric certification", n < 1 ? "graph has no nodes" : "n+m > 9");
    }

    if (n >= 1 && n + m <= 5) {
        bool brute_ok = true;
        const int d = n + m - 1;
        for (long j = 1; j <= 3; ++j)
            brute_ok = brute_ok && ehrhart_brute(g, j) == ehrhart_from_hstar(h_acyclic, d, j);
        log.check(brute_ok, "brute-force lattice counts match h* for j = 1..3");

        const Triangulation t = placing_triangulation(g);
        const std::vector<LatticePoint> pts = lattice_points(g);
        std::mt19937_64 rng(seed ^ 0x51caf3u);
        std::uniform_int_distribution<int> numerator(-4, 4);
        bool backends_agree = true;
        for (int trial = 0; trial < 200 && backends_agree; ++trial) {
            QVector x(static_cast<std::size_t>(n + m));
            for (Rat& v : x) v = make_rat(numerator(rng), 2);
            backends_agree = membership_lp(x, pts) == membership_triangulation(x, t);
        }
        log.check(backends_agree, "LP and barycentric membership backends agree");
    } else {
        log.skip("brute-force Ehrhart oracle", n < 1 ? "graph has no nodes" : "n+m > 5");
    }

    if (!log.all_ok) {
        err << "verification failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact h*-polynomials, triangulations and Ehrhart data of cosmological polytopes"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string graph_path, method = "delcon", family_name;
    std::vector<std::string> family_params;
    long dilations = 4;
    bool brute = false, volume_only = false;

    CLI::App* c_hstar = app.add_subcommand("hstar", "h*-polynomial of a graph's cosmological polytope");
    c_hstar->add_option("graph", graph_path, "graph file")->required();
    c_hstar->add_option("--method", method, "acyclic|delcon|tutte|moebius|triangulation|all")
        ->capture_default_str();
    add_output_flags(c_hstar, flags);
    add_limit_flag(c_hstar, flags);

    CLI::App* c_tutte = app.add_subcommand("tutte", "Tutte polynomial");
    c_tutte->add_option("graph", graph_path)->required();
    add_output_flags(c_tutte, flags);
    add_limit_flag(c_tutte, flags);

    CLI::App* c_volume = app.add_subcommand("volume", "normalized volume 2^m T_G(2,1)");
    c_volume->add_option("graph", graph_path)->required();
    add_output_flags(c_volume, flags);
    add_limit_flag(c_volume, flags);

    CLI::App* c_tri = app.add_subcommand("triangulate", "placing triangulation of the lattice points");
    c_tri->add_option("graph", graph_path)->required();
    c_tri->add_option("--seed", flags.seed, "use a seeded random insertion order");
    add_output_flags(c_tri, flags);

    CLI::App* c_dec = app.add_subcommand("decompose", "half-open decomposition of the triangulation");
    c_dec->add_option("graph", graph_path)->required();
    c_dec->add_option("--seed", flags.seed, "use a seeded random insertion order");
    add_output_flags(c_dec, flags);

    CLI::App* c_ehr = app.add_subcommand("ehrhart", "lattice-point counts of dilations");
    c_ehr->add_option("graph", graph_path)->required();
    c_ehr->add_option("--dilations", dilations, "largest dilation factor")->capture_default_str();
    c_ehr->add_flag("--brute-force", brute, "cross-check by direct enumeration (small graphs)");
    add_output_flags(c_ehr, flags);
    add_limit_flag(c_ehr, flags);

    CLI::App* c_fam = app.add_subcommand("family", "closed-form families: multitree, multicycle, theta, k2n");
    c_fam->add_option("name", family_name, "family name")->required();
    c_fam->add_option("params", family_params, "family parameters");
    c_fam->add_flag("--volume", volume_only, "print the volume instead of the polynomial");
    add_output_flags(c_fam, flags);
    add_limit_flag(c_fam, flags);

    CLI::App* c_ver = app.add_subcommand("verify", "run the invariant suite on a graph");
    c_ver->add_option("graph", graph_path)->required();
    c_ver->add_option("--seed", flags.seed, "seed for the random insertion orders");
    add_limit_flag(c_ver, flags);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cosmopoly");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_hstar->parsed()) return run_hstar(graph_path, method, flags, out, err);
        if (c_tutte->parsed()) return run_tutte(graph_path, flags, out);
        if (c_volume->parsed()) return run_volume(graph_path, flags, out);
        if (c_tri->parsed()) return run_triangulate(graph_path, flags, out);
        if (c_dec->parsed()) return run_decompose(graph_path, flags, out);
        if (c_ehr->parsed()) return run_ehrhart(graph_path, dilations, brute, flags, out, err);
        if (c_fam->parsed()) return run_family(family_name, family_params, volume_only, flags, out, err);
        if (c_ver->parsed()) return run_verify(graph_path, flags, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace cosmo::cli
