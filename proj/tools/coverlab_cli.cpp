// coverlab: generate random graphs with prescribed degree sequences, walk
// them, analyse them exactly, and compare measured cover times against the
// closed-form predictions.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coverlab/coverlab.hpp"

using json = nlohmann::json;
using namespace coverlab;

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/// Header block carried by every artifact: version, the full subcommand
/// config, and its hash. Wall-clock runtime goes to stderr, never into the
/// artifact, so identical configs produce byte-identical files.
struct ArtifactMeta {
    std::string version = kVersion;
    std::string config;
    std::string config_hash;

    std::vector<std::string> comment_lines() const {
        std::vector<std::string> lines;
        lines.push_back(std::string("version: ") + version);
        lines.push_back("config_hash: " + config_hash);
        std::istringstream cfg(config);
        std::string l;
        while (std::getline(cfg, l))
            if (!l.empty()) lines.push_back("config: " + l);
        return lines;
    }

    json to_json() const {
        return json{{"version", version}, {"config_hash", config_hash}, {"config", config}};
    }
};

ArtifactMeta make_meta(const CLI::App& sub) {
    ArtifactMeta meta;
    meta.config = sub.config_to_str(true, false);
    meta.config_hash = hex64(fnv1a(meta.config));
    return meta;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw invalid_input("cannot open output file: " + path);
    return file;
}

void write_comment_header(std::ostream& os, const ArtifactMeta& meta) {
    for (const auto& l : meta.comment_lines()) os << "# " << l << "\n";
}

/// Graph argument: a path, or a named family C<n> (cycle), K<n> (complete),
/// P<n> (path), S<n> (star), or "petersen".
WeightedGraph load_graph_arg(const std::string& arg) {
    std::ifstream probe(arg);
    if (probe.good()) return read_weighted_graph(arg);
    static const std::regex fam("([CKPS])(\\d+)");
    std::smatch m;
    if (arg == "petersen") return WeightedGraph::from_multigraph(make_petersen());
    if (std::regex_match(arg, m, fam)) {
        const std::size_t n = std::stoul(m[2]);
        switch (m[1].str()[0]) {
            case 'C': return WeightedGraph::from_multigraph(make_cycle(n));
            case 'K': return WeightedGraph::from_multigraph(make_complete(n));
            case 'P': return WeightedGraph::from_multigraph(make_path(n));
            default: return WeightedGraph::from_multigraph(make_star(n));
        }
    }
    throw invalid_input("not a graph file or a known family name: " + arg);
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) if (!tok.empty()) out.push_back(std::stoull(tok));
    if (out.empty()) throw invalid_input("empty list: " + s);
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) if (!tok.empty()) out.push_back(std::stod(tok));
    if (out.empty()) throw invalid_input("empty list: " + s);
    return out;
}

// ---------------------------------------------------------------- gen ----

struct GenOpts {
    std::string degrees_file;
    std::string gnp; // "n,c"
    std::uint64_t seed = 0;
    std::string out_prefix;
    double a0 = 20.0;
    double alpha = 0.05;
};

json niceness_json(const NicenessReport& rep) {
    auto cond = [](const ConditionCheck& c) {
        json j{{"measured", c.measured}};
        if (c.pass)
            j["pass"] = *c.pass;
        else
            j["pass"] = "reported-only";
        return j;
    };
    return json{{"diverging_kernel", cond(rep.diverging_kernel)},
                {"sub_poly_degrees", cond(rep.sub_poly_degrees)},
                {"third_moment", cond(rep.third_moment)},
                {"min_degree_fraction", cond(rep.min_degree_frac)},
                {"kernel_min_degree", rep.kernel_min_degree},
                {"all_pass", rep.all_pass()}};
}

int run_gen(const GenOpts& o, const ArtifactMeta& meta) {
    json metadata{{"meta", meta.to_json()}, {"seed", o.seed}};
    if (!o.degrees_file.empty()) {
        const auto seq = DegreeSequence::from(read_degree_file(o.degrees_file));
        Rng rng(o.seed, 0);
        const auto sample = sample_G_d_detailed(seq, rng);
        {
            std::ofstream g(o.out_prefix + ".graph");
            write_multigraph(g, sample.graph, meta.comment_lines());
            std::ofstream k(o.out_prefix + ".kernel");
            write_subdivided(k, sample.sub, meta.comment_lines());
        }
        metadata["kind"] = "degree-sequence";
        metadata["N"] = seq.kernel_vertices();
        metadata["M"] = seq.kernel_edges();
        metadata["nu2"] = seq.nu2();
        metadata["m"] = seq.total_edges();
        metadata["xi"] = seq.xi();
        metadata["d"] = seq.min_kernel_degree();
        metadata["niceness"] = niceness_json(validate_nice(seq, o.a0, o.alpha));
    } else {
        const auto nc = parse_double_list(o.gnp);
        if (nc.size() != 2) throw invalid_input("--gnp expects n,c");
        const auto n = static_cast<std::size_t>(nc[0]);
        const double c = nc[1];
        Rng rng(o.seed, 0);
        const auto g = sample_gnp(n, c / static_cast<double>(n), rng);
        const auto giant = giant_component(g);
        const auto core = two_core(giant);
        const auto ext = extract_kernel(core);
        {
            std::ofstream gf(o.out_prefix + ".giant.graph");
            write_multigraph(gf, giant, meta.comment_lines());
            std::ofstream cf(o.out_prefix + ".core.graph");
            write_multigraph(cf, core, meta.comment_lines());
            std::ofstream kf(o.out_prefix + ".kernel");
            write_subdivided(kf, ext.sub, meta.comment_lines());
        }
        metadata["kind"] = "gnp";
        metadata["n"] = n;
        metadata["c"] = c;
        metadata["giant_vertices"] = giant.vertex_count();
        metadata["giant_edges"] = giant.edge_count();
        metadata["core_vertices"] = core.vertex_count();
        metadata["core_edges"] = core.edge_count();
        metadata["kernel_vertices"] = ext.sub.kernel.vertex_count();
        metadata["kernel_edges"] = ext.sub.kernel.edge_count();
        metadata["pure_cycle_components"] = ext.pure_cycle_components.size();
    }
    std::ofstream mf(o.out_prefix + ".meta.json");
    mf << metadata.dump(2) << "\n";
    return 0;
}

// --------------------------------------------------------------- walk ----

struct WalkOpts {
    std::string graph;
    std::string mode = "vertex-cover";
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    bool lazy = false;
    bool all_starts = false;
    bool per_trial = false;
    std::uint32_t start = 0;
    std::uint64_t budget = 1'000'000'000ULL;
    unsigned threads = 1;
    std::uint32_t v = 0;
    std::uint64_t T = 0;
    std::string ts;
    std::string out;
};

int run_walk(const WalkOpts& o, const ArtifactMeta& meta) {
    const auto g = load_graph_arg(o.graph);
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);
    write_comment_header(os, meta);
    WalkConfig cfg;
    cfg.lazy = o.lazy;
    cfg.step_budget = o.budget;
    int exit_code = 0;

    if (o.mode == "vertex-cover" || o.mode == "edge-cover") {
        const CoverMode mode = o.mode == "vertex-cover" ? CoverMode::vertex : CoverMode::edge;
        if (o.per_trial) {
            os << "start,trial,steps\n";
            const auto stats = cover_time_stats(g, o.start, mode, o.trials, cfg, o.seed,
                                                o.threads, /*retain=*/true);
            for (std::size_t t = 0; t < stats.values.size(); ++t)
                os << o.start << "," << t << "," << fmt(stats.values[t]) << "\n";
            if (stats.truncated > 0) exit_code = 4;
        } else {
            os << "start,mode,lazy,trials,mean,se,min,max,truncated\n";
            auto emit = [&](std::uint32_t s, const CoverStats& st) {
                os << s << "," << o.mode << "," << (o.lazy ? 1 : 0) << "," << st.trials << ","
                   << fmt(st.mean) << "," << (st.se ? fmt(*st.se) : std::string("na")) << ","
                   << fmt(st.min) << "," << fmt(st.max) << "," << st.truncated << "\n";
                if (st.truncated > 0) exit_code = 4;
            };
            if (o.all_starts) {
                const auto table = estimate_cover_time(g, o.trials, cfg, o.seed, o.threads, mode);
                for (std::uint32_t s = 0; s < table.per_start.size(); ++s)
                    emit(s, table.per_start[s]);
                os << "# max_mean_start=" << table.argmax_start
                   << " max_mean=" << fmt(table.max_mean) << "\n";
            } else {
                emit(o.start, cover_time_stats(g, o.start, mode, o.trials, cfg, o.seed, o.threads));
            }
        }
    } else if (o.mode == "unvisit") {
        const auto ts = parse_u64_list(o.ts);
        const auto est = empirical_unvisit_prob(g, o.v, o.T, ts, o.trials, o.seed, o.threads,
                                                std::nullopt, o.lazy);
        os << "v,T,t,estimate,trials\n";
        for (std::size_t i = 0; i < ts.size(); ++i)
            os << o.v << "," << o.T << "," << ts[i] << "," << fmt(est[i]) << "," << o.trials << "\n";
    } else if (o.mode == "returns") {
        const double mean = empirical_returns(g, o.v, o.T, o.trials, o.seed, o.threads, o.lazy);
        os << "v,T,mean_visits,trials\n";
        os << o.v << "," << o.T << "," << fmt(mean) << "," << o.trials << "\n";
    } else {
        throw invalid_input("unknown walk mode: " + o.mode);
    }
    return exit_code;
}

// -------------------------------------------------------------- exact ----

struct ExactOpts {
    std::string graph;
    std::vector<std::string> quantities;
    bool lazy = false;
    double epsilon = 1e-3;
    std::uint32_t u = 0, v = 1;
    std::string set;
    std::uint64_t t_max = 200;
    std::uint64_t T = 100;
    std::uint32_t vertex = 0;
    std::string conductance_mode = "auto";
    // gillman check
    std::uint64_t t = 1000;
    std::size_t trials = 100000;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    // resistance tails
    int tail_k = 0;
    double tail_xi = 0.5;
    std::string rho_grid = "1,2,3,4,5,6,7,8,9,10,11,12,13,14";
    std::string out;
};

json conductance_json(const WeightedGraph& g, const std::string& mode) {
    if (mode == "exact" || (mode == "auto" && g.vertex_count() <= kConductanceExactLimit)) {
        const auto r = conductance_exact(g);
        return json{{"value", r.phi}, {"exact", true}, {"argmin", r.argmin}};
    }
    if (mode == "auto" || mode == "sweep") {
        const auto r = conductance_sweep(g);
        return json{{"value", r.phi}, {"exact", false}, {"kind", "sweep-cut upper bound"},
                    {"argmin", r.argmin}};
    }
    throw invalid_input("unknown conductance mode: " + mode);
}

int run_exact(const ExactOpts& o, const ArtifactMeta& meta) {
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);

    if (o.tail_k > 0) { // resistance tail experiment emits CSV
        const auto grid = parse_double_list(o.rho_grid);
        const auto exp =
            subdivided_tail_experiment(o.tail_k, o.tail_xi, grid, o.trials, o.seed);
        write_comment_header(os, meta);
        os << "k,xi,rho,empirical,bound_eq40,bound_R1g0,n_trials\n";
        for (const auto& row : exp.rows)
            os << row.k << "," << fmt(row.xi) << "," << fmt(row.rho) << ","
               << fmt(row.empirical) << "," << fmt(row.bound_eq40) << ","
               << fmt(row.bound_r1g0) << "," << o.trials << "\n";
        return exp.all_asserted_hold ? 0 : 1;
    }

    const auto g = load_graph_arg(o.graph);
    json records = json::array();
    auto add = [&](const std::string& quantity, json value, json params) {
        records.push_back(json{{"quantity", quantity}, {"value", std::move(value)},
                               {"params", std::move(params)}});
    };

    for (const auto& q : o.quantities) {
        if (q == "pi") {
            const auto tm = transition_matrix(g, o.lazy);
            add("stationary_checks",
                json{{"row_sum_error", tm.max_row_sum_error()},
                     {"stationarity_error", tm.stationarity_error()},
                     {"detailed_balance_error", tm.detailed_balance_error()}},
                json{{"lazy", o.lazy}});
        } else if (q == "mixing-time") {
            const auto tm = transition_matrix(g, o.lazy);
            const auto r = tv_mixing_time(tm, o.epsilon);
            add("mixing_time",
                json{{"steps", r.steps}, {"capped", r.capped}, {"distance", r.final_distance}},
                json{{"epsilon", o.epsilon}, {"lazy", o.lazy}});
        } else if (q == "conductance") {
            add("conductance", conductance_json(g, o.conductance_mode),
                json{{"mode", o.conductance_mode}});
        } else if (q == "spectral-gap") {
            const auto r = spectral_gap(transition_matrix(g, o.lazy));
            add("spectral_gap",
                json{{"gap", r.gap}, {"lambda2", r.lambda2}, {"lambda_min", r.lambda_min}},
                json{{"lazy", o.lazy}});
        } else if (q == "resistance") {
            add("effective_resistance", effective_resistance(g, o.u, o.v),
                json{{"u", o.u}, {"v", o.v}});
        } else if (q == "commute") {
            add("commute_time", commute_time(g, o.u, o.v), json{{"u", o.u}, {"v", o.v}});
        } else if (q == "matthews") {
            if (!o.set.empty()) {
                std::vector<std::uint32_t> S;
                for (auto x : parse_u64_list(o.set)) S.push_back(static_cast<std::uint32_t>(x));
                add("matthews_bound", matthews_lower_bound(g, S), json{{"set", S}});
            } else {
                const auto best = matthews_best_bound(g);
                add("matthews_bound", best.bound, json{{"set", best.set}, {"maximized", true}});
            }
        } else if (q == "returns") {
            const auto tm = transition_matrix(g, o.lazy);
            const auto rs = return_series(tm, o.vertex, o.T);
            add("returns",
                json{{"R_v", rs.R_v()},
                     {"min_modulus_1p001", min_modulus_on_circle(rs, 0.001)}},
                json{{"v", o.vertex}, {"T", o.T}, {"lazy", o.lazy}});
        } else if (q == "check-js") {
            const auto phi = conductance_exact(g).phi;
            const auto r = js_check(g, o.t_max, phi);
            add("jerrum_sinclair_check",
                json{{"holds", r.holds}, {"phi_graph", r.phi_graph}, {"phi_chain", r.phi_chain},
                     {"max_ratio", r.max_ratio}},
                json{{"t_max", o.t_max}});
        } else if (q == "check-gillman") {
            const auto tm = transition_matrix(g, /*lazy=*/true);
            const double theta = spectral_gap(tm).gap;
            const std::vector<std::uint32_t> A{o.vertex};
            const auto tail =
                empirical_visit_tail(g, A, o.t, o.trials, o.vertex, /*lazy=*/true, o.seed, o.threads);
            const double nq = gillman_nq_point_mass(g.stationary(o.vertex));
            // grid of 10 gammas from where the bound crosses 1
            double gamma1 = 1.0;
            while (gillman_tail_bound(theta, nq, static_cast<double>(o.t), gamma1) > 1.0 &&
                   gamma1 < static_cast<double>(o.t))
                gamma1 += 1.0;
            json rows = json::array();
            bool all_hold = true;
            for (int i = 0; i < 10; ++i) {
                const double gamma = gamma1 * (1.0 + 0.1 * i);
                const double bound =
                    gillman_tail_bound(theta, nq, static_cast<double>(o.t), gamma);
                const double emp = tail.tail_at(gamma, static_cast<double>(o.t) * tail.pi_A);
                const bool ok = bound > 1.0 || emp <= bound;
                all_hold = all_hold && ok;
                rows.push_back(json{{"gamma", gamma}, {"bound", bound}, {"empirical", emp},
                                    {"holds", ok}});
            }
            add("gillman_check", json{{"holds", all_hold}, {"rows", rows}},
                json{{"t", o.t}, {"trials", o.trials}, {"theta", theta}, {"A", A}});
        } else {
            throw invalid_input("unknown quantity: " + q);
        }
    }
    json doc{{"meta", meta.to_json()}, {"records", records}};
    os << doc.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------ predict ----

struct PredictOpts {
    std::string degrees_file;
    std::uint64_t M = 0;
    std::uint64_t nu2 = 0;
    int d = 3;
    std::string gnp;      // "c,n"
    std::string emerging; // "eps,n"
    double alpha_lo = 0.05;
    double alpha_hi = 0.95;
    std::string out;
};

json prediction_json(const Prediction& p) {
    return json{{"regime", regime_name(p.regime)},
                {"value", p.value},
                {"constant", p.constant},
                {"scale", p.scale},
                {"inputs",
                 json{{"M", p.inputs.M},
                      {"nu2", p.inputs.nu2},
                      {"m", p.inputs.m},
                      {"d", p.inputs.d},
                      {"xi", p.inputs.xi},
                      {"alpha_hat", p.inputs.alpha_hat}}}};
}

int run_predict(const PredictOpts& o, const ArtifactMeta& meta) {
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);
    RegimeThresholds th{o.alpha_lo, o.alpha_hi};
    json doc{{"meta", meta.to_json()}};
    if (!o.gnp.empty()) {
        const auto cn = parse_double_list(o.gnp);
        if (cn.size() != 2) throw invalid_input("--gnp expects c,n");
        const auto g = predict_gnp(cn[0], cn[1]);
        doc["gnp"] = json{{"c", cn[0]},         {"n", cn[1]},
                          {"x", g.x},           {"cover_giant", g.cover_giant},
                          {"cover_2core", g.cover_2core}, {"nu2_est", g.nu2_est},
                          {"M_est", g.M_est}};
    } else if (!o.emerging.empty()) {
        const auto en = parse_double_list(o.emerging);
        if (en.size() != 2) throw invalid_input("--emerging expects eps,n");
        doc["emerging"] = json{{"eps", en[0]}, {"n", en[1]},
                               {"cover_2core", predict_emerging(en[0], en[1])}};
    } else if (!o.degrees_file.empty()) {
        const auto seq = DegreeSequence::from(read_degree_file(o.degrees_file));
        doc["prediction"] = prediction_json(predict_cover_time(seq, th));
    } else {
        if (o.M < 2) throw invalid_input("predict: provide --degrees, --gnp, --emerging or --M");
        doc["prediction"] = prediction_json(predict_cover_time(o.M, o.nu2, o.d, th));
    }
    os << doc.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------- surrogate ----

struct SurrogateOpts {
    std::string kernel_file;
    std::uint32_t ell_star = 0;
    double omega = 0.0;
    std::string out_prefix;
    bool do_scaling = false;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double tolerance = 0.1;
    std::int64_t split = -1;
};

int run_surrogate(const SurrogateOpts& o, const ArtifactMeta& meta) {
    const auto sub = read_subdivided(o.kernel_file);
    std::uint32_t ell_star = o.ell_star;
    if (ell_star == 0) {
        if (o.omega <= 0.0) throw invalid_input("need --ell-star or --omega");
        std::size_t total = 0;
        for (auto l : sub.lengths) total += l;
        const double xi =
            static_cast<double>(sub.kernel.edge_count()) / static_cast<double>(total);
        ell_star = default_ell_star(xi, o.omega);
    }
    const auto s = build_G0(sub, ell_star);
    {
        std::ofstream gf(o.out_prefix + ".g0.graph");
        write_weighted_graph(gf, s.g0, meta.comment_lines());
        std::ofstream mf(o.out_prefix + ".g0.map");
        for (const auto& l : meta.comment_lines()) mf << "# " << l << "\n";
        mf << "# f_id e_id ell_Q\n";
        for (std::uint32_t f = 0; f < s.edge_info.size(); ++f)
            mf << f << " " << s.edge_info[f].kernel_edge << " " << s.edge_info[f].ell_q << "\n";
    }
    const auto vs = build_V_sigma(sub.kernel, sub.lengths, ell_star);
    json doc{{"meta", meta.to_json()},
             {"ell_star", ell_star},
             {"g0_vertices", s.g0.vertex_count()},
             {"g0_edges", s.g0.edge_count()},
             {"kappa_total", s.kappa_total()},
             {"v_sigma", vs.v_sigma},
             {"v_light_size", vs.v_light.size()},
             {"seed_vertices", vs.seed_vertices}};
    if (o.split >= 0) {
        const auto sp = split_edge(s.g0, static_cast<std::uint32_t>(o.split));
        std::ofstream sf(o.out_prefix + ".g0star.graph");
        write_weighted_graph(sf, sp.graph, meta.comment_lines());
        doc["split_midpoint"] = sp.midpoint;
    }
    int code = 0;
    if (o.do_scaling) {
        const auto check = scaling_check(sub, ell_star, o.trials, o.seed, o.threads);
        doc["scaling_check"] = json{{"ratio", check.ratio},
                                    {"mean_vertex_cover_expanded", check.mean_vertex_cover_expanded},
                                    {"mean_edge_cover_g0", check.mean_edge_cover_g0},
                                    {"trials", check.trials},
                                    {"tolerance", o.tolerance},
                                    {"within", check.within(o.tolerance)}};
        if (!check.within(o.tolerance)) code = 1;
    }
    std::ofstream rf(o.out_prefix + ".report.json");
    rf << doc.dump(2) << "\n";
    return code;
}

// ------------------------------------------------------------ compare ----

struct CompareOpts {
    int d = 3;
    std::string M_grid = "250,500,1000,2000";
    std::string nu2_mode = "zero"; // zero | alpha:<a> | xi:<x>
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool prediction_only = false;
    double alpha_lo = 0.05;
    double alpha_hi = 0.95;
    std::string out;
};

int run_compare(const CompareOpts& o, const ArtifactMeta& meta) {
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);
    write_comment_header(os, meta);
    os << "M,nu2,m,d,regime,alpha_hat,constant,predicted,simulated_mean,se,ratio,abs_dev\n";
    RegimeThresholds th{o.alpha_lo, o.alpha_hi};

    std::size_t idx = 0;
    for (const auto Mreq : parse_u64_list(o.M_grid)) {
        // realizable d-regular kernel: even vertex count near 2 M / d
        std::size_t nk = static_cast<std::size_t>(
            std::llround(2.0 * static_cast<double>(Mreq) / static_cast<double>(o.d)));
        if (nk < 4) nk = 4;
        if (nk % 2 != 0 && o.d % 2 != 0) --nk; // d, n both odd is infeasible
        const std::size_t M = nk * static_cast<std::size_t>(o.d) / 2;

        std::size_t nu2 = 0;
        if (o.nu2_mode == "zero") {
            nu2 = 0;
        } else if (o.nu2_mode.rfind("alpha:", 0) == 0) {
            const double a = std::stod(o.nu2_mode.substr(6));
            nu2 = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(M), a)));
        } else if (o.nu2_mode.rfind("xi:", 0) == 0) {
            const double xi = std::stod(o.nu2_mode.substr(3));
            nu2 = static_cast<std::size_t>(
                std::llround(static_cast<double>(M) * (1.0 - xi) / xi));
        } else {
            throw invalid_input("unknown nu2 mode: " + o.nu2_mode);
        }

        const auto pred = predict_cover_time(M, nu2, o.d, th);
        double sim = 0.0, se = 0.0, ratio = 0.0;
        if (!o.prediction_only) {
            std::vector<int> degrees(nu2, 2);
            degrees.insert(degrees.end(), nk, o.d);
            const auto seq = DegreeSequence::from(std::move(degrees));
            Rng rng(o.seed, idx);
            const auto g = WeightedGraph::from_multigraph(sample_G_d(seq, rng));
            if (!g.connected()) {
                os << "# skipped disconnected sample at M=" << M << "\n";
                ++idx;
                continue;
            }
            const auto stats = cover_time_stats(g, 0, CoverMode::vertex, o.trials, WalkConfig{},
                                                o.seed + 1000 + idx, o.threads);
            sim = stats.mean;
            se = stats.se.value_or(0.0);
            ratio = sim / pred.value;
        }
        os << M << "," << nu2 << "," << (M + nu2) << "," << o.d << ","
           << regime_name(pred.regime) << "," << fmt(pred.inputs.alpha_hat) << ","
           << fmt(pred.constant) << "," << fmt(pred.value) << "," << fmt(sim) << "," << fmt(se)
           << "," << fmt(ratio) << "," << fmt(std::abs(ratio - 1.0)) << "\n";
        ++idx;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cover-time laboratory for random graphs with degree-2 vertices"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file with [subcommand] sections");

    GenOpts gen;
    auto* sgen = app.add_subcommand("gen", "generate graphs");
    sgen->add_option("--degrees", gen.degrees_file, "degree sequence file, one integer per line");
    sgen->add_option("--gnp", gen.gnp, "sample G(n, c/n): n,c");
    sgen->add_option("--seed", gen.seed, "master seed")->required();
    sgen->add_option("--out", gen.out_prefix, "output prefix")->required();
    sgen->add_option("--a0", gen.a0, "third-moment constant for the niceness report");
    sgen->add_option("--alpha", gen.alpha, "min-degree fraction for the niceness report");

    WalkOpts walk;
    auto* swalk = app.add_subcommand("walk", "random-walk experiments");
    swalk->add_option("--graph", walk.graph, "graph file or family name")->required();
    swalk->add_option("--mode", walk.mode, "vertex-cover | edge-cover | unvisit | returns");
    swalk->add_option("--seed", walk.seed, "master seed")->required();
    swalk->add_option("--trials", walk.trials, "number of trials");
    swalk->add_flag("--lazy", walk.lazy, "lazy walk (stay with probability 1/2)");
    swalk->add_flag("--all-starts", walk.all_starts, "per-start table and max");
    swalk->add_flag("--per-trial", walk.per_trial, "one row per trial");
    swalk->add_option("--start", walk.start, "start vertex");
    swalk->add_option("--budget", walk.budget, "step budget per trial");
    swalk->add_option("--threads", walk.threads, "worker threads");
    swalk->add_option("--v", walk.v, "target vertex (unvisit/returns)");
    swalk->add_option("--T", walk.T, "window start (unvisit) / horizon (returns)");
    swalk->add_option("--ts", walk.ts, "comma list of query times (unvisit)");
    swalk->add_option("--out", walk.out, "output CSV (default stdout)");

    ExactOpts exact;
    auto* sexact = app.add_subcommand("exact", "exact spectral/electrical quantities");
    sexact->add_option("--graph", exact.graph, "graph file or family name");
    sexact->add_option("--quantity", exact.quantities,
                       "pi | mixing-time | conductance | spectral-gap | resistance | commute | "
                       "matthews | returns | check-js | check-gillman");
    sexact->add_flag("--lazy", exact.lazy, "analyse the lazy chain");
    sexact->add_option("--epsilon", exact.epsilon, "mixing tolerance");
    sexact->add_option("--u", exact.u, "first vertex");
    sexact->add_option("--v", exact.v, "second vertex");
    sexact->add_option("--set", exact.set, "vertex set for matthews");
    sexact->add_option("--t-max", exact.t_max, "horizon for check-js");
    sexact->add_option("--T", exact.T, "return-series horizon");
    sexact->add_option("--vertex", exact.vertex, "vertex for returns / gillman set");
    sexact->add_option("--conductance", exact.conductance_mode, "exact | sweep | auto");
    sexact->add_option("--t", exact.t, "walk length for check-gillman");
    sexact->add_option("--trials", exact.trials, "trials for check-gillman / tails");
    sexact->add_option("--threads", exact.threads, "worker threads");
    sexact->add_option("--seed", exact.seed, "seed for stochastic checks");
    sexact->add_option("--resistance-tails", exact.tail_k,
                       "run the binary-tree resistance tail experiment at this depth k");
    sexact->add_option("--xi", exact.tail_xi, "geometric parameter for tails");
    sexact->add_option("--rho-grid", exact.rho_grid, "comma list of rho values");
    sexact->add_option("--out", exact.out, "output file (default stdout)");

    PredictOpts predict;
    auto* spredict = app.add_subcommand("predict", "closed-form cover-time predictions");
    spredict->add_option("--degrees", predict.degrees_file, "degree sequence file");
    spredict->add_option("--M", predict.M, "kernel edges");
    spredict->add_option("--nu2", predict.nu2, "degree-2 vertices");
    spredict->add_option("--d", predict.d, "minimum kernel degree");
    spredict->add_option("--gnp", predict.gnp, "c,n");
    spredict->add_option("--emerging", predict.emerging, "eps,n");
    spredict->add_option("--alpha-lo", predict.alpha_lo, "regime A/B threshold");
    spredict->add_option("--alpha-hi", predict.alpha_hi, "regime B/C threshold");
    spredict->add_option("--out", predict.out, "output JSON (default stdout)");

    SurrogateOpts surro;
    auto* ssur = app.add_subcommand("surrogate", "weighted surrogate G0 construction");
    ssur->add_option("--kernel", surro.kernel_file, "kernel-with-lengths file")->required();
    ssur->add_option("--ell-star", surro.ell_star, "sub-path length l*");
    ssur->add_option("--omega", surro.omega, "omega, for the default l* = floor(1/(xi omega))");
    ssur->add_option("--out", surro.out_prefix, "output prefix")->required();
    ssur->add_flag("--scaling-check", surro.do_scaling, "run the (l*)^2 rescaling check");
    ssur->add_option("--trials", surro.trials, "trials for the scaling check");
    ssur->add_option("--seed", surro.seed, "master seed");
    ssur->add_option("--threads", surro.threads, "worker threads");
    ssur->add_option("--tolerance", surro.tolerance, "r <= 1 + tolerance");
    ssur->add_option("--split-edge", surro.split, "also emit G0* splitting this edge id");

    CompareOpts compare;
    auto* scomp = app.add_subcommand("compare", "simulated vs predicted cover times");
    scomp->add_option("--d", compare.d, "kernel degree");
    scomp->add_option("--M-grid", compare.M_grid, "comma list of kernel edge counts");
    scomp->add_option("--nu2-mode", compare.nu2_mode, "zero | alpha:<a> | xi:<x>");
    scomp->add_option("--trials", compare.trials, "walk trials per size");
    scomp->add_option("--seed", compare.seed, "master seed");
    scomp->add_option("--threads", compare.threads, "worker threads");
    scomp->add_flag("--prediction-only", compare.prediction_only, "skip simulation");
    scomp->add_option("--alpha-lo", compare.alpha_lo, "regime A/B threshold");
    scomp->add_option("--alpha-hi", compare.alpha_hi, "regime B/C threshold");
    scomp->add_option("--out", compare.out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (sgen->parsed()) {
            if (gen.degrees_file.empty() == gen.gnp.empty())
                throw invalid_input("gen: exactly one of --degrees / --gnp required");
            code = run_gen(gen, make_meta(*sgen));
        } else if (swalk->parsed()) {
            code = run_walk(walk, make_meta(*swalk));
        } else if (sexact->parsed()) {
            code = run_exact(exact, make_meta(*sexact));
        } else if (spredict->parsed()) {
            code = run_predict(predict, make_meta(*spredict));
        } else if (ssur->parsed()) {
            code = run_surrogate(surro, make_meta(*ssur));
        } else if (scomp->parsed()) {
            code = run_compare(compare, make_meta(*scomp));
        }
    } catch (const invalid_input& e) {
        std::cerr << "error (invalid input): " << e.what() << "\n";
        return 2;
    } catch (const size_guard_error& e) {
        std::cerr << "error (size guard): " << e.what() << "\n";
        return 3;
    } catch (const truncation_error& e) {
        std::cerr << "error (truncated): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "runtime_seconds="
              << std::chrono::duration<double>(t1 - t0).count() << "\n";
    return code;
}
