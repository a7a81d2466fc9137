// Acceptance suite: every criterion prints one PASS/FAIL line with the
// measured quantities. Run all with no arguments, a subset with --only N
// (repeatable). --cli <path> points at the command-line binary for the
// determinism criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coverlab/coverlab.hpp"
#include "oracles.hpp"

using namespace coverlab;

namespace {

std::string g_cli_path;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Multigraph random_cubic(std::size_t n, std::uint64_t seed) {
    Rng rng(seed, 0);
    while (true) {
        const auto g = pairing_to_multigraph(sample_pairing(std::vector<int>(n, 3), rng));
        if (g.connected()) return g;
    }
}

// ---------------------------------------------------------------------
// 1. Sampler equivalence: uniform-composition vs conditioned-geometric.
Outcome criterion1() {
    Outcome out;
    std::ostringstream d;
    for (const auto& [M, nu2] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 2}, {3, 4}, {4, 5}}) {
        // enumerate compositions of nu2+M into M parts
        std::map<std::vector<std::uint32_t>, std::size_t> index;
        std::vector<std::uint32_t> cur;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left,
                                                                std::size_t parts) {
            if (parts == 1) {
                cur.push_back(static_cast<std::uint32_t>(left));
                index.emplace(cur, index.size());
                cur.pop_back();
                return;
            }
            for (std::size_t z = 1; z + parts - 1 <= left; ++z) {
                cur.push_back(static_cast<std::uint32_t>(z));
                rec(left - z, parts - 1);
                cur.pop_back();
            }
        };
        rec(nu2 + M, M);
        const std::size_t draws = 100000;
        std::vector<std::uint64_t> cu(index.size(), 0), cg(index.size(), 0);
        Rng r1(4001, M * 100 + nu2), r2(4002, M * 100 + nu2);
        for (std::size_t i = 0; i < draws; ++i) {
            ++cu[index.at(sample_path_lengths_uniform(M, nu2, r1))];
            ++cg[index.at(sample_path_lengths_geometric(M, nu2, r2))];
        }
        const auto chi = chi_square_two_sample(cu, cg);
        d << "(" << M << "," << nu2 << ") p=" << fmt(chi.p_value) << " ";
        if (chi.p_value <= 0.01) out.pass = false;
    }
    // exact enumeration at (3,3): every composition has chain probability
    // exactly 1/10 (integer identity)
    auto binom = [](std::uint64_t n, std::uint64_t k) -> std::uint64_t {
        if (k > n) return 0;
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    bool exact_ok = true;
    for (std::uint32_t a = 1; a <= 4; ++a)
        for (std::uint32_t b = 1; a + b <= 5; ++b) {
            const std::uint64_t num = binom(6 - a - 1, 1) * binom(6 - a - b - 1, 0);
            const std::uint64_t den = binom(5, 2) * binom(6 - a - 1, 1);
            if (num * 10 != den) exact_ok = false;
        }
    d << "exact(3,3)=" << (exact_ok ? "match" : "MISMATCH");
    if (!exact_ok) out.pass = false;
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 2. Simple-graph probability for 3-regular n=100.
Outcome criterion2() {
    const auto seq = DegreeSequence::from(std::vector<int>(100, 3));
    const double predicted = predicted_simple_probability(seq);
    const std::size_t draws = 10000;
    std::size_t simple = 0;
    Rng rng(4010, 0);
    for (std::size_t i = 0; i < draws; ++i)
        if (pairing_to_multigraph(sample_pairing(seq.degrees(), rng)).is_simple()) ++simple;
    const double freq = static_cast<double>(simple) / draws;
    const double sigma3 = 3.0 * binomial_sigma(predicted, draws);
    Outcome out;
    out.pass = std::abs(freq - predicted) < sigma3;
    out.detail = "empirical=" + fmt(freq) + " predicted=" + fmt(predicted) +
                 " tolerance(3sigma)=" + fmt(sigma3);
    return out;
}

// ---------------------------------------------------------------------
// 3. rho_d convergence at depth 40.
Outcome criterion3() {
    Outcome out;
    std::ostringstream d;
    for (int deg : {3, 4, 5}) {
        const double err = std::abs(regular_tree_resistance(deg, 40) - rho_d(deg));
        d << "d=" << deg << " err=" << fmt(err) << " ";
        if (!(err < 1e-9)) out.pass = false;
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 4. Coupling law and star hitting time for lengths (1,2,3).
Outcome criterion4() {
    const std::vector<std::uint32_t> lengths{1, 2, 3};
    const auto law = star_exit_law(lengths);
    const double lambda = star_hitting_formula(lengths);

    // cross-validate both against the absorbing-chain solve to 1e-10
    const auto star = make_star_of_paths(lengths);
    const auto solve = oracles::absorbing_solve(star.graph, star.leaves);
    bool oracle_ok = std::abs(solve.expected_time(star.hub) - lambda) < 1e-10;
    for (std::size_t i = 0; i < 3; ++i)
        oracle_ok = oracle_ok && std::abs(solve.absorb_prob(star.hub, i) - law[i]) < 1e-10;

    const std::size_t trials = 1000000;
    const auto r = star_walk_experiment(lengths, trials, 4020, 1);
    Outcome out;
    std::ostringstream d;
    d << "oracle=" << (oracle_ok ? "ok" : "FAIL") << " ";
    out.pass = oracle_ok;
    for (std::size_t i = 0; i < 3; ++i) {
        const double err = std::abs(r.exit_fraction[i] - law[i]);
        const double tol = 3.0 * binomial_sigma(law[i], trials);
        d << "exit" << i << " err=" << fmt(err) << "/" << fmt(tol) << " ";
        if (!(err < tol)) out.pass = false;
    }
    const double terr = std::abs(r.steps.mean - lambda);
    const double ttol = 3.0 * r.steps.se.value();
    d << "time err=" << fmt(terr) << "/" << fmt(ttol) << " (Lambda=36/11)";
    if (!(terr < ttol)) out.pass = false;
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 5. Matthews bound below simulated cover on 20 random graphs (n <= 12).
Outcome criterion5() {
    Outcome out;
    std::ostringstream d;
    std::size_t made = 0;
    std::uint64_t attempt = 0;
    double worst_margin = 1e18;
    while (made < 20) {
        Rng rng(4030, attempt++);
        const std::size_t n = 5 + rng.below(8); // 5..12
        const auto g = sample_gnp(n, 2.5 / static_cast<double>(n), rng);
        if (!g.connected()) continue;
        ++made;
        const auto w = WeightedGraph::from_multigraph(g);
        const auto best = matthews_best_bound(w);
        const auto table = estimate_cover_time(w, 2000, WalkConfig{}, 4031 + attempt, 1);
        const auto& top = table.per_start[table.argmax_start];
        const double allowed = top.mean + 3.0 * top.se.value();
        worst_margin = std::min(worst_margin, allowed - best.bound);
        if (best.bound > allowed) {
            out.pass = false;
            d << "violation at instance " << made << ": bound=" << fmt(best.bound)
              << " sim=" << fmt(top.mean) << "+3se ";
        }
    }
    d << "instances=20 worst_margin=" << fmt(worst_margin);
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 6. Jerrum-Sinclair bound on lazy K4, C6, Petersen, 5 random cubics.
Outcome criterion6() {
    Outcome out;
    std::ostringstream d;
    std::vector<std::pair<std::string, Multigraph>> graphs{
        {"K4", make_complete(4)}, {"C6", make_cycle(6)}, {"petersen", make_petersen()}};
    for (std::uint64_t i = 0; i < 5; ++i)
        graphs.emplace_back("cubic10#" + std::to_string(i), random_cubic(10, 4040 + i));
    for (const auto& [name, g] : graphs) {
        const auto w = WeightedGraph::from_multigraph(g);
        const auto r = js_check(w, 200, conductance_exact(w).phi);
        d << name << " max_ratio=" << fmt(r.max_ratio) << " ";
        if (!r.holds) {
            out.pass = false;
            d << "VIOLATED ";
        }
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 7. Gillman tail bound on lazy C8 and a random cubic n=20.
Outcome criterion7() {
    Outcome out;
    std::ostringstream d;
    std::vector<std::pair<std::string, Multigraph>> graphs{{"C8", make_cycle(8)},
                                                           {"cubic20", random_cubic(20, 4050)}};
    const std::uint64_t t = 1000;
    const std::size_t trials = 100000;
    for (const auto& [name, g] : graphs) {
        const auto w = WeightedGraph::from_multigraph(g);
        const double theta = spectral_gap(transition_matrix(w, true)).gap;
        const std::uint32_t a = 0;
        const double nq = gillman_nq_point_mass(w.stationary(a));
        const auto tail = empirical_visit_tail(w, {a}, t, trials, a, true, 4051, 1);
        // 10-point gamma grid starting where the bound crosses 1
        double gamma1 = 1.0;
        while (gillman_tail_bound(theta, nq, static_cast<double>(t), gamma1) > 1.0 &&
               gamma1 < static_cast<double>(t))
            gamma1 += 1.0;
        d << name << " theta=" << fmt(theta) << " gamma1=" << fmt(gamma1) << " ";
        for (int i = 0; i < 10; ++i) {
            const double gamma = gamma1 * (1.0 + 0.1 * i);
            const double bound = gillman_tail_bound(theta, nq, static_cast<double>(t), gamma);
            if (bound > 1.0) continue;
            const double emp = tail.tail_at(gamma, static_cast<double>(t) * tail.pi_A);
            if (emp > bound) {
                out.pass = false;
                d << "VIOLATED gamma=" << fmt(gamma) << " emp=" << fmt(emp)
                  << " bound=" << fmt(bound) << " ";
            }
        }
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 8. Resistance tail bounds at k in {1, 6}, xi in {0.3, 0.5}.
Outcome criterion8() {
    Outcome out;
    std::ostringstream d;
    std::vector<double> grid;
    for (int r = 1; r <= 14; ++r) grid.push_back(r);
    for (int k : {1, 6}) {
        for (double xi : {0.3, 0.5}) {
            const auto exp = subdivided_tail_experiment(k, xi, grid, 1000000, 4060 + k);
            std::size_t asserted = 0;
            for (const auto& row : exp.rows)
                if (row.asserted) ++asserted;
            d << "k=" << k << " xi=" << fmt(xi) << " asserted=" << asserted
              << (exp.all_asserted_hold ? " ok " : " VIOLATED ");
            if (!exp.all_asserted_hold || asserted == 0) out.pass = false;
        }
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 9. Surrogate (l*)^2 rescaling, exact cycle case and a random kernel.
Outcome criterion9() {
    Outcome out;
    std::ostringstream d;
    {
        const SubdividedGraph sub{make_cycle(4), {3, 3, 3, 3}};
        const auto check = scaling_check(sub, 3, 1000, 4070, 1);
        d << "cycle r=" << fmt(check.ratio) << " ";
        if (!check.within(0.1)) out.pass = false;
    }
    {
        const auto kernel = random_cubic(20, 4071); // M = 30
        Rng rng(4072, 0);
        const auto lengths = sample_path_lengths_uniform(kernel.edge_count(), 270, rng); // xi=0.1
        const SubdividedGraph sub{kernel, lengths};
        const auto check = scaling_check(sub, 3, 1000, 4073, 1);
        d << "cubic(M=30,xi=0.1) r=" << fmt(check.ratio);
        if (!check.within(0.1)) out.pass = false;
    }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 10. Theorem 1(a) trend for d=3, nu2=0.
Outcome criterion10() {
    Outcome out;
    std::ostringstream d;
    // 3-regular graphs need an even vertex count: sizes nearest 2M/3 for the
    // requested grid M = 250, 500, 1000, 2000
    const std::vector<std::size_t> ns{166, 334, 666, 1334};
    std::vector<double> ratios;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const std::size_t n = ns[i];
        const double M = 3.0 * static_cast<double>(n) / 2.0;
        const auto g = WeightedGraph::from_multigraph(random_cubic(n, 4080 + i));
        const auto stats =
            cover_time_stats(g, 0, CoverMode::vertex, 200, WalkConfig{}, 4090 + i, 1);
        const double predicted = 4.0 / 3.0 * M * std::log(M);
        ratios.push_back(stats.mean / predicted);
        d << "M=" << M << " ratio=" << fmt(ratios.back()) << " ";
    }
    const double last = ratios.back();
    if (!(last > 0.7 && last < 1.3)) out.pass = false;
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (std::abs(ratios[i] - 1.0) > std::abs(ratios[i - 1] - 1.0) + 1e-12) {
            out.pass = false;
            d << "deviation increased at step " << i << " ";
        }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 11. Case (c) / 2-core of G(n, 1.5/n) trend (long-running).
Outcome criterion11() {
    Outcome out;
    std::ostringstream d;
    const double c = 1.5;
    const std::vector<std::size_t> ns{20000, 50000, 100000};
    std::vector<double> ratios;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto n = ns[i];
        Rng rng(4100 + i, 0);
        const auto g = sample_gnp(n, c / static_cast<double>(n), rng);
        const auto core = two_core(giant_component(g));
        const auto w = WeightedGraph::from_multigraph(core);
        const auto stats =
            cover_time_stats(w, 0, CoverMode::vertex, 50, WalkConfig{}, 4110 + i, 1);
        const double predicted = predict_gnp(c, static_cast<double>(n)).cover_2core;
        ratios.push_back(stats.mean / predicted);
        d << "n=" << n << " core=" << core.vertex_count() << " ratio=" << fmt(ratios.back())
          << " ";
    }
    const double last = ratios.back();
    if (!(last > 0.5 && last < 1.5)) out.pass = false;
    for (std::size_t i = 1; i < ratios.size(); ++i)
        if (std::abs(ratios[i] - 1.0) > std::abs(ratios[i - 1] - 1.0) + 1e-12) {
            out.pass = false;
            d << "deviation increased at step " << i << " ";
        }
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 12. phi consistency and the regime-B/C seam.
Outcome criterion12() {
    Outcome out;
    std::ostringstream d;
    const double scaled = phi(0.99, 3) * 8.0 * 0.01;
    d << "phi(0.99,3)*8*(1-a)=" << fmt(scaled) << " ";
    if (!(scaled >= 0.9 && scaled <= 1.2)) out.pass = false;

    const double p_half = phi(0.5, 3);
    d << "phi(0.5,3)=" << fmt(p_half) << " ";
    if (p_half != 1.0) out.pass = false;

    const double M = 1e13;
    const double nu2 = std::pow(M, 0.95);
    const double lnM = std::log(M);
    const double bval = std::max(4.0 / 3.0, phi(0.95, 3)) * M * lnM;
    const double cval = (M + nu2) * lnM * lnM / (-8.0 * std::log(nu2 / (M + nu2)));
    const double seam = cval / bval;
    d << "seam C/B=" << fmt(seam);
    if (!(std::abs(seam - 1.0) < 0.2)) out.pass = false;
    out.detail = d.str();
    return out;
}

// ---------------------------------------------------------------------
// 13. CLI determinism across reruns and thread counts.
Outcome criterion13() {
    Outcome out;
    std::ostringstream d;
    if (g_cli_path.empty()) {
        out.pass = false;
        out.detail = "no --cli path given";
        return out;
    }
    const std::string tmp = "/tmp/coverlab_accept";
    auto run = [&](const std::string& args) {
        const std::string cmd = g_cli_path + " " + args + " >/dev/null 2>/dev/null";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    {
        std::ofstream deg(tmp + ".degrees");
        for (int i = 0; i < 8; ++i) deg << 3 << "\n";
        for (int i = 0; i < 6; ++i) deg << 2 << "\n";
        std::ofstream k(tmp + ".kernel");
        k << "vertices 4\n0 1 5\n1 2 4\n2 3 6\n0 3 3\n";
    }
    struct Case {
        std::string name;
        std::string a, b;
        std::vector<std::string> files;
    };
    const std::vector<Case> cases{
        {"gen-degrees",
         "gen --degrees " + tmp + ".degrees --seed 7 --out " + tmp + "_g1",
         "gen --degrees " + tmp + ".degrees --seed 7 --out " + tmp + "_g2",
         {"_g1.graph", "_g2.graph", "_g1.meta.json", "_g2.meta.json"}},
        {"gen-gnp",
         "gen --gnp 400,2 --seed 3 --out " + tmp + "_n1",
         "gen --gnp 400,2 --seed 3 --out " + tmp + "_n2",
         {"_n1.core.graph", "_n2.core.graph", "_n1.kernel", "_n2.kernel"}},
        {"walk-threads",
         "walk --graph C8 --seed 5 --trials 2000 --threads 1 --out " + tmp + "_w1.csv",
         "walk --graph C8 --seed 5 --trials 2000 --threads 3 --out " + tmp + "_w2.csv",
         {"_w1.csv", "_w2.csv"}},
        {"surrogate-threads",
         "surrogate --kernel " + tmp + ".kernel --ell-star 2 --scaling-check --trials 500 "
         "--seed 4 --threads 1 --out " + tmp + "_s1",
         "surrogate --kernel " + tmp + ".kernel --ell-star 2 --scaling-check --trials 500 "
         "--seed 4 --threads 2 --out " + tmp + "_s2",
         {"_s1.report.json", "_s2.report.json"}},
        {"compare-threads",
         "compare --d 3 --M-grid 30,60 --trials 40 --seed 2 --threads 1 --out " + tmp + "_c1.csv",
         "compare --d 3 --M-grid 30,60 --trials 40 --seed 2 --threads 2 --out " + tmp + "_c2.csv",
         {"_c1.csv", "_c2.csv"}},
        {"tails-rerun",
         "exact --resistance-tails 1 --xi 0.5 --rho-grid 1,2,3 --trials 30000 --seed 11 --out " +
             tmp + "_t1.csv",
         "exact --resistance-tails 1 --xi 0.5 --rho-grid 1,2,3 --trials 30000 --seed 11 --out " +
             tmp + "_t2.csv",
         {"_t1.csv", "_t2.csv"}},
    };
    for (const auto& cs : cases) {
        if (run(cs.a) != 0 || run(cs.b) != 0) {
            out.pass = false;
            d << cs.name << " nonzero exit ";
            continue;
        }
        for (std::size_t i = 0; i + 1 < cs.files.size(); i += 2) {
            if (slurp(tmp + cs.files[i]) != slurp(tmp + cs.files[i + 1])) {
                out.pass = false;
                d << cs.name << " differs (" << cs.files[i] << ") ";
            }
        }
        d << cs.name << " ok ";
    }
    out.detail = d.str();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> only;
    bool longrun = false;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc)
            only.push_back(std::atoi(argv[++i]));
        else if (a == "--cli" && i + 1 < argc)
            g_cli_path = argv[++i];
        else if (a == "--longrun")
            longrun = true;
    }
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        bool long_running = false;
    };
    const std::vector<Criterion> criteria{
        {1, "sampler equivalence (uniform vs conditioned geometric)", criterion1},
        {2, "simple-graph probability e^{-2} for 3-regular n=100", criterion2},
        {3, "rho_d convergence of the d-regular tree resistance", criterion3},
        {4, "star coupling law and leaf hitting time (1,2,3)", criterion4},
        {5, "Matthews bound below simulated cover times (20 graphs)", criterion5},
        {6, "Jerrum-Sinclair mixing bound, t <= 200", criterion6},
        {7, "Gillman visit tail bound on lazy chains", criterion7},
        {8, "binary-tree resistance tail bounds", criterion8},
        {9, "surrogate (l*)^2 rescaling ratio <= 1.1", criterion9},
        {10, "Theorem-1(a)-style trend, d=3 kernel-only grid", criterion10},
        {11, "G(n,p) 2-core trend at c=1.5 (long-running)", criterion11, true},
        {12, "phi consistency and the regime seam", criterion12},
        {13, "byte-identical reruns across seeds and thread counts", criterion13},
    };
    int failures = 0;
    int ran = 0;
    for (const auto& c : criteria) {
        const bool selected =
            only.empty() ? (!c.long_running || longrun)
                         : std::find(only.begin(), only.end(), c.id) != only.end();
        if (!selected) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s | %s | %.1fs\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criteria selected\n");
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
