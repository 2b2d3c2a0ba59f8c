// combex: exact search and verification workbench for finite extremal
// combinatorics problems. One subcommand per problem family; every result
// can be written as a JSON certificate and re-checked with `combex verify`.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combex/antipodal_paths.hpp"
#include "combex/budget.hpp"
#include "combex/certificate.hpp"
#include "combex/compressions.hpp"
#include "combex/cube_turan.hpp"
#include "combex/graph_intersect.hpp"
#include "combex/no_three_in_line.hpp"
#include "combex/one_factorizations.hpp"
#include "combex/product_partitions.hpp"
#include "combex/rado_modular.hpp"
#include "combex/saturation_rainbow.hpp"
#include "combex/shattering.hpp"
#include "combex/torus_walks.hpp"
#include "combex/two_families.hpp"

using namespace combex;

namespace {

struct Common {
    std::string out;
    int threads = 1;
    double time_limit = 60.0;
    long long seed = 0;
    std::vector<std::string> params;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "write a JSON certificate to this path");
    cmd->add_option("--threads", c.threads, "worker threads for parallel searches");
    cmd->add_option("--time-limit", c.time_limit, "search time limit in seconds");
    cmd->add_option("--seed", c.seed, "seed for randomised modes");
    cmd->add_option("--params", c.params, "extra key=value parameters");
}

SearchBudget budget_of(const Common& c) {
    SearchBudget b;
    b.time_limit_s = c.time_limit;
    b.threads = c.threads;
    b.seed = uint64_t(c.seed);
    return b;
}

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& params) {
    std::map<std::string, std::string> kv;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--params entries need key=value");
        kv[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return kv;
}

// fill an int option from --params when the typed flag was not given
void merge_param(const std::map<std::string, std::string>& kv, const std::string& key, int& slot) {
    auto it = kv.find(key);
    if (it != kv.end()) slot = std::stoi(it->second);
}
void merge_param(const std::map<std::string, std::string>& kv, const std::string& key,
                 std::string& slot) {
    auto it = kv.find(key);
    if (it != kv.end()) slot = it->second;
}

int finish(Certificate cert, const Common& common, Outcome outcome, long long ms) {
    cert.runtime_ms = ms;
    if (!common.out.empty()) {
        cert.save(common.out);
        std::cout << "certificate written to " << common.out << "\n";
    }
    if (outcome == Outcome::Budget) {
        std::cout << "budget exhausted: result is a bound, not a proven value\n";
        return kExitBudget;
    }
    return kExitOk;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combex: exact combinatorial search and verification workbench"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- verify ----
    {
        static std::vector<std::string> paths;
        auto* cmd = app.add_subcommand("verify", "re-check JSON certificates from their witnesses");
        cmd->add_option("paths", paths, "certificate files")->required();
        cmd->callback([&] {
            for (const auto& p : paths) {
                VerifyResult r = default_registry().verify_file(p);
                std::cout << (r.ok ? "PASS " : "FAIL ") << p << ": " << r.message << "\n";
                if (!r.ok) exit_code = kExitVerifyFailed;
            }
        });
    }

    // ---- cube-turan ----
    {
        auto* mod = app.add_subcommand("cube-turan", "hypercube Turan problems");
        mod->require_subcommand(1);
        {
            static Common common;
            static std::string kind = "C13";
            static int n = 5, param = 0;
            auto* cmd = mod->add_subcommand("free-check", "build a named construction and verify freeness");
            cmd->add_option("--kind", kind, "weight_mod4_k0 | C13 | D2 | C2");
            cmd->add_option("--n", n, "dimension");
            cmd->add_option("--param", param, "d for D2, m for C2");
            add_common(cmd, common);
            cmd->callback([&] {
                auto kv = parse_kv(common.params);
                merge_param(kv, "kind", kind);
                merge_param(kv, "n", n);
                merge_param(kv, "param", param);
                Timer t;
                auto k = parse_turan_construction(kind);
                if (!k) throw CLI::ValidationError("unknown construction kind");
                Certificate cert = make_turan_free_certificate(*k, n, param);
                std::cout << kind << " at n=" << n << ": size " << cert.value << ", Q_"
                          << cert.params.at("d") << "-free: "
                          << (cert.value == "not-free" ? "NO" : "yes") << "\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
                if (cert.value == "not-free") exit_code = kExitVerifyFailed;
            });
        }
        {
            static Common common;
            static int n = 2, k = 0, d = 2;
            auto* cmd = mod->add_subcommand("exact", "exact ex_k(n,d) by branch and bound");
            cmd->add_option("--n", n, "dimension");
            cmd->add_option("--k", k, "subcube order");
            cmd->add_option("--d", d, "forbidden cube order");
            add_common(cmd, common);
            cmd->callback([&] {
                auto kv = parse_kv(common.params);
                merge_param(kv, "n", n);
                merge_param(kv, "k", k);
                merge_param(kv, "d", d);
                Timer t;
                TuranResult r = exact_ex(n, k, d, budget_of(common));
                std::cout << "ex_" << k << "(" << n << "," << d << ") = " << r.value.get_str()
                          << "  (density " << r.density.str() << ")\n";
                exit_code = finish(make_turan_exact_certificate(r), common, r.outcome, t.ms());
            });
        }
        {
            static Common common;
            static std::string kind = "weight_mod4_k0";
            static int param = 0, n_lo = 4, n_hi = 10;
            auto* cmd = mod->add_subcommand("density", "construction density profile over n");
            cmd->add_option("--kind", kind);
            cmd->add_option("--param", param);
            cmd->add_option("--n-lo", n_lo);
            cmd->add_option("--n-hi", n_hi);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                auto k = parse_turan_construction(kind);
                if (!k) throw CLI::ValidationError("unknown construction kind");
                for (auto& [n, dens] : turan_density_profile(*k, param, n_lo, n_hi))
                    std::cout << "n=" << n << "  density " << dens.str() << "\n";
                exit_code = finish(make_turan_density_certificate(*k, param, n_lo, n_hi), common,
                                   Outcome::Proven, t.ms());
            });
        }
    }

    // ---- one-factor ----
    {
        auto* mod = app.add_subcommand("one-factor", "1-factorizations of Q_d");
        mod->require_subcommand(1);
        {
            static Common common;
            static int d = 3;
            auto* cmd = mod->add_subcommand("exhaustive-r", "minimum r over all 1-factorizations");
            cmd->add_option("--d", d, "cube dimension (3 or 4)");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                ExhaustiveR r = exhaustive_r(d, budget_of(common));
                std::cout << "r(" << d << ") = " << r.r << " over " << r.factorizations_seen
                          << " factorizations\n";
                exit_code = finish(make_exhaustive_r_certificate(r), common, r.outcome, t.ms());
            });
        }
        {
            static Common common;
            static int d = 4;
            auto* cmd = mod->add_subcommand("direction", "r_of for the direction factorization");
            cmd->add_option("--d", d);
            add_common(cmd, common);
            cmd->callback([&] {
                std::cout << "r_of(direction factorization of Q_" << d
                          << ") = " << r_of(direction_factorization(d)) << "\n";
            });
        }
    }

    // ---- two-families ----
    {
        auto* mod = app.add_subcommand("two-families", "pair systems of the two-families type");
        mod->require_subcommand(1);
        {
            static Common common;
            static int a = 3, b = 5;
            auto* cmd = mod->add_subcommand("construct", "tight construction and its checks");
            cmd->add_option("--a", a);
            cmd->add_option("--b", b);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                Certificate cert = make_two_families_construct_certificate(a, b);
                std::cout << "construction size " << cert.value << " (= bound "
                          << conj_bound(a, b).get_str() << ")\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
            });
        }
        {
            static Common common;
            static int a = 3, b = 5;
            auto* cmd = mod->add_subcommand("bound", "evaluate the conjectured bound");
            cmd->add_option("--a", a);
            cmd->add_option("--b", b);
            add_common(cmd, common);
            cmd->callback([&] { std::cout << conj_bound(a, b).get_str() << "\n"; });
        }
        {
            static Common common;
            static int a = 2, b = 2, ground = 4;
            auto* cmd = mod->add_subcommand("exact-max", "exhaustive maximum family size");
            cmd->add_option("--a", a);
            cmd->add_option("--b", b);
            cmd->add_option("--ground", ground);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                ExactMaxPairs r = exact_max_conjecture(a, b, ground, budget_of(common));
                std::cout << "max |I| on [" << ground << "] = " << r.value << "\n";
                exit_code = finish(make_two_families_exact_certificate(r, a, b, ground), common,
                                   r.outcome, t.ms());
            });
        }
    }

    // ---- graph-intersect ----
    {
        auto* mod = app.add_subcommand("graph-intersect", "H-intersecting families of graphs");
        mod->require_subcommand(1);
        static Common common;
        static int n = 4;
        static std::string pattern = "1-2,1-3,2-3";
        auto* cmd = mod->add_subcommand("exact-g", "g_H(n) via maximum clique");
        cmd->add_option("--n", n);
        cmd->add_option("--pattern", pattern, "edge list of H, e.g. 1-2,1-3,2-3");
        add_common(cmd, common);
        cmd->callback([&] {
            Timer t;
            ExactGResult r = exact_g(n, parse_pattern(pattern), budget_of(common));
            std::cout << "g_H(" << n << ") = " << r.value.get_str() << "\n";
            exit_code = finish(make_exact_g_certificate(r, n, pattern), common, r.outcome, t.ms());
        });
    }

    // ---- no-three ----
    {
        auto* mod = app.add_subcommand("no-three", "no-three-in-line point sets");
        mod->require_subcommand(1);
        {
            static Common common;
            static long long p = 13;
            auto* cmd = mod->add_subcommand("parabola", "modular parabola construction");
            cmd->add_option("--p", p, "prime grid size");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                Certificate cert = make_parabola_certificate(p);
                std::cout << p << " points, no three collinear\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
            });
        }
        {
            static Common common;
            static long long n = 20;
            static std::string order = "row-major";
            auto* cmd = mod->add_subcommand("greedy", "greedy maximal extension in [n]^2");
            cmd->add_option("--n", n);
            cmd->add_option("--order", order, "row-major | spiral | random");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                ScanOrder so = order == "spiral" ? ScanOrder::Spiral
                               : order == "random" ? ScanOrder::Random
                                                   : ScanOrder::RowMajor;
                PointSet s = greedy_extend({}, n, so, uint64_t(common.seed));
                std::cout << s.points.size() << " points in [" << n << "]^2 (" << order << ")\n";
                auto profile = line_density_profile(s, n);
                std::cout << "|S cap [n]^2| / n = " << profile.back().second.str() << "\n";
                exit_code = finish(make_greedy_certificate(s, n, so, uint64_t(common.seed)), common,
                                   Outcome::Proven, t.ms());
            });
        }
        {
            static std::string file;
            auto* cmd = mod->add_subcommand("verify-points", "check a CSV point set");
            cmd->add_option("file", file, "CSV of x,y lines")->required();
            cmd->callback([&] {
                std::ifstream in(file);
                std::stringstream ss;
                ss << in.rdbuf();
                PointSet s = points_from_csv(ss.str());
                No3Check check = verify_no3(s);
                if (check.ok) {
                    std::cout << "ok: " << s.points.size() << " points, no three collinear\n";
                } else {
                    std::cout << "collinear triple: (" << check.violating[0].first << ","
                              << check.violating[0].second << ") (" << check.violating[1].first
                              << "," << check.violating[1].second << ") ("
                              << check.violating[2].first << "," << check.violating[2].second
                              << ")\n";
                    exit_code = kExitVerifyFailed;
                }
            });
        }
    }

    // ---- torus-walks ----
    {
        auto* mod = app.add_subcommand("torus-walks", "two-step stay probabilities on T_n^k");
        mod->require_subcommand(1);
        {
            static Common common;
            static int n = 4, k = 2;
            static std::string mode = "exhaustive";
            static size_t count = 1000;
            auto* cmd = mod->add_subcommand("sweep", "achievable (p_R, p_B) pairs");
            cmd->add_option("--n", n);
            cmd->add_option("--k", k);
            cmd->add_option("--mode", mode, "exhaustive | random");
            cmd->add_option("--count", count, "sample count in random mode");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                SweepResult r = (mode == "random")
                                    ? sweep_pairs_random(n, k, count, uint64_t(common.seed))
                                    : sweep_pairs_exhaustive(n, k, common.threads);
                std::cout << r.pairs.size() << " distinct pairs over " << r.colourings_seen
                          << " colourings\n";
                size_t outside = 0;
                for (const auto& e : r.pairs) {
                    bool in = (k == 2) ? hull_k2_membership(e.pair)
                                       : hull_conjecture_membership(e.pair, k);
                    if (!in) ++outside;
                }
                std::cout << (outside == 0 ? "all pairs inside the hull\n"
                                           : std::to_string(outside) + " pairs OUTSIDE the hull\n");
                Certificate cert = make_sweep_certificate(r, n, k, mode);
                if (mode == "random") cert.seed = common.seed;
                exit_code = finish(cert, common, r.outcome, t.ms());
            });
        }
        {
            static Common common;
            static int n = 4, k = 2;
            static std::string bits;
            auto* cmd = mod->add_subcommand("pair", "stay pair of one colouring");
            cmd->add_option("--n", n);
            cmd->add_option("--k", k);
            cmd->add_option("--bits", bits, "row-major red membership bitstring")->required();
            add_common(cmd, common);
            cmd->callback([&] {
                TorusColouring c = torus_colouring_from_bits(n, k, bits);
                StayPair p = stay_pair(c);
                std::cout << "(p_R, p_B) = (" << p.p_r.str() << ", " << p.p_b.str() << ")\n";
                bool in = (k == 2) ? hull_k2_membership(p) : hull_conjecture_membership(p, k);
                std::cout << (in ? "inside" : "outside") << " the hull\n";
            });
        }
    }

    // ---- saturation ----
    {
        auto* mod = app.add_subcommand("saturation", "induced-diamond saturation in P([n])");
        mod->require_subcommand(1);
        static Common common;
        static int n = 3;
        auto* cmd = mod->add_subcommand("min", "minimum diamond-saturated family");
        cmd->add_option("--n", n);
        add_common(cmd, common);
        cmd->callback([&] {
            Timer t;
            MinSaturatedResult r = min_saturated(n, budget_of(common));
            std::cout << "minimum diamond-saturated family in P([" << n << "]): " << r.value
                      << "\n";
            exit_code = finish(make_min_saturated_certificate(r, n), common, r.outcome, t.ms());
        });
    }

    // ---- rainbow ----
    {
        auto* mod = app.add_subcommand("rainbow", "rainbow path covers");
        mod->require_subcommand(1);
        static Common common;
        static int n = 6;
        auto* cmd = mod->add_subcommand("cover", "greedy rainbow cover of a coloured K_n");
        cmd->add_option("--n", n);
        add_common(cmd, common);
        cmd->callback([&] {
            Timer t;
            EdgeColouredGraph g = properly_coloured_complete(n);
            auto cover = greedy_rainbow_cover(g);
            std::cout << cover.size() << " rainbow paths cover E(K_" << n << ")\n";
            exit_code = finish(make_rainbow_cover_certificate(g, cover), common, Outcome::Proven,
                               t.ms());
        });
    }

    // ---- antipodal ----
    {
        auto* mod = app.add_subcommand("antipodal", "antipodal paths with few colour changes");
        mod->require_subcommand(1);
        auto make_colouring = [](const std::string& name, int n, int width, int parts,
                                 uint64_t seed) -> EdgeColouring {
            if (name == "monochromatic") return monochromatic_colouring(n);
            if (name == "direction-split") return direction_split_colouring(n);
            if (name == "direction-partition") return direction_partition_colouring(n, parts);
            if (name == "layered") return layered_colouring(n, width);
            if (name == "random") return random_colouring(n, parts, seed);
            if (name == "antipodal-random") return antipodal_random_colouring(n, seed);
            throw CLI::ValidationError("unknown colouring name");
        };
        {
            static Common common;
            static int n = 6, width = 1, parts = 2;
            static std::string name = "layered";
            auto* cmd = mod->add_subcommand("average", "average minimum colour changes");
            cmd->add_option("--n", n);
            cmd->add_option("--colouring", name,
                            "monochromatic | direction-split | direction-partition | layered | "
                            "random | antipodal-random");
            cmd->add_option("--width", width, "band width for layered");
            cmd->add_option("--colours", parts, "palette size for random / partition");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                EdgeColouring c = make_colouring(name, n, width, parts, uint64_t(common.seed));
                std::cout << "walk average: " << average_min_changes(c, common.threads).str()
                          << "\ngeodesic average: "
                          << average_min_changes_geodesic(c, common.threads).str() << "\n";
                exit_code = finish(make_average_certificate(c, name), common, Outcome::Proven,
                                   t.ms());
            });
        }
        {
            static Common common;
            static int n = 8, width = 1, parts = 2;
            static std::string name = "random";
            auto* cmd = mod->add_subcommand("mono-geodesic", "longest monochromatic geodesic");
            cmd->add_option("--n", n);
            cmd->add_option("--colouring", name);
            cmd->add_option("--width", width);
            cmd->add_option("--colours", parts);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                EdgeColouring c = make_colouring(name, n, width, parts, uint64_t(common.seed));
                std::cout << "longest monochromatic geodesic: " << monochromatic_geodesic_length(c)
                          << " (guarantee " << (n + 1) / 2 << ")\n";
                exit_code = finish(make_mono_geodesic_certificate(c, name), common, Outcome::Proven,
                                   t.ms());
            });
        }
        {
            static Common common;
            static int n = 6, k = 2, width = 1;
            static std::string name = "direction-partition";
            auto* cmd = mod->add_subcommand("k-check", "geodesics within k colour changes");
            cmd->add_option("--n", n);
            cmd->add_option("--k", k);
            cmd->add_option("--colouring", name);
            cmd->add_option("--width", width);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                EdgeColouring c = make_colouring(name, n, width, k + 1, uint64_t(common.seed));
                Certificate cert = make_k_check_certificate(c, name, k);
                std::cout << "minimum geodesic changes over antipodal pairs: " << cert.value
                          << " (within k=" << k << ": "
                          << (cert.witness.at("within_k").get<bool>() ? "yes" : "NO") << ")\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
                if (!cert.witness.at("within_k").get<bool>()) exit_code = kExitVerifyFailed;
            });
        }
    }

    // ---- compress ----
    {
        auto* mod = app.add_subcommand("compress", "compressions and directed boundaries");
        mod->require_subcommand(1);
        {
            static Common common;
            static int n = 3;
            auto* cmd = mod->add_subcommand("paired", "exhaustive paired-inequality check");
            cmd->add_option("--n", n, "cube dimension (exhaustive, n <= 4)");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                Certificate cert = make_paired_inequality_certificate(n);
                std::cout << cert.value << " (family, direction) pairs checked; all hold: "
                          << (cert.witness.at("all_hold").get<bool>() ? "yes" : "NO") << "\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
                if (!cert.witness.at("all_hold").get<bool>()) exit_code = kExitVerifyFailed;
            });
        }
        {
            static Common common;
            static int n = 5, size_a = 2, size_b = 2;
            auto* cmd = mod->add_subcommand("flow", "edge-disjoint upward paths A -> B");
            cmd->add_option("--n", n);
            cmd->add_option("--size-a", size_a, "|A| (down-set, grown at random)");
            cmd->add_option("--size-b", size_b, "|B| (up-set, grown at random)");
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                auto [a, b] = random_disjoint_down_up(n, size_t(size_a), size_t(size_b),
                                                      uint64_t(common.seed));
                FlowResult r = edge_disjoint_upward_paths(a, b);
                std::cout << r.value << " edge-disjoint upward paths\n";
                Certificate cert = make_flow_certificate(a, b, r);
                cert.seed = common.seed;
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
            });
        }
        {
            static Common common;
            static int n = 3;
            static std::string op = "c";
            auto* cmd = mod->add_subcommand("find-increase", "family whose compression grows the boundary");
            cmd->add_option("--n", n);
            cmd->add_option("--op", op, "c | d");
            add_common(cmd, common);
            cmd->callback([&] {
                auto hit = (op == "c") ? find_c_increase(n) : find_d_increase(n);
                if (!hit) {
                    std::cout << "no counterexample at n=" << n << "\n";
                    return;
                }
                auto [f, i] = *hit;
                SubsetFamily g = (op == "c") ? c_compress(f, i) : d_compress(f, i);
                std::cout << "family of size " << f.count() << ", direction " << i + 1
                          << ": boundary " << directed_boundary(f) << " -> "
                          << directed_boundary(g) << "\n";
            });
        }
    }

    // ---- rado ----
    {
        auto* mod = app.add_subcommand("rado", "modular Rado colourings over Z/2^r");
        mod->require_subcommand(1);
        {
            static Common common;
            static int r = 2;
            static std::string coeffs = "1,1";
            auto* cmd = mod->add_subcommand("d", "largest 2-adic subset-sum valuation");
            cmd->add_option("--r", r);
            cmd->add_option("--coeffs", coeffs, "comma-separated coefficients");
            add_common(cmd, common);
            cmd->callback([&] {
                std::vector<long long> a;
                std::stringstream ss(coeffs);
                std::string item;
                while (std::getline(ss, item, ',')) a.push_back(std::stoll(item));
                std::cout << "d = " << compute_d(make_instance(r, a)) << "\n";
            });
        }
        {
            static Common common;
            static int r = 2, k_max = 8;
            static std::string coeffs = "1,1";
            auto* cmd = mod->add_subcommand("min-k", "least K admitting a valid colouring");
            cmd->add_option("--r", r);
            cmd->add_option("--coeffs", coeffs);
            cmd->add_option("--k-max", k_max);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                std::vector<long long> a;
                std::stringstream ss(coeffs);
                std::string item;
                while (std::getline(ss, item, ',')) a.push_back(std::stoll(item));
                ModularInstance inst = make_instance(r, a);
                MinKResult res = min_K(inst, k_max, budget_of(common));
                if (res.k > 0)
                    std::cout << "min K = " << res.k << "\n";
                else
                    std::cout << "no valid colouring with K <= " << k_max << "\n";
                exit_code = finish(make_min_k_certificate(inst, res), common, res.outcome, t.ms());
            });
        }
    }

    // ---- product-cover ----
    {
        auto* mod = app.add_subcommand("product-cover", "partitions of E(K_a) x E(K_b)");
        mod->require_subcommand(1);
        {
            static Common common;
            static int n = 5;
            auto* cmd = mod->add_subcommand("star", "the (n-1)^2 star partition");
            cmd->add_option("--n", n);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                Certificate cert = make_star_certificate(n);
                std::cout << cert.value << " blocks, partition: "
                          << (cert.witness.at("partition_ok").get<bool>() ? "yes" : "NO") << "\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
            });
        }
        {
            static Common common;
            static std::string target = "g";
            static int n = 3;
            auto* cmd = mod->add_subcommand("exact", "exact minimum block counts");
            cmd->add_option("--target", target, "g | h | g-tilde");
            cmd->add_option("--n", n);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                ProductTarget pt = target == "h" ? ProductTarget::H
                                   : target == "g-tilde" ? ProductTarget::GTilde
                                                         : ProductTarget::G;
                ProductExactResult r = exact_product_value(pt, n, budget_of(common));
                std::cout << target << "(" << n << ") = " << r.value << "\n";
                exit_code = finish(make_product_exact_certificate(pt, n, r), common, r.outcome,
                                   t.ms());
            });
        }
        {
            static int n_lo = 2, n_hi = 10;
            auto* cmd = mod->add_subcommand("table", "bound context table");
            cmd->add_option("--n-lo", n_lo);
            cmd->add_option("--n-hi", n_hi);
            cmd->callback([&] {
                for (const auto& row : bound_table(n_lo, n_hi))
                    std::cout << "n=" << row.n << "  star " << row.star_bound.get_str()
                              << "  odd-cover " << row.odd_cover_bound.get_str() << "  h-slope "
                              << row.h_slope.str() << "\n";
            });
        }
    }

    // ---- shatter ----
    {
        auto* mod = app.add_subcommand("shatter", "partial shattering by permutations");
        mod->require_subcommand(1);
        {
            static Common common;
            static std::string example = "paper-s5";
            auto* cmd = mod->add_subcommand("verify", "verify the S_5 example family");
            cmd->add_option("--example", example);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                if (example != "paper-s5") throw CLI::ValidationError("unknown example");
                Certificate cert = make_s5_verification_certificate();
                VerifyResult check = default_registry().verify(cert);
                std::cout << (check.ok ? "verified: " : "FAILED: ") << check.message << "\n";
                exit_code = finish(cert, common, Outcome::Proven, t.ms());
                if (!check.ok) exit_code = kExitVerifyFailed;
            });
        }
        {
            static Common common;
            static int n = 5, k = 3, t_orders = 2;
            auto* cmd = mod->add_subcommand("min", "minimum t-shattering family");
            cmd->add_option("--n", n);
            cmd->add_option("--k", k);
            cmd->add_option("--t", t_orders);
            add_common(cmd, common);
            cmd->callback([&] {
                Timer t;
                MinFamilyResult r = min_family(n, k, t_orders, budget_of(common));
                std::cout << "min |P| " << t_orders << "-shattering all " << k << "-subsets of ["
                          << n << "]: " << r.value << "\n";
                exit_code = finish(make_min_family_certificate(n, k, t_orders, r), common,
                                   r.outcome, t.ms());
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
