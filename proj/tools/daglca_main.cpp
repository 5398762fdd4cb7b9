// Command-line front end: instance generation, algorithm runs, oracle
// cross-checks and timing. Exit codes: 0 success/pass, 1 check failure or
// algorithm error, 2 usage error, 3 input error.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daglca/daglca.hpp"
#include "daglca/io.hpp"
#include "daglca/max_witness_via_verlca.hpp"

namespace {

using namespace daglca;
using nlohmann::json;

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

VertexPartition make_partition(const std::vector<int>& sizes) {
    static const std::string kNames[] = {"", "", "", "ABU", "ABCU", "ABCDU", "ABCDEU"};
    if (sizes.size() < 3 || sizes.size() > 6)
        throw InvalidParams("--parts needs between 3 and 6 sizes");
    VertexPartition p;
    const std::string& names = kNames[sizes.size()];
    for (size_t i = 0; i < sizes.size(); ++i) p.groups.emplace_back(names[i], sizes[i]);
    return p;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::string provenance_comment(const json& header) {
    std::string line = "#";
    for (auto it = header.begin(); it != header.end(); ++it)
        line += " " + it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
    return line + "\n";
}

struct RunConfig {
    std::string alg;
    std::string in_path;
    std::string in2_path;
    std::string out_path;
    std::string format = "json";
    std::string dump_gadget;
    int k = 1;
    int block_size = 0;  // 0 = default ceil(sqrt(n))
    uint64_t seed = 0;
};

BoolMatrix decision_from(const Dag& g, const RunConfig& cfg) {
    if (cfg.alg == "atleast-k") return atleast_k(g, cfg.k, cfg.seed);
    if (cfg.alg == "atmost-k") return atmost_k(g, cfg.k, cfg.seed);
    return exact_k(g, cfg.k, cfg.seed);
}

int cmd_run(const RunConfig& cfg) {
    const std::string input = read_file(cfg.in_path);
    json header = {{"algorithm", cfg.alg},
                   {"seed", cfg.seed},
                   {"input_hash", content_hash(input)}};
    if (!cfg.in2_path.empty()) header["input_hash2"] = content_hash(read_file(cfg.in2_path));

    const auto finish_json = [&](json report) {
        report.update(header);
        emit(cfg.out_path, report.dump(2) + "\n");
        return 0;
    };
    const auto finish_csv = [&](const std::string& body) {
        emit(cfg.out_path, provenance_comment(header) + body);
        return 0;
    };

    if (cfg.alg == "closure") {
        const BoolMatrix d = transitive_closure(parse_dag(input));
        if (cfg.format == "csv") return finish_csv(bool_matrix_to_text(d));
        json rows = json::array();
        for (int i = 0; i < d.rows(); ++i) {
            std::string row(static_cast<size_t>(d.cols()), '0');
            for (int j = 0; j < d.cols(); ++j)
                if (d.get(i, j)) row[static_cast<size_t>(j)] = '1';
            rows.push_back(row);
        }
        return finish_json({{"kind", "bool-matrix"}, {"rows", d.rows()}, {"cols", d.cols()},
                            {"data", rows}});
    }
    if (cfg.alg == "all-lca" || cfg.alg == "k-lca-brute") {
        const Dag g = parse_dag(input);
        const int k = cfg.alg == "all-lca" ? std::max(g.n(), 1) : cfg.k;
        return finish_json(report_to_json(k_lcas_bruteforce(g, k)));
    }
    if (cfg.alg == "count-lca") {
        const LcaReport r = count_lcas(parse_dag(input));
        if (cfg.format == "csv") return finish_csv(counts_to_csv(r.counts));
        return finish_json(report_to_json(r));
    }
    if (cfg.alg == "exact1")
        return finish_json(exact_report_to_json(exact1_lca(parse_dag(input), cfg.seed)));
    if (cfg.alg == "exact2")
        return finish_json(exact_report_to_json(exact2_lca(parse_dag(input), cfg.seed)));
    if (cfg.alg == "exact-k" || cfg.alg == "atleast-k" || cfg.alg == "atmost-k") {
        const Dag g = parse_dag(input);
        const BoolMatrix bits = decision_from(g, cfg);
        LcaReport r = LcaReport::make_decision(g.n());
        r.decision = bits;
        return finish_json(report_to_json(r));
    }
    if (cfg.alg == "latest-lca") {
        const LcaReport r = latest_lca(parse_dag(input));
        if (cfg.format == "csv") {
            WitnessMatrix w(r.n);
            for (int u = 0; u < r.n; ++u)
                for (int v = 0; v < r.n; ++v)
                    if (!r.lists[u][v].empty()) w.set(u, v, r.lists[u][v][0]);
            return finish_csv(witness_to_csv(w));
        }
        return finish_json(report_to_json(r));
    }
    if (cfg.alg == "list-k") {
        const Dag g = parse_dag(input);
        const uint64_t seed = cfg.seed;
        const Detector detector = [seed](const Dag& sub, int level) {
            return atleast_k(sub, level, seed);
        };
        const int block = cfg.block_size > 0 ? cfg.block_size : default_block_size(g.n());
        return finish_json(report_to_json(list_k_lcas(g, cfg.k, detector, block)));
    }
    if (cfg.alg == "ap2" || cfg.alg == "ap3") {
        const Dag g = parse_dag(input);
        const int block = cfg.block_size > 0 ? cfg.block_size : default_block_size(g.n());
        const LcaReport r = cfg.alg == "ap2" ? ap2_lca(g, block) : ap3_lca(g, block);
        return finish_json(report_to_json(r));
    }
    if (cfg.alg == "max-witness" || cfg.alg == "max-witness-via-verlca") {
        if (cfg.in2_path.empty()) throw InvalidParams("--in2 required for max-witness");
        const BoolMatrix a = bool_matrix_from_text(input);
        const BoolMatrix b = load_bool_matrix(cfg.in2_path);
        WitnessMatrix w(0);
        if (cfg.alg == "max-witness") {
            const int block = cfg.block_size > 0 ? cfg.block_size : default_block_size(a.rows());
            w = max_witness_direct(a, b, block);
        } else {
            w = max_witness_via_verlca(a, b, [](const Dag& g, const CandidateMatrix& cand) {
                return verify_candidates(g, cand).ok;
            });
        }
        if (cfg.format == "csv") return finish_csv(witness_to_csv(w));
        return finish_json(witness_to_json(w));
    }
    if (cfg.alg == "verify") {
        if (cfg.in2_path.empty()) throw InvalidParams("--in2 required for verify");
        const Dag g = parse_dag(input);
        const CandidateMatrix cand = load_candidates(cfg.in2_path);
        const VerifyResult res = verify_candidates(g, cand);
        LcaReport r = LcaReport::make_decision(g.n());
        r.decision = res.ok;
        json body = report_to_json(r);
        body["kind"] = "verify";
        body["any_error"] = res.any_error;
        return finish_json(body);
    }
    if (cfg.alg == "solve-hyperclique") {
        const Hypergraph3 h = hypergraph_from_text(input);
        if (!cfg.dump_gadget.empty()) {
            const GadgetInstance gadget = build_hyperclique_gadget(h, cfg.k);
            write_file(cfg.dump_gadget, dag_to_json(gadget.graph).dump(2) + "\n");
            json queries = json::array();
            for (const auto& q : gadget.queries)
                queries.push_back({{"u", q.u}, {"v", q.v}, {"source", q.source}});
            write_file(cfg.dump_gadget + ".queries.json",
                       json{{"expected_count", gadget.expected_count}, {"queries", queries}}
                               .dump(2) +
                           "\n");
        }
        return finish_json({{"kind", "decision-scalar"},
                            {"answer", solve_hyperclique_via_eqlca(h, cfg.k)},
                            {"target_k", cfg.k}});
    }
    if (cfg.alg == "solve-4clique")
        return finish_json({{"kind", "decision-scalar"},
                            {"answer", solve_4clique_via_countlca(fourpartite_from_text(input))}});
    if (cfg.alg == "solve-4hyperclique-verlca")
        return finish_json({{"kind", "decision-scalar"},
                            {"answer", solve_4hyperclique_via_verlca(hypergraph_from_text(input))}});
    if (cfg.alg == "add-one-lca") {
        const auto [out, rho] = add_one_lca(parse_dag(input));
        return finish_json({{"kind", "add-one-lca"}, {"dag", dag_to_json(out)}, {"rho", rho}});
    }
    std::cerr << "unknown algorithm: " << cfg.alg << "\n";
    return 2;
}

// ---- check: seeded instances, exact comparison against an oracle ----

struct CheckConfig {
    std::string alg;
    std::string oracle;
    std::string dump = "counterexample";
    int n = 64;
    double p = 0.1;
    int trials = 20;
    int k = 1;
    int block_size = 0;
    uint64_t seed = 1;
    std::vector<int> parts;
};

bool lists_prefix_match(const LcaReport& got, const LcaReport& want, int prefix,
                        std::string& why) {
    for (int u = 0; u < got.n; ++u)
        for (int v = 0; v < got.n; ++v) {
            std::vector<int> expected = want.lists[u][v];
            if (static_cast<int>(expected.size()) > prefix) expected.resize(prefix);
            if (got.lists[u][v] != expected) {
                std::ostringstream os;
                os << "pair (" << u << "," << v << ") differs";
                why = os.str();
                return false;
            }
        }
    return true;
}

bool check_trial(const CheckConfig& cfg, uint64_t seed, std::string& why,
                 std::string& instance_text) {
    if (cfg.alg == "solve-hyperclique" || cfg.alg == "solve-4hyperclique-verlca") {
        std::vector<int> parts = cfg.parts.empty() ? std::vector<int>{4, 4, 4, 16} : cfg.parts;
        const Hypergraph3 h = random_hypergraph3(make_partition(parts), cfg.p, seed);
        instance_text = hypergraph_to_text(h);
        bool got, want;
        if (cfg.alg == "solve-hyperclique") {
            got = solve_hyperclique_via_eqlca(h, cfg.k);
            want = brute_hyperclique(h, hyperclique_size_for_target(cfg.k));
        } else {
            got = solve_4hyperclique_via_verlca(h);
            want = brute_hyperclique(h, 4);
        }
        why = got != want ? (got ? "solver says yes, oracle no" : "solver says no, oracle yes") : "";
        return got == want;
    }
    if (cfg.alg == "solve-4clique") {
        std::vector<int> parts = cfg.parts.empty() ? std::vector<int>{6, 6, 6, 6} : cfg.parts;
        if (parts.size() != 4) throw InvalidParams("solve-4clique needs 4 part sizes");
        const FourPartiteGraph g =
            random_fourpartite({parts[0], parts[1], parts[2], parts[3]}, cfg.p, seed);
        instance_text = fourpartite_to_text(g);
        const bool got = solve_4clique_via_countlca(g);
        const bool want = brute_4clique(g);
        why = got != want ? "decision mismatch" : "";
        return got == want;
    }
    if (cfg.alg == "max-witness" || cfg.alg == "max-witness-via-verlca") {
        Prng rng(seed);
        const int n = cfg.n;
        BoolMatrix a(n, n), b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (rng.next_unit() < cfg.p) a.set(i, j, true);
                if (rng.next_unit() < cfg.p) b.set(i, j, true);
            }
        instance_text = bool_matrix_to_text(a) + bool_matrix_to_text(b);
        WitnessMatrix got(0), want(n);
        if (cfg.alg == "max-witness") {
            got = max_witness_direct(a, b, cfg.block_size > 0 ? cfg.block_size
                                                              : default_block_size(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (a.get(i, k) && b.get(k, j)) want.set(i, j, k);
        } else {
            got = max_witness_via_verlca(a, b, [](const Dag& g, const CandidateMatrix& cand) {
                return verify_candidates(g, cand).ok;
            });
            want = max_witness_direct(a, b);
        }
        why = got == want ? "" : "witness matrices differ";
        return got == want;
    }

    const Dag g = random_dag(cfg.n, cfg.p, seed);
    instance_text = dag_to_text(g);
    if (cfg.alg == "exact1" || cfg.alg == "exact2") {
        const int target = cfg.alg == "exact1" ? 1 : 2;
        const ExactReport got =
            target == 1 ? exact1_lca(g, seed) : exact2_lca(g, seed);
        const LcaReport want = k_lcas_bruteforce(g, target + 1);
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v) {
                const auto& lcas = want.lists[u][v];
                const bool expect = static_cast<int>(lcas.size()) == target;
                if (got.found(u, v) != expect) {
                    why = "classification mismatch at (" + std::to_string(u) + "," +
                          std::to_string(v) + ")";
                    return false;
                }
                if (!expect) continue;
                std::vector<int> expected = lcas, actual = {got.lca1(u, v)};
                if (target == 2) actual.push_back(got.lca2(u, v));
                std::sort(expected.begin(), expected.end());
                std::sort(actual.begin(), actual.end());
                if (expected != actual) {
                    why = "LCA set mismatch at (" + std::to_string(u) + "," + std::to_string(v) +
                          ")";
                    return false;
                }
            }
        return true;
    }
    if (cfg.alg == "latest-lca")
        return lists_prefix_match(latest_lca(g), k_lcas_bruteforce(g, 1), 1, why);
    if (cfg.alg == "ap2") {
        const int block = cfg.block_size > 0 ? cfg.block_size : default_block_size(g.n());
        return lists_prefix_match(ap2_lca(g, block), k_lcas_bruteforce(g, 2), 2, why);
    }
    if (cfg.alg == "ap3") {
        const int block = cfg.block_size > 0 ? cfg.block_size : default_block_size(g.n());
        return lists_prefix_match(ap3_lca(g, block), k_lcas_bruteforce(g, 3), 3, why);
    }
    if (cfg.alg == "list-k") {
        const Detector detector = [seed](const Dag& sub, int level) {
            return atleast_k(sub, level, seed);
        };
        const int block = cfg.block_size > 0 ? cfg.block_size : default_block_size(g.n());
        return lists_prefix_match(list_k_lcas(g, cfg.k, detector, block),
                                  k_lcas_bruteforce(g, cfg.k), cfg.k, why);
    }
    if (cfg.alg == "count-lca") {
        const LcaReport got = count_lcas(g);
        const LcaReport want = k_lcas_bruteforce(g, std::max(g.n(), 1));
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                if (got.counts.at(u, v) != want.lists[u][v].size()) {
                    why = "count differs from list length";
                    return false;
                }
        return true;
    }
    if (cfg.alg == "atleast-k" || cfg.alg == "atmost-k" || cfg.alg == "exact-k") {
        RunConfig rc;
        rc.alg = cfg.alg;
        rc.k = cfg.k;
        rc.seed = seed;
        const BoolMatrix got = decision_from(g, rc);
        const LcaReport counts = count_lcas(g);
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v) {
                const uint64_t c = counts.counts.at(u, v);
                const uint64_t k = static_cast<uint64_t>(cfg.k);
                const bool expect = cfg.alg == "atleast-k"   ? c >= k
                                    : cfg.alg == "atmost-k" ? c <= k
                                                            : c == k;
                if (got.get(u, v) != expect) {
                    why = "threshold mismatch";
                    return false;
                }
            }
        return true;
    }
    if (cfg.alg == "closure") {
        const BoolMatrix fast = transitive_closure(g, ClosureBackend::Squaring);
        const BoolMatrix slow = transitive_closure(g, ClosureBackend::TopoDp);
        why = fast == slow ? "" : "backends disagree";
        return fast == slow;
    }
    throw InvalidParams("no check pairing for algorithm " + cfg.alg);
}

int cmd_check(const CheckConfig& cfg) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const uint64_t seed = cfg.seed + static_cast<uint64_t>(trial);
        std::string why, instance_text;
        if (!check_trial(cfg, seed, why, instance_text)) {
            const std::string path = cfg.dump + "_" + cfg.alg + "_" + std::to_string(trial) + ".txt";
            write_file(path, instance_text);
            std::cout << "FAIL " << cfg.alg << " vs " << cfg.oracle << " at trial " << trial
                      << " (seed " << seed << "): " << why << "\n"
                      << "instance dumped to " << path << "\n";
            return 1;
        }
    }
    std::cout << "PASS " << cfg.alg << " vs " << cfg.oracle << ": " << cfg.trials << " trials\n";
    return 0;
}

// ---- bench ----

int cmd_bench(const std::string& alg, const std::vector<int>& sizes, int repeats, double p,
              uint64_t seed, const std::string& out_path) {
    std::ostringstream csv;
    csv << "alg,n,repeats,median_ms\n";
    for (int n : sizes) {
        std::vector<double> samples;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            if (alg == "max-witness") {
                Prng rng(seed + static_cast<uint64_t>(r));
                BoolMatrix a(n, n), b(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (rng.next_unit() < 0.5) a.set(i, j, true);
                        if (rng.next_unit() < 0.5) b.set(i, j, true);
                    }
                max_witness_direct(a, b);
            } else {
                const Dag g = random_dag(n, p, seed + static_cast<uint64_t>(r));
                if (alg == "closure")
                    transitive_closure(g);
                else if (alg == "ap2")
                    ap2_lca(g);
                else if (alg == "ap3")
                    ap3_lca(g);
                else if (alg == "exact1")
                    exact1_lca(g, seed);
                else if (alg == "exact2")
                    exact2_lca(g, seed);
                else if (alg == "latest-lca")
                    latest_lca(g);
                else if (alg == "count-lca")
                    count_lcas(g);
                else if (alg == "all-lca")
                    k_lcas_bruteforce(g, std::max(n, 1));
                else
                    throw InvalidParams("no bench harness for algorithm " + alg);
            }
            const auto t1 = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(samples.begin(), samples.end());
        csv << alg << ',' << n << ',' << repeats << ',' << samples[samples.size() / 2] << '\n';
    }
    emit(out_path, csv.str());
    return 0;
}

// ---- gen ----

int cmd_gen(const std::string& kind, int n, double p, uint64_t seed,
            const std::vector<int>& layers, const std::string& rule,
            const std::vector<int>& parts, const std::string& format,
            const std::string& out_path) {
    if (kind == "random-dag") {
        const Dag g = random_dag(n, p, seed);
        emit(out_path, format == "json" ? dag_to_json(g).dump(2) + "\n" : dag_to_text(g));
        std::cerr << "random-dag n=" << g.n() << " m=" << g.m() << " seed=" << seed << "\n";
        return 0;
    }
    if (kind == "layered") {
        std::function<bool(int, int, int, int)> edge_rule;
        if (rule == "all")
            edge_rule = [](int, int, int, int) { return true; };
        else if (rule == "match")
            edge_rule = [](int, int a, int, int b) { return a == b; };
        else if (rule == "adjacent-all")
            edge_rule = [](int li, int, int lj, int) { return lj == li + 1; };
        else
            throw InvalidParams("--rule must be all, match or adjacent-all");
        const Dag g = layered_dag(layers, edge_rule);
        emit(out_path, format == "json" ? dag_to_json(g).dump(2) + "\n" : dag_to_text(g));
        std::cerr << "layered n=" << g.n() << " m=" << g.m() << "\n";
        return 0;
    }
    if (kind == "hypergraph") {
        const Hypergraph3 h = random_hypergraph3(make_partition(parts), p, seed);
        emit(out_path, hypergraph_to_text(h));
        std::cerr << "hypergraph n=" << h.n() << " m=" << h.edges().size() << " seed=" << seed
                  << "\n";
        return 0;
    }
    if (kind == "fourpartite") {
        if (parts.size() != 4) throw InvalidParams("fourpartite needs --parts with 4 sizes");
        const FourPartiteGraph g =
            random_fourpartite({parts[0], parts[1], parts[2], parts[3]}, p, seed);
        emit(out_path, fourpartite_to_text(g));
        std::cerr << "fourpartite n=" << g.n() << " m=" << g.edges().size() << " seed=" << seed
                  << "\n";
        return 0;
    }
    std::cerr << "unknown instance kind: " << kind << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCA algorithm toolkit for DAGs"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --threads after the subcommand name too

    int threads = 0;
    app.add_option("--threads", threads, "cap module-internal parallelism");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_kind, gen_rule = "all", gen_out, gen_format = "text", gen_layers, gen_parts;
    int gen_n = 16;
    double gen_p = 0.5;
    uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "random-dag|layered|hypergraph|fourpartite")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--layers", gen_layers, "layer sizes, comma separated");
    gen->add_option("--rule", gen_rule, "layered edge rule: all|match|adjacent-all");
    gen->add_option("--parts", gen_parts, "partition sizes, comma separated");
    gen->add_option("--format", gen_format, "text|json (DAG kinds only)");
    gen->add_option("--out", gen_out, "output path (stdout otherwise)");

    // run
    auto* run = app.add_subcommand("run", "run an algorithm on an instance");
    RunConfig rc;
    run->add_option("--alg", rc.alg, "algorithm name")->required();
    run->add_option("--in", rc.in_path, "input instance")->required();
    run->add_option("--in2", rc.in2_path, "second input (matrix/candidates)");
    run->add_option("--k", rc.k, "count parameter");
    run->add_option("--L", rc.block_size, "block size (default: ceil(sqrt(n)))");
    run->add_option("--seed", rc.seed, "randomized-algorithm seed");
    run->add_option("--out", rc.out_path, "output path (stdout otherwise)");
    run->add_option("--format", rc.format, "json|csv");
    run->add_option("--dump-gadget", rc.dump_gadget, "export the reduction gadget (DAG json + sidecar queries)");

    // check
    auto* check = app.add_subcommand("check", "cross-check an algorithm against an oracle");
    CheckConfig cc;
    std::string check_parts;
    check->add_option("--alg", cc.alg, "algorithm name")->required();
    check->add_option("--oracle", cc.oracle, "oracle name")->required();
    check->add_option("--n", cc.n, "instance size");
    check->add_option("--p", cc.p, "edge probability");
    check->add_option("--trials", cc.trials, "number of seeded instances");
    check->add_option("--seed", cc.seed, "base seed");
    check->add_option("--k", cc.k, "count parameter");
    check->add_option("--L", cc.block_size, "block size");
    check->add_option("--parts", check_parts, "partition sizes for hypergraph/fourpartite");
    check->add_option("--dump", cc.dump, "counterexample path prefix");

    // bench
    auto* bench = app.add_subcommand("bench", "time an algorithm over instance sizes");
    std::string bench_alg, bench_sizes, bench_out;
    int bench_repeats = 3;
    double bench_p = 0.1;
    uint64_t bench_seed = 0;
    bench->add_option("--alg", bench_alg, "algorithm name")->required();
    bench->add_option("--sizes", bench_sizes, "comma separated sizes")->required();
    bench->add_option("--repeats", bench_repeats, "samples per size");
    bench->add_option("--p", bench_p, "edge probability");
    bench->add_option("--seed", bench_seed, "base seed");
    bench->add_option("--out", bench_out, "output path (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (threads > 0) daglca::set_thread_cap(threads);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_p, gen_seed, parse_int_list(gen_layers), gen_rule,
                           parse_int_list(gen_parts), gen_format, gen_out);
        if (run->parsed()) return cmd_run(rc);
        if (check->parsed()) {
            cc.parts = parse_int_list(check_parts);
            return cmd_check(cc);
        }
        if (bench->parsed())
            return cmd_bench(bench_alg, parse_int_list(bench_sizes), bench_repeats, bench_p,
                             bench_seed, bench_out);
    } catch (const daglca::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const daglca::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const daglca::InvalidParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const daglca::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
