// Experiment runner: generate or load a network, run the dissemination
// protocols, evaluate the closed-form bound ledger, and drive the exhaustive
// security checks. Output is JSON/CSV only; identical flags and seed produce
// byte-identical files.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sneak/baseline.hpp"
#include "sneak/bounds.hpp"
#include "sneak/generators.hpp"
#include "sneak/oracle.hpp"
#include "sneak/protocol.hpp"
#include "sneak/report_json.hpp"

namespace {

using namespace sneak;

constexpr int kExitParamError = 2;
constexpr int kExitDeliveryFailure = 3;
constexpr int kExitOracleFail = 4;

struct GraphFlags {
    std::string file;
    std::string gen;
    int n = 0;
    int gen_d = 0;       // structural degree for random/window families
    int a = 0;           // window slack
    int m = 0;           // family connectivity (defaults to d)
    std::string layers;  // comma-separated layer sizes
    int backbone = 0;
    int outer = -1;
    double radius = 0;
    std::string positions;  // comma-separated 1-D coordinates incl. dealer
    bool undirected = false;
    std::string save;  // write the materialized graph here
};

struct ParamFlags {
    int k = 2;
    int d = 0;  // 0: default to k
    int ell = -1;
    int t = 0;
    std::uint64_t q = 0;  // 0: smallest prime > max_participants
    int max_participants = 0;
    bool degree_cap = false;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

Network make_network(const GraphFlags& gf, const ParamFlags& pf, std::uint64_t seed) {
    if (!gf.file.empty()) return Network::load(gf.file);
    if (gf.gen.empty()) throw std::invalid_argument("need --graph FILE or --gen FAMILY");
    int d = gf.gen_d ? gf.gen_d : (pf.d ? pf.d : pf.k);
    int m = gf.m ? gf.m : d;
    if (gf.gen == "toy" || gf.gen == "fig9" || gf.gen == "cycle5" || gf.gen == "cycle6")
        return fixture(gf.gen);
    if (gf.gen == "star") {
        if (gf.n < 1) throw std::invalid_argument("--gen star needs --n");
        return gen_star(gf.n);
    }
    if (gf.gen == "layered") {
        if (gf.layers.empty()) throw std::invalid_argument("--gen layered needs --layers a,b,c");
        return gen_layered(parse_int_list(gf.layers), m).net;
    }
    if (gf.gen == "backbone") {
        if (gf.n < 1 && gf.outer < 0)
            throw std::invalid_argument("--gen backbone needs --n or --outer");
        int b = gf.backbone ? gf.backbone : std::max(m, 3);
        int outer = gf.outer >= 0 ? gf.outer : gf.n - b;
        return gen_backbone(b, outer, m, seed).net;
    }
    if (gf.gen == "geometric") {
        if (gf.positions.empty())
            throw std::invalid_argument("--gen geometric needs --positions x0,x1,...");
        if (gf.radius <= 0) throw std::invalid_argument("--gen geometric needs --radius");
        return gen_geometric_1d(parse_double_list(gf.positions), gf.radius).net;
    }
    if (gf.gen == "random") {
        if (gf.n < 1) throw std::invalid_argument("--gen random needs --n");
        return gen_random_propagating(gf.n, d, seed, !gf.undirected).net;
    }
    if (gf.gen == "window") {
        if (gf.n < 1) throw std::invalid_argument("--gen window needs --n");
        return gen_window(gf.n, d, gf.a ? gf.a : d, seed).net;
    }
    throw std::invalid_argument("unknown generator family '" + gf.gen + "'");
}

SharingParams make_params(const Network& net, const ParamFlags& pf) {
    SharingParams p;
    p.n = net.n();
    p.k = pf.k;
    p.d = pf.d ? pf.d : pf.k;
    p.ell = pf.ell;
    p.t_adv = pf.t;
    p.degree_cap = pf.degree_cap;
    int maxp = pf.max_participants ? pf.max_participants : net.n();
    if (maxp < net.n()) throw std::invalid_argument("--max-participants below the network size");
    p.spec = FieldSpec(pf.q ? pf.q : FieldSpec::next_prime_above(static_cast<std::uint64_t>(maxp)));
    p.validate();
    return p;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SNEAK_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << content;
}

void add_graph_flags(CLI::App* cmd, GraphFlags& gf) {
    cmd->add_option("--graph", gf.file, "graph file (format: 'n k_hint directed|undirected' + edges)");
    cmd->add_option("--gen", gf.gen,
                    "family: toy|fig9|cycle5|cycle6|star|layered|backbone|geometric|random|window");
    cmd->add_option("--n", gf.n, "participant count for generators");
    cmd->add_option("--gen-d", gf.gen_d, "structural in-degree for random/window (defaults to --d)");
    cmd->add_option("--a", gf.a, "window slack (window family, defaults to d)");
    cmd->add_option("--m", gf.m, "family connectivity (defaults to d)");
    cmd->add_option("--layers", gf.layers, "layer sizes, e.g. 3,3,3");
    cmd->add_option("--backbone-size", gf.backbone, "backbone node count");
    cmd->add_option("--outer", gf.outer, "nodes outside the backbone");
    cmd->add_option("--radius", gf.radius, "geometric connection radius");
    cmd->add_option("--positions", gf.positions, "geometric 1-D coordinates, dealer first");
    cmd->add_flag("--undirected", gf.undirected, "emit undirected edges (random family)");
    cmd->add_option("--save-graph", gf.save, "write the materialized graph file here");
}

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    cmd->add_option("--k", pf.k, "recovery threshold");
    cmd->add_option("--d", pf.d, "propagation parameter (>= k, defaults to k)");
    cmd->add_option("--ell", pf.ell, "collusion threshold (defaults to k-1)");
    cmd->add_option("--t", pf.t, "active adversary budget");
    cmd->add_option("--q", pf.q, "prime field modulus (defaults to next prime above max participants)");
    cmd->add_option("--max-participants", pf.max_participants,
                    "provision the field for later participant addition");
    cmd->add_flag("--degree-cap", pf.degree_cap, "cap share polynomials at degree k-1");
}

int cmd_run(const GraphFlags& gf, const ParamFlags& pf, std::uint64_t seed, const std::string& algo,
            const std::string& fallback, const std::string& adversaries, const std::string& trace,
            const std::string& out) {
    Network net = make_network(gf, pf, seed);
    if (!gf.save.empty()) net.save(gf.save);
    SharingParams params = make_params(net, pf);

    FallbackStrategy strategy = FallbackStrategy::none;
    if (fallback == "naive") strategy = FallbackStrategy::naive;
    else if (fallback == "dealer") strategy = FallbackStrategy::dealer_to_bottleneck;
    else if (fallback == "local") strategy = FallbackStrategy::local_relay;
    else if (fallback != "none") throw std::invalid_argument("--fallback must be none|naive|dealer|local");

    RunOptions opts;
    opts.fallback = strategy;
    for (int v : parse_int_list(adversaries)) opts.adversaries.insert(v);

    Json j = report_envelope(net, params, seed);
    std::string transcripts;
    bool delivery_failed = false;

    auto vectors_of = [](const std::map<NodeId, Share>& shares) {
        std::map<NodeId, FieldVector> out;
        for (const auto& [node, share] : shares) out[node] = share.values;
        return out;
    };
    auto data_of = [](const std::map<NodeId, NodeData>& data) {
        std::map<NodeId, FieldVector> out;
        for (const auto& [node, nd] : data) out[node] = nd.values;
        return out;
    };
    Rng rng(seed);
    if (algo == "sneak" || algo == "both") {
        SecretVector secret = random_secret(params, rng);
        RngSource src(rng);
        RunResult res = run_sneak(net, params, secret, src, opts);
        j["sneak"] = json_of(res.report);
        j["sneak"]["shares"] = json_of_field_vectors(vectors_of(res.shares));
        j["sneak"]["node_data"] = json_of_field_vectors(data_of(res.data));
        transcripts += transcript_to_csv(res.transcript);
        if (!res.report.stalled.empty() && strategy == FallbackStrategy::none) delivery_failed = true;
    }
    if (algo == "sota" || algo == "both") {
        SecretVector secret = random_secret(params, rng);
        RngSource src(rng);
        RunResult res = run_sota(net, params, secret, src);
        j["sota"] = json_of(res.report);
        j["sota"]["shares"] = json_of_field_vectors(vectors_of(res.shares));
        if (algo == "sota") transcripts = transcript_to_csv(res.transcript);
        if (!res.report.stalled.empty()) delivery_failed = true;
    }
    if (algo != "sneak" && algo != "sota" && algo != "both")
        throw std::invalid_argument("--algo must be sneak|sota|both");

    if (!trace.empty()) write_output(trace, transcripts);
    write_output(out, j.dump(2) + "\n");
    return delivery_failed ? kExitDeliveryFailure : 0;
}

int cmd_bounds(const GraphFlags& gf, const ParamFlags& pf, std::uint64_t seed,
               const std::string& out) {
    Network net = make_network(gf, pf, seed);
    SharingParams params = make_params(net, pf);
    Json j = report_envelope(net, params, seed);
    j["bounds"] = json_of(evaluate_bounds(net, params));
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const GraphFlags& gf, const ParamFlags& pf, std::uint64_t seed, int budget,
               std::size_t max_enum, const std::string& runner_name, const std::string& out) {
    Network net = make_network(gf, pf, seed);
    SharingParams params = make_params(net, pf);
    OracleLimits limits;
    if (max_enum) limits.max_enum = max_enum;
    OracleRunner runner = OracleRunner::sneak;
    if (runner_name == "sota") runner = OracleRunner::sota;
    else if (runner_name == "naive") runner = OracleRunner::fallback_naive;
    else if (runner_name == "dealer") runner = OracleRunner::fallback_dealer;
    else if (runner_name == "local") runner = OracleRunner::fallback_local;
    else if (runner_name != "sneak")
        throw std::invalid_argument("--runner must be sneak|sota|naive|dealer|local");

    int b = budget ? budget : params.collusion();
    OracleVerdict collusion = verify_collusion_resistance(net, params, b, limits, runner);
    OracleVerdict recovery = verify_recovery(net, params, seed);

    Json j = report_envelope(net, params, seed);
    j["budget"] = b;
    j["collusion"] = json_of(collusion);
    j["recovery"] = json_of(recovery);
    write_output(out, j.dump(2) + "\n");
    return collusion.pass && recovery.pass ? 0 : kExitOracleFail;
}

int cmd_scaling(const std::string& family, const std::string& sizes, const ParamFlags& pf, int a,
                int reps, std::uint64_t seed, const std::string& out) {
    std::ostringstream csv;
    csv << "family,n,rep,sneak_units,sota_units,lower_bound,sneak_draws,sota_rand_lower_units\n";
    for (int n : parse_int_list(sizes)) {
        for (int rep = 0; rep < std::max(1, reps); ++rep) {
            std::uint64_t s = seed + static_cast<std::uint64_t>(rep);
            GraphFlags gf;
            gf.gen = family;
            gf.n = n;
            gf.a = a;
            Network net = make_network(gf, pf, s);
            SharingParams params = make_params(net, pf);
            Rng rng(s);
            SecretVector secret = random_secret(params, rng);
            RngSource src(rng);
            RunResult sneak_res = run_sneak(net, params, secret, src);
            SecretVector secret2 = random_secret(params, rng);
            RngSource src2(rng);
            RunResult sota_res = run_sota(net, params, secret2, src2);
            BoundsReport bounds = evaluate_bounds(net, params);
            csv << family << ',' << n << ',' << rep << ',' << sneak_res.report.total_units.str()
                << ',' << sota_res.report.total_units.str() << ',' << bounds.graph_lower_sum.str()
                << ',' << sneak_res.report.randomness_draws << ','
                << bounds.randomness_sota_lower.str() << '\n';
        }
    }
    write_output(out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold secret sharing over general networks: simulator and bound ledger"};
    app.require_subcommand(1);

    GraphFlags gf;
    ParamFlags pf;
    std::uint64_t seed = default_seed();
    std::string algo = "sneak", fallback = "none", adversaries, trace, out;
    int budget = 0;
    std::size_t max_enum = 0;
    std::string runner = "sneak";
    std::string family = "window", sizes = "16,32,64";
    int a_slack = 0, reps = 1;

    CLI::App* run = app.add_subcommand("run", "simulate share dissemination");
    add_graph_flags(run, gf);
    add_param_flags(run, pf);
    run->add_option("--seed", seed, "RNG seed (default: env SNEAK_SEED or 1)");
    run->add_option("--algo", algo, "sneak|sota|both");
    run->add_option("--fallback", fallback, "none|naive|dealer|local");
    run->add_option("--adversaries", adversaries, "comma-separated corrupting node ids");
    run->add_option("--trace", trace, "write the transmission transcript CSV here");
    run->add_option("--out", out, "report file (default stdout)");

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the closed-form bound ledger");
    add_graph_flags(bounds, gf);
    add_param_flags(bounds, pf);
    bounds->add_option("--seed", seed, "RNG seed");
    bounds->add_option("--out", out, "report file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive secrecy and recovery checks");
    add_graph_flags(verify, gf);
    add_param_flags(verify, pf);
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--budget", budget, "colluder budget (default ell)");
    verify->add_option("--max-enum", max_enum, "enumeration state-space cap");
    verify->add_option("--runner", runner, "sneak|sota|naive|dealer|local");
    verify->add_option("--out", out, "report file (default stdout)");

    CLI::App* scaling = app.add_subcommand("scaling", "growth curves across sizes");
    add_param_flags(scaling, pf);
    scaling->add_option("--family", family, "window|random|star|backbone");
    scaling->add_option("--sizes", sizes, "comma-separated participant counts");
    scaling->add_option("--a", a_slack, "window slack");
    scaling->add_option("--reps", reps, "seeded repetitions per size");
    scaling->add_option("--seed", seed, "RNG seed");
    scaling->add_option("--out", out, "CSV file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(gf, pf, seed, algo, fallback, adversaries, trace, out);
        if (bounds->parsed()) return cmd_bounds(gf, pf, seed, out);
        if (verify->parsed()) return cmd_verify(gf, pf, seed, budget, max_enum, runner, out);
        if (scaling->parsed()) return cmd_scaling(family, sizes, pf, a_slack, reps, seed, out);
    } catch (const sneak::EnumerationBudgetExceeded& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitParamError;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
        return kExitParamError;
    }
    return 0;
}
