#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "turan/constructions.hpp"
#include "turan/containers.hpp"
#include "turan/cycles.hpp"
#include "turan/harness.hpp"
#include "turan/hypergraph.hpp"
#include "turan/random_model.hpp"
#include "turan/supersat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPartial = 3;

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + out);
    os << text;
}

turan::Hypergraph load_input(const std::string& in, int n, int r, double p,
                             std::uint64_t seed) {
    if (!in.empty()) return turan::load_edge_list(in);
    if (n <= 0) throw std::invalid_argument("need --in or --n/--r/--p");
    return turan::sample_gnp({n, r, p, seed});
}

std::string ex_result_text(const turan::ExactResult& res, const std::string& format) {
    std::ostringstream os;
    if (format == "jsonl") {
        os << "{\"value\":" << res.value << ",\"feasible\":" << (res.feasible ? "true" : "false")
           << ",\"cycles\":" << res.cycles_found << ",\"witness\":[";
        for (std::size_t i = 0; i < res.witness.size(); ++i)
            os << (i ? "," : "") << res.witness[i];
        os << "]}\n";
    } else {
        os << "value,feasible,cycles\n"
           << res.value << ',' << (res.feasible ? 1 : 0) << ',' << res.cycles_found << '\n';
        os << "# witness:";
        for (turan::EdgeId id : res.witness) os << ' ' << id;
        os << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turan-number experiments for linear even cycles in random hypergraphs"};
    app.require_subcommand(1);

    // shared option storage
    std::string in, out, format = "csv", config_path, construct_kind;
    int n = 0, r = 3, ell = 2, t = 4, vertex = 0;
    double p = 0.0, delta = 0.01;
    std::uint64_t seed = 1;
    long long cap = 2000000, node_budget = 20000000, timeout_ms = 0;
    bool resume = false;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--seed", seed, "RNG seed");
        sub->add_option("--out", out, "output file (stdout when omitted)");
        sub->add_option("--format", format, "csv or jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}));
        sub->add_option("--cap", cap, "enumeration cap");
        sub->add_option("--timeout-ms", timeout_ms, "advisory timeout per point");
        if (with_input) {
            sub->add_option("--in", in, "input edge-list file");
            sub->add_option("--n", n, "vertices (sample when no --in)");
            sub->add_option("--r", r, "uniformity");
            sub->add_option("--p", p, "edge probability");
        }
    };

    auto* sample = app.add_subcommand("sample", "sample G(n,r,p) and write its edge list");
    add_common(sample, false);
    sample->add_option("--n", n, "vertices")->required();
    sample->add_option("--r", r, "uniformity");
    sample->add_option("--p", p, "edge probability")->required();

    auto* ex_exact = app.add_subcommand("ex-exact", "exact ex(G, C_{2l}) with witness");
    add_common(ex_exact, true);
    ex_exact->add_option("--ell", ell, "half cycle length");
    ex_exact->add_option("--node-budget", node_budget, "branch-and-bound node budget");

    auto* ex_greedy = app.add_subcommand("ex-greedy", "greedy lower bound with witness");
    add_common(ex_greedy, true);
    ex_greedy->add_option("--ell", ell, "half cycle length");

    auto* supersat = app.add_subcommand("supersat", "run the supersaturation pipeline");
    add_common(supersat, true);
    supersat->add_option("--ell", ell, "half cycle length");
    supersat->add_option("--delta", delta, "codegree smallness parameter");

    auto* containers = app.add_subcommand("containers", "one container-building step");
    add_common(containers, true);
    containers->add_option("--ell", ell, "half cycle length");
    containers->add_option("--delta", delta, "codegree smallness parameter");

    auto* construct = app.add_subcommand("construct", "explicit lower-bound constructions");
    add_common(construct, false);
    construct->add_option("kind", construct_kind, "steiner|blowup|star|girth5")
        ->required()
        ->check(CLI::IsMember({"steiner", "blowup", "star", "girth5"}));
    construct->add_option("--n", n, "vertices")->required();
    construct->add_option("--t", t, "Steiner block size");
    construct->add_option("--p", p, "edge probability");
    construct->add_option("--r", r, "uniformity (star)");
    construct->add_option("--in", in, "host edge list (star)");
    construct->add_option("--v", vertex, "star center");

    auto* grid = app.add_subcommand("grid", "run an experiment grid from a config file");
    add_common(grid, false);
    grid->add_option("--config", config_path, "flat key=value config file")->required();
    grid->add_flag("--resume", resume, "reuse rows already present in --out");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (sample->parsed()) {
            turan::Hypergraph g = turan::sample_gnp({n, r, p, seed});
            std::ostringstream os;
            turan::write_edge_list(os, g);
            emit(out, os.str());
            return kExitOk;
        }

        if (ex_exact->parsed() || ex_greedy->parsed()) {
            turan::Hypergraph g = load_input(in, n, r, p, seed);
            turan::ExactResult res = ex_exact->parsed()
                                         ? turan::exact_ex(g, ell, cap, node_budget)
                                         : turan::greedy_ex(g, ell, cap);
            emit(out, ex_result_text(res, format));
            return res.feasible ? kExitOk : kExitPartial;
        }

        if (supersat->parsed()) {
            turan::Hypergraph g = load_input(in, n, r, p, seed);
            turan::SupersatConfig cfg;
            cfg.r = g.r();
            cfg.ell = ell;
            cfg.delta = delta;
            cfg.shadow_cycle_cap = cap;
            cfg.extension_cap = cap;
            turan::PipelineResult pr = turan::supersaturation_pipeline(g, cfg, seed);
            std::ostringstream os;
            pr.report.write(os);
            emit(out, os.str());
            return kExitOk;
        }

        if (containers->parsed()) {
            turan::Hypergraph g = load_input(in, n, r, p, seed);
            turan::SupersatConfig cfg;
            cfg.r = g.r();
            cfg.ell = ell;
            cfg.delta = delta;
            cfg.shadow_cycle_cap = cap;
            cfg.extension_cap = cap;
            turan::ContainerSet cs = turan::one_step(g, cfg, seed);
            std::ostringstream os;
            turan::write_containers(os, cs, in.empty() ? "sample" : in, 0);
            emit(out, os.str());
            return cs.no_progress ? kExitPartial : kExitOk;
        }

        if (construct->parsed()) {
            std::ostringstream os;
            if (construct_kind == "steiner") {
                turan::write_steiner(os, turan::steiner_lines(n, t));
            } else if (construct_kind == "blowup") {
                turan::write_edge_list(os, turan::steiner_blowup(n, t, p, seed));
            } else if (construct_kind == "girth5") {
                turan::write_edge_list(os, turan::high_girth_blowup(n, p, seed));
            } else {  // star
                turan::Hypergraph g = load_input(in, n, r, p, seed);
                turan::write_edge_list(os, turan::star_subgraph(g, vertex));
            }
            emit(out, os.str());
            return kExitOk;
        }

        if (grid->parsed()) {
            std::ifstream cf(config_path);
            if (!cf) throw std::invalid_argument("cannot open config file: " + config_path);
            turan::ExperimentConfig cfg = turan::parse_experiment_config(cf);
            if (!out.empty()) cfg.out = out;
            if (timeout_ms > 0) cfg.timeout_ms = timeout_ms;
            std::string existing;
            if (resume && !cfg.out.empty()) {
                std::ifstream prev(cfg.out, std::ios::binary);
                if (prev) {
                    std::ostringstream buf;
                    buf << prev.rdbuf();
                    existing = buf.str();
                }
            }
            turan::GridResult res = turan::run_grid(cfg, existing);
            if (format == "jsonl") {
                std::string text;
                for (const auto& rec : res.records) text += turan::record_to_jsonl(rec) + "\n";
                emit(cfg.out, text);
            } else {
                emit(cfg.out, res.csv);
            }
            return (res.caps_hit || res.timed_out) ? kExitPartial : kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
