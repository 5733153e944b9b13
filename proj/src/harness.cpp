#include "turan/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/containers.hpp"
#include "turan/cycles.hpp"
#include "turan/random_model.hpp"
#include "turan/supersat.hpp"

namespace turan {

TheoryCurves theory_curves(int n, int r, int ell, double p) {
    if (n < 2 || r < 2 || ell < 2 || !(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("theory_curves: inputs out of range");
    TheoryCurves c;
    double nn = n;

    // branch window n^{-(r-2)} <= p <= n^{-(r-2)+1/(2l-2)}
    double lo12 = std::pow(nn, -(r - 2));
    double hi12 = std::pow(nn, -(r - 2) + 1.0 / (2.0 * ell - 2));
    if (p >= lo12 && p <= hi12)
        c.thm12_upper = std::pow(p, 1.0 / (2.0 * ell - 1)) *
                        std::pow(nn, 1.0 + (r - 1.0) / (2.0 * ell - 1));
    else
        c.thm12_upper = p * std::pow(nn, r - 1);

    double p_low = std::pow(nn, -(r - 1) + 1.0 / (2.0 * ell - 1));
    if (p < p_low)
        c.cor13_value = p * std::pow(nn, r);
    else if (p <= lo12)
        c.cor13_value = std::pow(nn, 1.0 + 1.0 / (2.0 * ell - 1));
    else if (p >= hi12)
        c.cor13_value = p * std::pow(nn, r - 1);
    else  // the open region: the larger of the two lower bounds
        c.cor13_value = std::max(std::pow(nn, 1.0 + 1.0 / (2.0 * ell - 1)),
                                 p * std::pow(nn, r - 1));

    if (r == 3 && ell == 2) {
        if (p < std::pow(nn, -5.0 / 3.0))
            c.conj71_value = p * static_cast<double>(binomial(n, 3));
        else if (p <= std::pow(nn, -2.0 / 3.0))
            c.conj71_value = std::pow(nn, 4.0 / 3.0);
        else
            c.conj71_value = p * nn * nn;
    } else {
        c.conj71_value = std::nan("");
    }
    return c;
}

void ExperimentConfig::validate() const {
    if (n < 2 || r < 2 || ell < 2) throw std::invalid_argument("ExperimentConfig: bad n/r/ell");
    if (seeds < 1) throw std::invalid_argument("ExperimentConfig: seeds must be >= 1");
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("ExperimentConfig: p outside [0,1]");
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        if (p_grid[i] < p_grid[i - 1])
            throw std::invalid_argument("ExperimentConfig: p grid must be nondecreasing");
}

ExperimentConfig parse_experiment_config(std::istream& is) {
    ExperimentConfig cfg;
    std::vector<double> exponents;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        auto as_list = [&val] {
            std::vector<double> out;
            std::istringstream vs(val);
            std::string tok;
            while (std::getline(vs, tok, ',')) out.push_back(std::stod(tok));
            return out;
        };
        auto as_bool = [&val] { return val == "1" || val == "true"; };
        if (key == "n") cfg.n = std::stoi(val);
        else if (key == "r") cfg.r = std::stoi(val);
        else if (key == "ell") cfg.ell = std::stoi(val);
        else if (key == "p_list") cfg.p_grid = as_list();
        else if (key == "p_exponents") exponents = as_list();
        else if (key == "seeds") cfg.seeds = std::stoi(val);
        else if (key == "seed0") cfg.seed0 = std::stoull(val);
        else if (key == "exact") cfg.use_exact = as_bool();
        else if (key == "greedy") cfg.use_greedy = as_bool();
        else if (key == "star") cfg.use_star = as_bool();
        else if (key == "steiner") cfg.use_steiner = as_bool();
        else if (key == "high_girth") cfg.use_high_girth = as_bool();
        else if (key == "containers") cfg.use_containers = as_bool();
        else if (key == "steiner_t") cfg.steiner_t = std::stoi(val);
        else if (key == "cycle_cap") cfg.cycle_cap = std::stoll(val);
        else if (key == "node_budget") cfg.node_budget = std::stoll(val);
        else if (key == "timeout_ms") cfg.timeout_ms = std::stoll(val);
        else if (key == "container_decrement") cfg.container_decrement = std::stod(val);
        else if (key == "k_target") cfg.k_target = std::stod(val);
        else if (key == "out") cfg.out = val;
        else throw std::invalid_argument("parse_experiment_config: unknown key '" + key + "'");
    }
    if (!exponents.empty()) {
        cfg.p_grid.clear();
        for (double e : exponents) cfg.p_grid.push_back(std::min(1.0, std::pow(cfg.n, e)));
        std::sort(cfg.p_grid.begin(), cfg.p_grid.end());
    }
    cfg.validate();
    return cfg;
}

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool witness_cycle_free(const Hypergraph& g, const std::vector<EdgeId>& witness, int k) {
    return enumerate_linear_cycles(g.subgraph(witness), k, 1).members.empty();
}

}  // namespace

ExperimentRecord run_point(const ExperimentConfig& cfg, double p, std::uint64_t seed,
                           long long carry_lower) {
    cfg.validate();
    ExperimentRecord rec;
    rec.n = cfg.n;
    rec.r = cfg.r;
    rec.ell = cfg.ell;
    rec.p = p;
    rec.seed = seed;
    rec.curves = theory_curves(cfg.n, cfg.r, cfg.ell, p);
    int k = 2 * cfg.ell;
    double t0 = now_ms();

    Hypergraph g = sample_gnp({cfg.n, cfg.r, p, seed});
    rec.e_G = g.num_edges();

    SupersatConfig scfg;
    scfg.r = cfg.r;
    scfg.ell = cfg.ell;
    double K = g.num_edges() / std::pow(cfg.n, cfg.r - 1);
    rec.hypotheses_unmet =
        K < scfg.K0() * std::pow(std::log(static_cast<double>(cfg.n)), 2.0 * cfg.r * (cfg.r - 1));

    rec.best_lower = carry_lower;
    auto take_lower = [&rec](long long v) { rec.best_lower = std::max(rec.best_lower, v); };

    if (cfg.use_exact && g.num_edges() > 0) {
        double t = now_ms();
        ExactResult ex = exact_ex(g, cfg.ell, cfg.cycle_cap, cfg.node_budget);
        rec.exact.runtime_ms = now_ms() - t;
        rec.exact.ok = ex.feasible && witness_cycle_free(g, ex.witness, k);
        rec.exact.value = ex.value;
        if (witness_cycle_free(g, ex.witness, k)) take_lower(ex.value);
        if (!ex.feasible) rec.caps_hit = true;
    } else if (cfg.use_exact) {
        rec.exact.value = 0;
        rec.exact.ok = true;
    }

    if (cfg.use_greedy && g.num_edges() > 0) {
        double t = now_ms();
        ExactResult gr = greedy_ex(g, cfg.ell, cfg.cycle_cap);
        rec.greedy.runtime_ms = now_ms() - t;
        rec.greedy.ok = witness_cycle_free(g, gr.witness, k);
        rec.greedy.value = gr.value;
        if (rec.greedy.ok) take_lower(gr.value);
    } else if (cfg.use_greedy) {
        rec.greedy.value = 0;
        rec.greedy.ok = true;
    }

    if (cfg.use_star) {
        double t = now_ms();
        int best_v = 0;
        for (VertexId v = 1; v < g.n(); ++v)
            if (g.incident(v).size() > g.incident(best_v).size()) best_v = v;
        Hypergraph star = star_subgraph(g, best_v);
        rec.star.runtime_ms = now_ms() - t;
        rec.star.ok = is_cycle_free(star, k);
        rec.star.value = star.num_edges();
        if (rec.star.ok) take_lower(rec.star.value);
    }

    if (cfg.use_steiner && cfg.r == 3 && cfg.ell == 2) {
        double t = now_ms();
        try {
            Hypergraph sb = steiner_blowup(cfg.n, cfg.steiner_t, p, seed);
            bool inside = true;
            for (const Edge& e : sb.edges())
                if (!g.edge_id(e)) { inside = false; break; }
            rec.steiner.ok = inside && is_cycle_free(sb, k);
            rec.steiner.value = sb.num_edges();
            if (rec.steiner.ok) take_lower(rec.steiner.value);
            if (!inside) rec.steiner.note = "witness not inside the sample";
        } catch (const std::exception& ex) {
            rec.steiner.note = ex.what();
        }
        rec.steiner.runtime_ms = now_ms() - t;
    }

    if (cfg.use_high_girth && cfg.r == 3 && cfg.ell == 2) {
        double t = now_ms();
        try {
            Hypergraph hb = high_girth_blowup(cfg.n, p, seed);
            bool inside = true;
            for (const Edge& e : hb.edges())
                if (!g.edge_id(e)) { inside = false; break; }
            rec.high_girth.ok = inside && is_cycle_free(hb, k);
            rec.high_girth.value = hb.num_edges();
            if (rec.high_girth.ok) take_lower(rec.high_girth.value);
            if (!inside) rec.high_girth.note = "witness not inside the sample";
        } catch (const std::exception& ex) {
            rec.high_girth.note = ex.what();
        }
        rec.high_girth.runtime_ms = now_ms() - t;
    }

    if (cfg.use_containers && g.num_edges() > 0) {
        double t = now_ms();
        IterationConfig icfg;
        icfg.r = cfg.r;
        icfg.ell = cfg.ell;
        icfg.K_target = cfg.k_target;
        icfg.K0 = 0.0;
        icfg.eps = scfg.epsilon();
        icfg.decrement = cfg.container_decrement;
        icfg.max_iterations = 400;
        IterateResult it = iterate(g, icfg, scfg, seed);
        long long worst = 0;
        for (const auto& c : it.set.containers)
            worst = std::max(worst, static_cast<long long>(c.size()));
        rec.containers_upper.value = worst;
        rec.containers_upper.ok = true;
        rec.containers_upper.note = it.diagnostic;
        rec.containers_upper.runtime_ms = now_ms() - t;
    }

    if (cfg.use_exact && rec.exact.ok) {
        rec.upper = static_cast<double>(rec.exact.value);
        rec.upper_is_exact = true;
    } else if (rec.containers_upper.value >= 0) {
        rec.upper = static_cast<double>(rec.containers_upper.value);
    } else {
        rec.upper = static_cast<double>(rec.e_G);
    }

    if (cfg.timeout_ms > 0 && now_ms() - t0 > static_cast<double>(cfg.timeout_ms))
        rec.timed_out = true;
    return rec;
}

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

const char* kCsvHeader =
    "kind,n,r,ell,p,seed,e_G,exact,exact_ok,greedy,star,steiner,high_girth,"
    "containers_upper,best_lower,upper,thm12,cor13,conj71,caps_hit";

std::string render_row(const ExperimentRecord& r) {
    std::ostringstream os;
    os << "raw," << r.n << ',' << r.r << ',' << r.ell << ',' << fmt(r.p) << ',' << r.seed << ','
       << r.e_G << ',' << r.exact.value << ',' << (r.exact.ok ? 1 : 0) << ',' << r.greedy.value
       << ',' << r.star.value << ',' << r.steiner.value << ',' << r.high_girth.value << ','
       << r.containers_upper.value << ',' << r.best_lower << ',' << fmt(r.upper) << ','
       << fmt(r.curves.thm12_upper) << ',' << fmt(r.curves.cor13_value) << ','
       << fmt(r.curves.conj71_value) << ',' << (r.caps_hit ? 1 : 0);
    return os.str();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) out.push_back(tok);
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string checksum_line(const std::string& body) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(body)));
    return std::string("# checksum ") + buf;
}

}  // namespace

bool verify_grid_checksum(const std::string& csv) {
    auto pos = csv.rfind("# checksum ");
    if (pos == std::string::npos) return false;
    std::string body = csv.substr(0, pos);
    std::string tail = csv.substr(pos);
    while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r')) tail.pop_back();
    return tail == checksum_line(body);
}

GridResult run_grid(const ExperimentConfig& cfg, const std::string& existing_csv) {
    cfg.validate();
    GridResult res;

    // index reusable raw rows by "p,seed" as rendered
    std::map<std::string, std::string> reusable;
    if (!existing_csv.empty() && verify_grid_checksum(existing_csv)) {
        std::istringstream is(existing_csv);
        std::string line;
        while (std::getline(is, line)) {
            auto cols = split_csv(line);
            if (cols.size() >= 6 && cols[0] == "raw") reusable[cols[4] + "," + cols[5]] = line;
        }
    }

    std::string body = std::string(kCsvHeader) + "\n";
    std::vector<long long> carry(static_cast<std::size_t>(cfg.seeds), 0);

    for (double p : cfg.p_grid) {
        std::vector<std::string> rows;
        for (int s = 0; s < cfg.seeds; ++s) {
            std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(s);
            std::string key = fmt(p) + "," + std::to_string(seed);
            auto hit = reusable.find(key);
            std::string row;
            if (hit != reusable.end()) {
                row = hit->second;
                ++res.reused_rows;
            } else {
                ExperimentRecord rec = run_point(cfg, p, seed, carry[static_cast<std::size_t>(s)]);
                res.caps_hit = res.caps_hit || rec.caps_hit;
                res.timed_out = res.timed_out || rec.timed_out;
                res.records.push_back(rec);
                row = render_row(rec);
            }
            carry[static_cast<std::size_t>(s)] = std::stoll(split_csv(row)[14]);
            rows.push_back(std::move(row));
        }

        // aggregate row: median of every numeric column from e_G on
        std::ostringstream agg;
        agg << "agg," << cfg.n << ',' << cfg.r << ',' << cfg.ell << ',' << fmt(p) << ",-1";
        for (std::size_t col = 6; col <= 19; ++col) {
            std::vector<double> vals;
            for (const auto& row : rows) vals.push_back(std::stod(split_csv(row)[col]));
            std::sort(vals.begin(), vals.end());
            std::size_t m = vals.size();
            double med = (m % 2) ? vals[m / 2] : (vals[m / 2 - 1] + vals[m / 2]) / 2.0;
            agg << ',' << fmt(med);
        }
        for (const auto& row : rows) body += row + "\n";
        body += agg.str() + "\n";
    }

    res.csv = body + checksum_line(body) + "\n";
    return res;
}

std::string record_to_jsonl(const ExperimentRecord& r) {
    std::ostringstream os;
    os << "{\"kind\":\"raw\",\"n\":" << r.n << ",\"r\":" << r.r << ",\"ell\":" << r.ell
       << ",\"p\":" << fmt(r.p) << ",\"seed\":" << r.seed << ",\"e_G\":" << r.e_G
       << ",\"exact\":" << r.exact.value << ",\"exact_ok\":" << (r.exact.ok ? "true" : "false")
       << ",\"greedy\":" << r.greedy.value << ",\"star\":" << r.star.value
       << ",\"steiner\":" << r.steiner.value << ",\"high_girth\":" << r.high_girth.value
       << ",\"containers_upper\":" << r.containers_upper.value
       << ",\"best_lower\":" << r.best_lower << ",\"upper\":" << fmt(r.upper)
       << ",\"thm12\":" << fmt(r.curves.thm12_upper) << ",\"cor13\":" << fmt(r.curves.cor13_value)
       << ",\"conj71\":";
    if (std::isnan(r.curves.conj71_value))
        os << "null";
    else
        os << fmt(r.curves.conj71_value);
    os << ",\"caps_hit\":" << (r.caps_hit ? "true" : "false") << "}";
    return os.str();
}

}  // namespace turan
