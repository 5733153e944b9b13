#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "turan/containers.hpp"
#include "turan/harness.hpp"
#include "turan/hypergraph.hpp"
#include "turan/random_model.hpp"

using namespace turan;

TEST_CASE("theory_curves branch selection") {
    // dense regime: p above the branch window => p n^{r-1}
    double p_dense = 0.5;
    auto dense = theory_curves(100, 3, 2, p_dense);
    CHECK(dense.thm12_upper == doctest::Approx(p_dense * 100.0 * 100.0));

    // inside the window n^{-(r-2)} <= p <= n^{-(r-2)+1/(2l-2)}
    double p_mid = std::pow(100.0, -0.9);
    auto mid = theory_curves(100, 3, 2, p_mid);
    double want =
        std::pow(p_mid, 1.0 / 3.0) * std::pow(100.0, 1.0 + 2.0 / 3.0);
    CHECK(mid.thm12_upper == doctest::Approx(want));

    // cor13 lowest regime: best lower bound ~ p n^r ... cross-check positivity
    auto low = theory_curves(100, 3, 2, std::pow(100.0, -2.5));
    CHECK(low.cor13_value > 0.0);
    CHECK(std::isfinite(low.cor13_value));
}

TEST_CASE("theory_curves continuity at the branch boundary") {
    // at p = n^{-(r-2)+1/(2l-2)} both thm12 branches agree up to n^{0.01}
    int n = 1000;
    double boundary = std::pow(n, -1.0 + 0.5);
    double lo = theory_curves(n, 3, 2, boundary * 0.999).thm12_upper;
    double hi = theory_curves(n, 3, 2, boundary * 1.001).thm12_upper;
    CHECK(std::abs(std::log(lo) - std::log(hi)) <= 0.01 * std::log(n));
}

TEST_CASE("conj71 value and domain") {
    // middle regime n^{-5/3} <= p <= n^{-2/3}: value n^{4/3}
    double p = 1.0 / 50;
    auto c = theory_curves(50, 3, 2, p);
    CHECK(c.conj71_value == doctest::Approx(std::pow(50.0, 4.0 / 3.0)));
    // sparse regime: p C(n,3)
    double p_lo = std::pow(50.0, -2.0);
    CHECK(theory_curves(50, 3, 2, p_lo).conj71_value ==
          doctest::Approx(p_lo * static_cast<double>(binomial(50, 3))));
    // dense regime: p n^2
    CHECK(theory_curves(50, 3, 2, 0.5).conj71_value == doctest::Approx(0.5 * 50.0 * 50.0));
    CHECK(std::isnan(theory_curves(50, 4, 2, p).conj71_value));
    CHECK(std::isnan(theory_curves(50, 3, 3, p).conj71_value));
}

TEST_CASE("theory_curves is monotone in p for thm12") {
    double prev = 0.0;
    for (double e = -2.4; e <= -0.2; e += 0.2) {
        double v = theory_curves(200, 3, 2, std::pow(200.0, e)).thm12_upper;
        CHECK(v >= prev * 0.999);
        prev = v;
    }
}

TEST_CASE("run_point at p = 0") {
    ExperimentConfig cfg;
    cfg.n = 12;
    auto rec = run_point(cfg, 0.0, 1);
    CHECK(rec.e_G == 0);
    CHECK(rec.exact.value == 0);
    CHECK(rec.best_lower == 0);
    CHECK(rec.upper == 0.0);
}

TEST_CASE("run_point estimator ordering") {
    ExperimentConfig cfg;
    cfg.n = 12;
    for (std::uint64_t s = 1; s <= 5; ++s) {
        auto rec = run_point(cfg, 0.15, s);
        REQUIRE(rec.exact.ok);
        CHECK(rec.greedy.value <= rec.exact.value);
        CHECK(rec.star.value <= rec.exact.value);
        CHECK(rec.best_lower <= rec.exact.value);
        CHECK(rec.exact.value <= rec.e_G);
        CHECK(rec.upper == doctest::Approx(static_cast<double>(rec.exact.value)));
        CHECK(rec.upper_is_exact);
    }
}

TEST_CASE("run_point carry feeds the monotone envelope") {
    ExperimentConfig cfg;
    cfg.n = 12;
    auto rec = run_point(cfg, 0.1, 2, 1000);
    CHECK(rec.best_lower == 1000);  // carry dominates anything at this scale
}

TEST_CASE("parse_experiment_config") {
    std::stringstream ss(
        "# comment\n"
        "n=20\n"
        "r=3\n"
        "ell=2\n"
        "p_exponents=-1.0,-2.0\n"
        "seeds=3\n"
        "seed0=7\n"
        "exact=0\n"
        "containers=1\n"
        "k_target=0.25\n");
    ExperimentConfig cfg = parse_experiment_config(ss);
    CHECK(cfg.n == 20);
    CHECK(cfg.seeds == 3);
    CHECK(cfg.seed0 == 7);
    CHECK_FALSE(cfg.use_exact);
    CHECK(cfg.use_containers);
    CHECK(cfg.k_target == doctest::Approx(0.25));
    REQUIRE(cfg.p_grid.size() == 2);
    // sorted ascending: n^-2 before n^-1
    CHECK(cfg.p_grid[0] == doctest::Approx(std::pow(20.0, -2.0)));
    CHECK(cfg.p_grid[1] == doctest::Approx(std::pow(20.0, -1.0)));

    std::stringstream bad("n=20\np_list=0.5,0.1\n");
    CHECK_THROWS(parse_experiment_config(bad));  // p_list must be nondecreasing
}

TEST_CASE("run_grid shape: points x seeds plus aggregates plus checksum") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.p_grid = {0.1};
    cfg.seeds = 3;
    auto res = run_grid(cfg);
    CHECK(res.records.size() == 3);
    int lines = 0;
    std::stringstream ss(res.csv);
    std::string line;
    while (std::getline(ss, line)) ++lines;
    // header + 3 raw + 1 aggregate + checksum
    CHECK(lines == 6);
    CHECK(verify_grid_checksum(res.csv));
}

TEST_CASE("run_grid is byte-identical across reruns") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.p_grid = {0.05, 0.15};
    cfg.seeds = 2;
    auto a = run_grid(cfg);
    auto b = run_grid(cfg);
    CHECK(a.csv == b.csv);
}

TEST_CASE("run_grid resume reuses verified rows and keeps the bytes") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.p_grid = {0.05, 0.15};
    cfg.seeds = 2;
    auto fresh = run_grid(cfg);
    auto resumed = run_grid(cfg, fresh.csv);
    CHECK(resumed.reused_rows == 4);
    CHECK(resumed.csv == fresh.csv);

    // corrupted checksum: nothing reused, output still identical
    std::string corrupted = fresh.csv;
    corrupted[corrupted.find_last_of('m') + 2] ^= 1;
    auto re2 = run_grid(cfg, corrupted);
    CHECK(re2.reused_rows == 0);
    CHECK(re2.csv == fresh.csv);
}

TEST_CASE("run_grid empty grid emits only header and checksum") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.p_grid = {};
    auto res = run_grid(cfg);
    CHECK(res.records.empty());
    int lines = 0;
    std::stringstream ss(res.csv);
    std::string line;
    while (std::getline(ss, line)) ++lines;
    CHECK(lines == 2);
    CHECK(verify_grid_checksum(res.csv));
}

TEST_CASE("coupled grid keeps best_lower monotone per seed") {
    ExperimentConfig cfg;
    cfg.n = 12;
    cfg.p_grid = {0.02, 0.06, 0.12, 0.2};
    cfg.seeds = 3;
    auto res = run_grid(cfg);
    for (std::uint64_t s = 0; s < 3; ++s) {
        long long prev = -1;
        for (const auto& rec : res.records) {
            if (rec.seed != cfg.seed0 + s) continue;
            CHECK(rec.best_lower >= prev);
            prev = rec.best_lower;
        }
    }
}

TEST_CASE("checksum verification rejects tampering") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.p_grid = {0.1};
    cfg.seeds = 1;
    auto res = run_grid(cfg);
    CHECK(verify_grid_checksum(res.csv));
    std::string bad = res.csv;
    std::size_t pos = bad.find("0.1");
    REQUIRE(pos != std::string::npos);
    bad[pos] = '9';
    CHECK_FALSE(verify_grid_checksum(bad));
    CHECK_FALSE(verify_grid_checksum("no checksum here\n"));
}

TEST_CASE("jsonl record rendering") {
    ExperimentConfig cfg;
    cfg.n = 10;
    auto rec = run_point(cfg, 0.1, 1);
    std::string line = record_to_jsonl(rec);
    CHECK(line.front() == '{');
    CHECK(line.find("\"n\":10") != std::string::npos);
    CHECK(line.find("\"seed\":1") != std::string::npos);
    CHECK(line.find("\"e_G\":") != std::string::npos);

    // conj71 NaN must render as null, not as bare NaN
    ExperimentConfig c4 = cfg;
    c4.r = 4;
    c4.use_star = false;
    auto rec4 = run_point(c4, 0.05, 1);
    std::string l4 = record_to_jsonl(rec4);
    CHECK(l4.find("nan") == std::string::npos);
    CHECK(l4.find("null") != std::string::npos);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg;
    cfg.p_grid = {0.2, 0.1};
    CHECK_THROWS(cfg.validate());
    cfg.p_grid = {0.1, 0.2};
    cfg.seeds = 0;
    CHECK_THROWS(cfg.validate());
    cfg.seeds = 1;
    CHECK_NOTHROW(cfg.validate());
}
