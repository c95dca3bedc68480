#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mlag/analytics.hpp"
#include "mlag/report.hpp"

using namespace mlag;

namespace {

std::vector<ScoredEdge> as_scores(const std::vector<double>& values) {
    std::vector<ScoredEdge> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        ScoredEdge e;
        e.edge_id = "e" + std::to_string(i);
        e.score = values[i];
        out.push_back(e);
    }
    return out;
}

// Brute-force statistics oracle, written straight from the definitions.
struct Oracle {
    double mean, stddev, q1, median, q3;
    std::vector<std::string> outliers;
};

double oracle_quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    if (v.size() == 1) return v[0];
    double pos = q * double(v.size() - 1);
    auto lo = std::size_t(std::floor(pos));
    auto hi = std::size_t(std::ceil(pos));
    return v[lo] + (pos - double(lo)) * (v[hi] - v[lo]);
}

Oracle oracle_stats(const std::vector<double>& v) {
    Oracle o{};
    for (double x : v) o.mean += x;
    o.mean /= double(v.size());
    for (double x : v) o.stddev += (x - o.mean) * (x - o.mean);
    o.stddev = std::sqrt(o.stddev / double(v.size()));
    o.q1 = oracle_quantile(v, 0.25);
    o.median = oracle_quantile(v, 0.5);
    o.q3 = oracle_quantile(v, 0.75);
    double iqr = o.q3 - o.q1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < o.q1 - 1.5 * iqr || v[i] > o.q3 + 1.5 * iqr)
            o.outliers.push_back("e" + std::to_string(i));
    return o;
}

}  // namespace

TEST_CASE("summarize on constant and single lists") {
    auto d = summarize(as_scores({0.1, 0.1, 0.1}));
    CHECK(d.mean == doctest::Approx(0.1));
    CHECK(d.stddev == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.outliers.empty());

    d = summarize(as_scores({0.5}));
    CHECK(d.mean == 0.5);
    CHECK(d.median == 0.5);
    CHECK(d.stddev == 0.0);

    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("summarize flags the IQR outlier") {
    auto d = summarize(as_scores({1, 2, 3, 4, 100}));
    REQUIRE(d.outliers.size() == 1);
    CHECK(d.outliers[0].first == "e4");
    CHECK(d.outliers[0].second == 100.0);
}

TEST_CASE("summarize matches the brute-force oracle on seeded lists") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t n = 1; n <= 50; ++n) {
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) values.push_back(u(rng));
        auto d = summarize(as_scores(values));
        auto o = oracle_stats(values);
        CHECK(d.mean == doctest::Approx(o.mean).epsilon(1e-12));
        CHECK(d.stddev == doctest::Approx(o.stddev).epsilon(1e-12));
        CHECK(d.q1 == doctest::Approx(o.q1).epsilon(1e-12));
        CHECK(d.median == doctest::Approx(o.median).epsilon(1e-12));
        CHECK(d.q3 == doctest::Approx(o.q3).epsilon(1e-12));
        std::vector<std::string> got;
        for (const auto& [id, _] : d.outliers) got.push_back(id);
        CHECK(got == o.outliers);
        CHECK(d.q1 <= d.median);
        CHECK(d.median <= d.q3);
    }
}

namespace {

ControlsAssessment small_assessment() {
    ControlsAssessment a;
    a.entries = {{"c1", AssessmentValue::C},
                 {"c2", AssessmentValue::PC},
                 {"c3", AssessmentValue::NC}};
    return a;
}

}  // namespace

TEST_CASE("conservative and not-rigorous biases flip only PC") {
    auto a = small_assessment();
    auto cons = apply_bias(a, {BiasKind::Conservative});
    CHECK(cons.entries["c1"] == AssessmentValue::C);
    CHECK(cons.entries["c2"] == AssessmentValue::NC);
    CHECK(cons.entries["c3"] == AssessmentValue::NC);

    auto lax = apply_bias(a, {BiasKind::NotRigorous});
    CHECK(lax.entries["c1"] == AssessmentValue::C);
    CHECK(lax.entries["c2"] == AssessmentValue::C);
    CHECK(lax.entries["c3"] == AssessmentValue::NC);
}

TEST_CASE("conservative then not-rigorous on all-PC") {
    ControlsAssessment a;
    for (int i = 0; i < 5; ++i)
        a.entries["c" + std::to_string(i)] = AssessmentValue::PC;
    auto cons = apply_bias(a, {BiasKind::Conservative});
    for (const auto& [_, v] : cons.entries) CHECK(v == AssessmentValue::NC);
    auto then_lax = apply_bias(cons, {BiasKind::NotRigorous});
    CHECK(then_lax.entries == cons.entries);  // no PC left to flip
}

TEST_CASE("perturb changes exactly the contracted count") {
    ControlsAssessment a;
    for (int i = 0; i < 20; ++i)
        a.entries["c" + std::to_string(i)] =
            static_cast<AssessmentValue>(i % 3);
    for (double p : {0.0, 15.0, 45.0, 65.0, 90.0, 100.0}) {
        auto out = apply_bias(a, {BiasKind::Perturb, p, 99});
        std::size_t changed = 0;
        for (const auto& [id, v] : a.entries)
            if (out.entries.at(id) != v) ++changed;
        CHECK(changed == std::size_t(std::llround(p * 20.0 / 100.0)));
    }
    CHECK(apply_bias(a, {BiasKind::Perturb, 0.0, 1}).entries == a.entries);
    CHECK_THROWS_AS(apply_bias(a, {BiasKind::Perturb, 101.0, 1}), std::out_of_range);
}

TEST_CASE("perturb is reproducible from its seed") {
    ControlsAssessment a;
    for (int i = 0; i < 30; ++i)
        a.entries["c" + std::to_string(i)] = static_cast<AssessmentValue>(i % 3);
    auto one = apply_bias(a, {BiasKind::Perturb, 45.0, 7});
    auto two = apply_bias(a, {BiasKind::Perturb, 45.0, 7});
    CHECK(one.entries == two.entries);
    auto other_seed = apply_bias(a, {BiasKind::Perturb, 45.0, 8});
    CHECK(one.entries != other_seed.entries);  // overwhelmingly likely at 45%
}

namespace {

PipelineInputs fixture_inputs() {
    PipelineInputs in;
    in.graph = load_graph(std::string(FIXTURE_DIR) + "/graph.json");
    in.controls = load_controls(std::string(FIXTURE_DIR) + "/controls.json");
    in.spec_matrix = load_alignment_matrix(std::string(FIXTURE_DIR) + "/alignment_spec.csv");
    in.layer_matrix = load_alignment_matrix(std::string(FIXTURE_DIR) + "/alignment_layers.csv");
    in.vulns = load_vulndb(std::string(FIXTURE_DIR) + "/vulns.json");
    return in;
}

}  // namespace

TEST_CASE("sensitivity sweep: run count, determinism, zero-percentage identity") {
    auto in = fixture_inputs();
    auto truth = load_assessment(std::string(FIXTURE_DIR) + "/assessment.csv");
    PipelineConfig cfg;
    cfg.seed = 42;

    auto zero = sensitivity_sweep(in, truth, cfg, {0.0}, 1);
    REQUIRE(zero.runs.size() == 1);
    for (std::size_t i = 0; i < zero.runs[0].edges.size(); ++i)
        CHECK(zero.runs[0].edges[i].score == zero.ground_truth[i].score);

    auto full = sensitivity_sweep(in, truth, cfg, {15, 45, 65, 90}, 7);
    CHECK(full.runs.size() == 28);

    ReportMeta meta;
    meta.config = cfg;
    auto again = sensitivity_sweep(in, truth, cfg, {15, 45, 65, 90}, 7);
    CHECK(sweep_report_json(full, meta) == sweep_report_json(again, meta));
    CHECK(sweep_report_csv(full) == sweep_report_csv(again));
}

TEST_CASE("borderline cases: cv ratio, ordering, annihilation") {
    auto in = fixture_inputs();
    PipelineConfig cfg;

    auto r = borderline_cases(in, cfg);
    CHECK(r.cv_pc == doctest::Approx((cfg.weights.pc / cfg.weights.c) * r.cv_c).epsilon(1e-15));
    REQUIRE(r.all_c.size() == r.all_pc.size());
    for (std::size_t i = 0; i < r.all_c.size(); ++i) {
        CHECK(r.all_nc[i].score <= r.all_pc[i].score + 1e-12);
        CHECK(r.all_pc[i].score <= r.all_c[i].score + 1e-12);
    }

    PipelineConfig zero_nc = cfg;
    zero_nc.weights.nc = 0.0;
    auto r0 = borderline_cases(in, zero_nc);
    for (const auto& e : r0.all_nc) CHECK(e.score == 0.0);
}
