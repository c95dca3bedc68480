#include "mlag/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlag {

namespace {

// splitmix64; portable bit-exact seeding and sampling, independent of the
// standard library's distribution implementations.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    // Unbiased uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = mix_(); } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t mix_() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::uint64_t state_;
};

double quantile_linear(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty list");
    if (sorted.size() == 1) return sorted[0];
    double pos = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

ScoreDistribution summarize(const std::vector<ScoredEdge>& scores) {
    if (scores.empty()) throw std::invalid_argument("summarize: empty score list");
    std::vector<double> values;
    values.reserve(scores.size());
    for (const auto& s : scores) values.push_back(s.score);

    ScoreDistribution d;
    double sum = 0.0;
    for (double v : values) sum += v;
    d.mean = sum / static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - d.mean) * (v - d.mean);
    d.stddev = std::sqrt(var / static_cast<double>(values.size()));

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    d.min = sorted.front();
    d.max = sorted.back();
    d.q1 = quantile_linear(sorted, 0.25);
    d.median = quantile_linear(sorted, 0.5);
    d.q3 = quantile_linear(sorted, 0.75);

    double iqr = d.q3 - d.q1;
    double lo = d.q1 - 1.5 * iqr;
    double hi = d.q3 + 1.5 * iqr;
    for (const auto& s : scores)
        if (s.score < lo || s.score > hi) d.outliers.emplace_back(s.edge_id, s.score);
    return d;
}

ControlsAssessment apply_bias(const ControlsAssessment& a, const BiasTransform& t) {
    ControlsAssessment out = a;
    switch (t.kind) {
        case BiasKind::Conservative:
            for (auto& [_, v] : out.entries)
                if (v == AssessmentValue::PC) v = AssessmentValue::NC;
            return out;
        case BiasKind::NotRigorous:
            for (auto& [_, v] : out.entries)
                if (v == AssessmentValue::PC) v = AssessmentValue::C;
            return out;
        case BiasKind::Perturb: break;
    }
    if (t.percentage < 0.0 || t.percentage > 100.0)
        throw std::out_of_range("perturbation percentage must be in [0,100]");

    std::vector<std::string> ids;
    for (const auto& [id, _] : out.entries) ids.push_back(id);  // map keeps them sorted
    std::size_t n = ids.size();
    auto count = static_cast<std::size_t>(
        std::llround(t.percentage * static_cast<double>(n) / 100.0));

    SplitMix rng(mix64(t.seed));
    // Partial Fisher-Yates picks `count` distinct controls.
    for (std::size_t i = 0; i < count && i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(ids[i], ids[j]);
    }
    static constexpr AssessmentValue kValues[] = {AssessmentValue::C, AssessmentValue::PC,
                                                  AssessmentValue::NC};
    for (std::size_t i = 0; i < count && i < n; ++i) {
        AssessmentValue old = out.entries[ids[i]];
        // Pick one of the two other values.
        std::vector<AssessmentValue> others;
        for (AssessmentValue v : kValues)
            if (v != old) others.push_back(v);
        out.entries[ids[i]] = others[rng.below(others.size())];
    }
    return out;
}

namespace {

std::vector<std::string> perturbed_ids(const ControlsAssessment& before,
                                       const ControlsAssessment& after) {
    std::vector<std::string> out;
    for (const auto& [id, v] : before.entries)
        if (after.entries.at(id) != v) out.push_back(id);
    return out;
}

std::vector<LayerDeviation> layer_deviations(const std::vector<ScoredEdge>& run,
                                             const std::vector<ScoredEdge>& truth) {
    std::vector<LayerDeviation> out;
    for (Layer l : {Layer::Human, Layer::Access, Layer::Network}) {
        LayerDeviation d;
        d.layer = l;
        std::size_t n = 0;
        for (std::size_t i = 0; i < run.size(); ++i) {
            if (run[i].layer != l) continue;
            double dev = run[i].score - truth[i].score;
            d.mean_deviation += dev;
            d.mean_abs_deviation += std::abs(dev);
            ++n;
        }
        if (n > 0) {
            d.mean_deviation /= static_cast<double>(n);
            d.mean_abs_deviation /= static_cast<double>(n);
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace

SweepReport sensitivity_sweep(const PipelineInputs& in, const ControlsAssessment& ground_truth,
                              const PipelineConfig& cfg, const std::vector<double>& percentages,
                              std::size_t trials) {
    if (trials < 1) throw std::invalid_argument("sensitivity_sweep: trials must be >= 1");
    SweepReport report;
    report.seed = cfg.seed;
    report.ground_truth = run_pipeline(in, ground_truth, cfg).edges;

    for (double p : percentages) {
        for (std::size_t trial = 0; trial < trials; ++trial) {
            SweepRun run;
            run.percentage = p;
            run.trial = trial;
            // Per-run seed depends only on (base seed, p, trial): runs can
            // execute in any order without changing results.
            run.seed = mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(std::llround(p * 100.0)) *
                                                  0x100000001b3ULL +
                                              trial));
            BiasTransform t{BiasKind::Perturb, p, run.seed};
            ControlsAssessment perturbed = apply_bias(ground_truth, t);
            run.perturbed_controls = perturbed_ids(ground_truth, perturbed);
            run.edges = run_pipeline(in, perturbed, cfg).edges;
            run.distribution = summarize(run.edges);
            report.per_run_layer_deviation.push_back(
                layer_deviations(run.edges, report.ground_truth));
            report.runs.push_back(std::move(run));
        }
    }
    return report;
}

BorderlineReport borderline_cases(const PipelineInputs& in, const PipelineConfig& cfg) {
    auto uniform = [&](AssessmentValue v) {
        ControlsAssessment a;
        a.weights = cfg.weights;
        for (const auto& c : in.controls) a.entries[c.id] = v;
        return a;
    };
    BorderlineReport r;
    auto res_c = run_pipeline(in, uniform(AssessmentValue::C), cfg);
    auto res_pc = run_pipeline(in, uniform(AssessmentValue::PC), cfg);
    auto res_nc = run_pipeline(in, uniform(AssessmentValue::NC), cfg);
    r.all_c = res_c.edges;
    r.all_pc = res_pc.edges;
    r.all_nc = res_nc.edges;
    r.cv_c = res_c.cv;
    r.cv_pc = res_pc.cv;
    r.cv_nc = res_nc.cv;
    if (!r.all_c.empty()) {
        r.dist_c = summarize(r.all_c);
        r.dist_pc = summarize(r.all_pc);
        r.dist_nc = summarize(r.all_nc);
    }
    return r;
}

}  // namespace mlag
