#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlag/pipeline.hpp"
#include "mlag/scoring.hpp"

namespace mlag {

struct ScoreDistribution {
    double mean = 0.0;
    double stddev = 0.0;  // population
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    std::vector<std::pair<std::string, double>> outliers;  // outside 1.5*IQR fences
};

// Quartiles use linear interpolation between closest ranks; the 1.5*IQR
// fence rule marks outliers.
ScoreDistribution summarize(const std::vector<ScoredEdge>& scores);

enum class BiasKind { Conservative, NotRigorous, Perturb };

struct BiasTransform {
    BiasKind kind = BiasKind::Conservative;
    double percentage = 0.0;   // Perturb only, in [0,100]
    std::uint64_t seed = 0;    // Perturb only
};

// Conservative: every PC -> NC. NotRigorous: every PC -> C.
// Perturb: round(p*N/100) distinct controls, chosen uniformly with the seeded
// generator, each reassigned to a uniformly chosen different value.
ControlsAssessment apply_bias(const ControlsAssessment& a, const BiasTransform& t);

struct SweepRun {
    double percentage = 0.0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;   // derived per-run seed
    std::vector<ScoredEdge> edges;
    ScoreDistribution distribution;
    std::vector<std::string> perturbed_controls;
};

struct LayerDeviation {
    Layer layer = Layer::Human;
    double mean_deviation = 0.0;   // signed mean of (score - ground truth)
    double mean_abs_deviation = 0.0;
};

struct SweepReport {
    std::uint64_t seed = 0;
    std::vector<ScoredEdge> ground_truth;
    std::vector<SweepRun> runs;
    std::vector<std::vector<LayerDeviation>> per_run_layer_deviation;  // parallel to runs
};

// One full pipeline run per (percentage, trial), seeded reproducibly.
SweepReport sensitivity_sweep(const PipelineInputs& in, const ControlsAssessment& ground_truth,
                              const PipelineConfig& cfg, const std::vector<double>& percentages,
                              std::size_t trials);

struct BorderlineReport {
    std::vector<ScoredEdge> all_c;
    std::vector<ScoredEdge> all_pc;
    std::vector<ScoredEdge> all_nc;
    ScoreDistribution dist_c;
    ScoreDistribution dist_pc;
    ScoreDistribution dist_nc;
    double cv_c = 0.0;
    double cv_pc = 0.0;
    double cv_nc = 0.0;
};

// Runs the pipeline under the all-C, all-PC and all-NC assessments.
BorderlineReport borderline_cases(const PipelineInputs& in, const PipelineConfig& cfg);

}  // namespace mlag
