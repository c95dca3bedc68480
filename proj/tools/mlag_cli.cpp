// Command-line front end for the risk assessment review pipeline.
//
// Subcommands: validate, review, score, analyze {summary|bias|sweep|borderline}.
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 cross-reference,
// 4 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlag/analytics.hpp"
#include "mlag/errors.hpp"
#include "mlag/pipeline.hpp"
#include "mlag/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCrossRef = 3;
constexpr int kExitInternal = 4;

struct CommonOpts {
    std::string graph, controls, assessment, alignment_spec, alignment_layers, vulns, config;
    std::string concepts_human, concepts_access, concepts_network;
    std::string attacker, aggregation, cv_mode, out, format = "json";
    double alpha = -1.0;
    std::optional<std::uint64_t> seed;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--graph", o.graph, "MLAG JSON file");
    cmd->add_option("--controls", o.controls, "control catalog JSON");
    cmd->add_option("--assessment", o.assessment, "assessment CSV (control_id,value)");
    cmd->add_option("--alignment-spec", o.alignment_spec,
                    "alignment CSV with run_time/design_time/operational/compliance columns");
    cmd->add_option("--alignment-layers", o.alignment_layers,
                    "alignment CSV with human/access/network columns");
    cmd->add_option("--concepts-human", o.concepts_human,
                    "human layer concept-set JSON (built-in aligner)");
    cmd->add_option("--concepts-access", o.concepts_access, "access layer concept-set JSON");
    cmd->add_option("--concepts-network", o.concepts_network, "network layer concept-set JSON");
    cmd->add_option("--vulns", o.vulns, "vulnerability database JSON");
    cmd->add_option("--config", o.config, "pipeline config JSON");
    cmd->add_option("--attacker", o.attacker, "naive|advanced|professional");
    cmd->add_option("--aggregation", o.aggregation, "mean|min|max");
    cmd->add_option("--alpha", o.alpha, "maximum specificity value in (0,1]");
    cmd->add_option("--cv-mode", o.cv_mode, "paper|normalized");
    cmd->add_option("--seed", o.seed, "base seed for randomized analyses");
    cmd->add_option("--out", o.out, "output file (stdout if omitted)");
    cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

mlag::PipelineConfig resolve_config(const CommonOpts& o) {
    mlag::PipelineConfig cfg;
    if (!o.config.empty()) cfg = mlag::load_config(o.config);
    if (!o.attacker.empty()) {
        auto ab = mlag::ability_from_string(o.attacker);
        if (!ab) throw std::runtime_error("unknown attacker ability \"" + o.attacker + "\"");
        cfg.attacker = mlag::AttackerProfile::for_ability(*ab);
    }
    if (!o.aggregation.empty()) {
        auto f = mlag::aggregation_from_string(o.aggregation);
        if (!f) throw std::runtime_error("unknown aggregation \"" + o.aggregation + "\"");
        cfg.aggregation = *f;
    }
    if (o.alpha >= 0.0) {
        if (o.alpha <= 0.0 || o.alpha > 1.0) throw std::runtime_error("alpha must be in (0,1]");
        cfg.review.alpha = o.alpha;
    }
    if (!o.cv_mode.empty()) {
        if (o.cv_mode == "paper") cfg.cv_mode = mlag::CvMode::Paper;
        else if (o.cv_mode == "normalized") cfg.cv_mode = mlag::CvMode::Normalized;
        else throw std::runtime_error("cv-mode must be paper or normalized");
    }
    if (o.seed) cfg.seed = *o.seed;
    return cfg;
}

std::string require(const std::string& value, const char* flag) {
    if (value.empty()) throw CLI::RequiredError(flag);
    return value;
}

mlag::ReportMeta make_meta(const mlag::PipelineConfig& cfg, const CommonOpts& o) {
    mlag::ReportMeta meta;
    meta.config = cfg;
    for (const std::string& path :
         {o.graph, o.controls, o.assessment, o.alignment_spec, o.alignment_layers,
          o.concepts_human, o.concepts_access, o.concepts_network, o.vulns, o.config})
        if (!path.empty()) meta.input_digests[path] = mlag::file_digest(path);
    return meta;
}

mlag::AlignmentMatrix resolve_layer_matrix(const CommonOpts& o,
                                           const std::vector<mlag::SecurityControl>& controls) {
    if (!o.alignment_layers.empty()) return mlag::load_alignment_matrix(o.alignment_layers);
    if (o.concepts_human.empty() || o.concepts_access.empty() || o.concepts_network.empty())
        throw std::runtime_error(
            "need either --alignment-layers or all three --concepts-* files");
    return mlag::build_layer_alignment(controls, mlag::load_concept_set(o.concepts_human),
                                       mlag::load_concept_set(o.concepts_access),
                                       mlag::load_concept_set(o.concepts_network));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << text;
}

mlag::PipelineInputs load_inputs(const CommonOpts& o, bool need_vulns) {
    mlag::PipelineInputs in;
    in.graph = mlag::load_graph(require(o.graph, "--graph"));
    auto violations = mlag::validate_graph(in.graph);
    if (!violations.empty()) {
        std::string msg = "graph validation failed:";
        for (const auto& v : violations) msg += "\n  " + v.subject + ": " + v.rule;
        throw std::runtime_error(msg);
    }
    in.controls = mlag::load_controls(require(o.controls, "--controls"));
    in.spec_matrix = mlag::load_alignment_matrix(require(o.alignment_spec, "--alignment-spec"));
    in.layer_matrix = resolve_layer_matrix(o, in.controls);
    if (need_vulns) in.vulns = mlag::load_vulndb(require(o.vulns, "--vulns"));
    return in;
}

int run_validate(const CommonOpts& o) {
    auto g = mlag::load_graph(require(o.graph, "--graph"));
    auto violations = mlag::validate_graph(g);
    nlohmann::json j;
    j["valid"] = violations.empty();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"subject", v.subject}, {"rule", v.rule}});
    emit(j.dump(2), o.out);
    return violations.empty() ? kExitOk : kExitParse;
}

int run_review(const CommonOpts& o) {
    auto cfg = resolve_config(o);
    auto in = load_inputs(o, /*need_vulns=*/false);
    auto assessment = mlag::load_assessment(require(o.assessment, "--assessment"));
    assessment.weights = cfg.weights;
    auto profiles =
        mlag::review_assessment(in.controls, assessment, in.spec_matrix, in.layer_matrix,
                                cfg.review);
    auto meta = make_meta(cfg, o);
    emit(o.format == "csv" ? mlag::review_report_csv(profiles)
                           : mlag::review_report_json(profiles, meta),
         o.out);
    return kExitOk;
}

int run_score(const CommonOpts& o) {
    auto cfg = resolve_config(o);
    auto in = load_inputs(o, /*need_vulns=*/true);
    auto assessment = mlag::load_assessment(require(o.assessment, "--assessment"));
    auto result = mlag::run_pipeline(in, assessment, cfg);
    auto meta = make_meta(cfg, o);
    emit(o.format == "csv" ? mlag::scored_report_csv(result)
                           : mlag::scored_report_json(result, meta),
         o.out);
    return kExitOk;
}

int run_analyze(const CommonOpts& o, const std::string& mode, const std::string& bias,
                const std::vector<double>& percentages, std::size_t trials) {
    auto cfg = resolve_config(o);
    auto in = load_inputs(o, /*need_vulns=*/true);
    auto meta = make_meta(cfg, o);

    if (mode == "borderline") {
        auto r = mlag::borderline_cases(in, cfg);
        emit(o.format == "csv" ? mlag::borderline_report_csv(r)
                               : mlag::borderline_report_json(r, meta),
             o.out);
        return kExitOk;
    }

    auto assessment = mlag::load_assessment(require(o.assessment, "--assessment"));

    if (mode == "summary" || mode == "bias") {
        if (mode == "bias") {
            mlag::BiasTransform t;
            if (bias == "conservative") t.kind = mlag::BiasKind::Conservative;
            else if (bias == "not-rigorous") t.kind = mlag::BiasKind::NotRigorous;
            else throw std::runtime_error("--bias must be conservative or not-rigorous");
            assessment = mlag::apply_bias(assessment, t);
        }
        auto result = mlag::run_pipeline(in, assessment, cfg);
        auto d = mlag::summarize(result.edges);
        emit(o.format == "csv" ? mlag::summary_report_csv(d)
                               : mlag::summary_report_json(d, meta),
             o.out);
        return kExitOk;
    }

    if (mode == "sweep") {
        auto r = mlag::sensitivity_sweep(in, assessment, cfg, percentages, trials);
        emit(o.format == "csv" ? mlag::sweep_report_csv(r) : mlag::sweep_report_json(r, meta),
             o.out);
        return kExitOk;
    }
    throw std::runtime_error("unknown analyze mode \"" + mode + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controls-based risk assessment review over a multi-layer attack graph"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string analyze_mode;
    std::string bias = "conservative";
    std::vector<double> percentages = {15, 45, 65, 90};
    std::size_t trials = 7;

    auto* validate = app.add_subcommand("validate", "check MLAG invariants");
    add_common_flags(validate, opts);

    auto* review = app.add_subcommand("review", "flagged assessment (stages a-c)");
    add_common_flags(review, opts);

    auto* score = app.add_subcommand("score", "scored assessment (stages a-e)");
    add_common_flags(score, opts);

    auto* analyze = app.add_subcommand("analyze", "statistics over the scored assessment");
    analyze->add_option("mode", analyze_mode, "summary|bias|sweep|borderline")
        ->required()
        ->check(CLI::IsMember({"summary", "bias", "sweep", "borderline"}));
    analyze->add_option("--bias", bias, "conservative|not-rigorous");
    analyze->add_option("--percentages", percentages, "perturbation percentages for sweep");
    analyze->add_option("--trials", trials, "trials per percentage");
    add_common_flags(analyze, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return run_validate(opts);
        if (review->parsed()) return run_review(opts);
        if (score->parsed()) return run_score(opts);
        if (analyze->parsed()) return run_analyze(opts, analyze_mode, bias, percentages, trials);
        return kExitUsage;
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: missing required option " << e.what() << "\n";
        return kExitUsage;
    } catch (const mlag::CrossReferenceError& e) {
        std::cerr << "cross-reference error: " << e.what() << "\n";
        return kExitCrossRef;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
