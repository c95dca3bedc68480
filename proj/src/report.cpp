#include "mlag/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mlag {

using nlohmann::json;

std::string text_digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for digest: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return text_digest(ss.str());
}

namespace {

json meta_json(const ReportMeta& meta) {
    json j;
    j["format_version"] = kReportFormatVersion;
    j["config"] = json::parse(config_to_json_text(meta.config));
    j["inputs"] = json(meta.input_digests);
    return j;
}

json profile_json(const ControlProfile& p) {
    return json{{"id", p.control_id},
                {"lifetime", lifetime_name(p.classification.lifetime)},
                {"management", management_name(p.classification.management)},
                {"specificity", p.specificity},
                {"h", p.mapping.h},
                {"a", p.mapping.a},
                {"n", p.mapping.n},
                {"fitting", p.fitting},
                {"reliability", p.reliability},
                {"assessed_value", assessment_value_name(p.assessed)},
                {"flagged", p.flagged}};
}

json edge_json(const ScoredEdge& e) {
    return json{{"id", e.edge_id},
                {"layer", layer_name(e.layer)},
                {"lambda", e.lambda},
                {"governance", e.governance},
                {"score", e.score}};
}

json distribution_json(const ScoreDistribution& d) {
    json j{{"mean", d.mean},   {"std", d.stddev}, {"min", d.min}, {"q1", d.q1},
           {"median", d.median}, {"q3", d.q3},    {"max", d.max},
           {"quartile_method", "linear_interpolation"}};
    j["outliers"] = json::array();
    for (const auto& [id, score] : d.outliers)
        j["outliers"].push_back({{"edge_id", id}, {"score", score}});
    return j;
}

}  // namespace

std::string review_report_json(const std::vector<ControlProfile>& profiles,
                               const ReportMeta& meta) {
    json j = meta_json(meta);
    j["controls"] = json::array();
    for (const auto& p : profiles) j["controls"].push_back(profile_json(p));
    return j.dump(2);
}

std::string review_report_csv(const std::vector<ControlProfile>& profiles) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "id,lifetime,management,specificity,h,a,n,fitting,reliability,assessed_value,flagged\n";
    for (const auto& p : profiles) {
        out << p.control_id << ',' << lifetime_name(p.classification.lifetime) << ','
            << management_name(p.classification.management) << ',' << p.specificity << ','
            << p.mapping.h << ',' << p.mapping.a << ',' << p.mapping.n << ',' << p.fitting << ','
            << p.reliability << ',' << assessment_value_name(p.assessed) << ','
            << (p.flagged ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string scored_report_json(const PipelineResult& result, const ReportMeta& meta) {
    json j = meta_json(meta);
    j["cv"] = result.cv;
    j["aggregation"] = aggregation_name(meta.config.aggregation);
    j["attacker"] = ability_name(meta.config.attacker.ability);
    j["orientation"] = "higher-is-safer";
    j["layers"] = json::array();
    for (const auto& [layer, gov] : result.governance) {
        json jl{{"layer", layer_name(layer)},
                {"governance", gov.value},
                {"pool_size", gov.pool_size}};
        if (gov.pool_size == 0) jl["warning"] = "no controls mapped to this layer";
        j["layers"].push_back(jl);
    }
    j["edges"] = json::array();
    for (const auto& e : result.edges) j["edges"].push_back(edge_json(e));
    return j.dump(2);
}

std::string scored_report_csv(const PipelineResult& result) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "id,layer,lambda,governance,score\n";
    for (const auto& e : result.edges)
        out << e.edge_id << ',' << layer_name(e.layer) << ',' << e.lambda << ',' << e.governance
            << ',' << e.score << '\n';
    return out.str();
}

std::string summary_report_json(const ScoreDistribution& d, const ReportMeta& meta) {
    json j = meta_json(meta);
    j["distribution"] = distribution_json(d);
    return j.dump(2);
}

std::string summary_report_csv(const ScoreDistribution& d) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "mean,std,min,q1,median,q3,max,outlier_count\n";
    out << d.mean << ',' << d.stddev << ',' << d.min << ',' << d.q1 << ',' << d.median << ','
        << d.q3 << ',' << d.max << ',' << d.outliers.size() << '\n';
    return out.str();
}

std::string sweep_report_json(const SweepReport& r, const ReportMeta& meta) {
    json j = meta_json(meta);
    j["seed"] = r.seed;
    j["ground_truth"] = json::array();
    for (const auto& e : r.ground_truth) j["ground_truth"].push_back(edge_json(e));
    j["runs"] = json::array();
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        const auto& run = r.runs[i];
        json jr{{"percentage", run.percentage},
                {"trial", run.trial},
                {"run_seed", run.seed},
                {"perturbed_controls", run.perturbed_controls},
                {"distribution", distribution_json(run.distribution)}};
        jr["edges"] = json::array();
        for (const auto& e : run.edges) jr["edges"].push_back(edge_json(e));
        jr["layer_deviation"] = json::array();
        for (const auto& d : r.per_run_layer_deviation[i])
            jr["layer_deviation"].push_back({{"layer", layer_name(d.layer)},
                                             {"mean_deviation", d.mean_deviation},
                                             {"mean_abs_deviation", d.mean_abs_deviation}});
        j["runs"].push_back(std::move(jr));
    }
    return j.dump(2);
}

std::string sweep_report_csv(const SweepReport& r) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "percentage,trial,edge_id,layer,score,ground_truth_score,deviation\n";
    for (const auto& run : r.runs) {
        for (std::size_t i = 0; i < run.edges.size(); ++i) {
            const auto& e = run.edges[i];
            double truth = r.ground_truth[i].score;
            out << run.percentage << ',' << run.trial << ',' << e.edge_id << ','
                << layer_name(e.layer) << ',' << e.score << ',' << truth << ','
                << (e.score - truth) << '\n';
        }
    }
    return out.str();
}

std::string borderline_report_json(const BorderlineReport& r, const ReportMeta& meta) {
    json j = meta_json(meta);
    auto block = [](const std::vector<ScoredEdge>& edges, const ScoreDistribution& d, double cv) {
        json jb{{"cv", cv}, {"distribution", distribution_json(d)}};
        jb["edges"] = json::array();
        for (const auto& e : edges) jb["edges"].push_back(edge_json(e));
        return jb;
    };
    j["all_c"] = block(r.all_c, r.dist_c, r.cv_c);
    j["all_pc"] = block(r.all_pc, r.dist_pc, r.cv_pc);
    j["all_nc"] = block(r.all_nc, r.dist_nc, r.cv_nc);
    return j.dump(2);
}

std::string borderline_report_csv(const BorderlineReport& r) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "case,edge_id,layer,lambda,governance,score\n";
    auto rows = [&](const char* name, const std::vector<ScoredEdge>& edges) {
        for (const auto& e : edges)
            out << name << ',' << e.edge_id << ',' << layer_name(e.layer) << ',' << e.lambda
                << ',' << e.governance << ',' << e.score << '\n';
    };
    rows("all_c", r.all_c);
    rows("all_pc", r.all_pc);
    rows("all_nc", r.all_nc);
    return out.str();
}

}  // namespace mlag
