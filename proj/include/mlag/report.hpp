#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlag/analytics.hpp"
#include "mlag/pipeline.hpp"

namespace mlag {

inline constexpr const char* kReportFormatVersion = "1";

// Audit trail embedded in every report: resolved config plus digests of the
// input files the run consumed.
struct ReportMeta {
    PipelineConfig config;
    std::map<std::string, std::string> input_digests;  // path -> fnv1a hex
};

// FNV-1a over the raw file bytes; hex string.
std::string file_digest(const std::string& path);
std::string text_digest(const std::string& text);

std::string review_report_json(const std::vector<ControlProfile>& profiles,
                               const ReportMeta& meta);
std::string review_report_csv(const std::vector<ControlProfile>& profiles);

std::string scored_report_json(const PipelineResult& result, const ReportMeta& meta);
std::string scored_report_csv(const PipelineResult& result);

std::string summary_report_json(const ScoreDistribution& d, const ReportMeta& meta);
std::string summary_report_csv(const ScoreDistribution& d);

std::string sweep_report_json(const SweepReport& r, const ReportMeta& meta);
// Long format: percentage, trial, edge_id, layer, score, ground_truth_score, deviation
std::string sweep_report_csv(const SweepReport& r);

std::string borderline_report_json(const BorderlineReport& r, const ReportMeta& meta);
std::string borderline_report_csv(const BorderlineReport& r);

}  // namespace mlag
