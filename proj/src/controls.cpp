#include "mlag/controls.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "csv.hpp"

namespace mlag {

const char* assessment_value_name(AssessmentValue v) {
    switch (v) {
        case AssessmentValue::C: return "C";
        case AssessmentValue::PC: return "PC";
        case AssessmentValue::NC: return "NC";
    }
    return "?";
}

AssessmentValue assessment_value_from_string(const std::string& s) {
    if (s == "C") return AssessmentValue::C;
    if (s == "PC") return AssessmentValue::PC;
    if (s == "NC") return AssessmentValue::NC;
    throw std::runtime_error("unknown assessment value \"" + s + "\" (expected C, PC or NC)");
}

double CoverageWeights::of(AssessmentValue v) const {
    switch (v) {
        case AssessmentValue::C: return c;
        case AssessmentValue::PC: return pc;
        case AssessmentValue::NC: return nc;
    }
    return 0.0;
}

ValueCounts count_by_value(const ControlsAssessment& a) {
    ValueCounts counts;
    for (const auto& [_, v] : a.entries) {
        switch (v) {
            case AssessmentValue::C: ++counts.c; break;
            case AssessmentValue::PC: ++counts.pc; break;
            case AssessmentValue::NC: ++counts.nc; break;
        }
    }
    return counts;
}

double compute_cv(const ControlsAssessment& a, CvMode mode) {
    ValueCounts counts = count_by_value(a);
    double weighted = a.weights.c * static_cast<double>(counts.c) +
                      a.weights.pc * static_cast<double>(counts.pc) +
                      a.weights.nc * static_cast<double>(counts.nc);
    if (mode == CvMode::Paper) return weighted / 3.0;
    std::size_t total = counts.total();
    return total == 0 ? 0.0 : weighted / static_cast<double>(total);
}

using nlohmann::json;

std::vector<SecurityControl> controls_from_json_text(const std::string& text) {
    json j = json::parse(text);
    std::vector<SecurityControl> out;
    for (const auto& jc : j) {
        SecurityControl c;
        c.id = jc.at("id").get<std::string>();
        c.title = jc.value("title", "");
        c.concepts = jc.at("concepts").get<std::vector<std::string>>();
        if (c.concepts.empty())
            throw std::runtime_error("control " + c.id + ": concepts must be non-empty");
        out.push_back(std::move(c));
    }
    return out;
}

std::string controls_to_json_text(const std::vector<SecurityControl>& controls) {
    json j = json::array();
    for (const auto& c : controls)
        j.push_back({{"id", c.id}, {"title", c.title}, {"concepts", c.concepts}});
    return j.dump(2);
}

std::vector<SecurityControl> load_controls(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open controls file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return controls_from_json_text(ss.str());
}

ControlsAssessment assessment_from_csv_text(const std::string& text) {
    auto rows = csv::lines(text);
    if (rows.empty()) throw std::runtime_error("assessment CSV is empty");
    auto header = csv::split_line(rows[0]);
    if (header.size() < 2 || csv::trim(header[0]) != "control_id" ||
        csv::trim(header[1]) != "value")
        throw std::runtime_error("assessment CSV: expected header \"control_id,value\"");
    ControlsAssessment a;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto fields = csv::split_line(rows[i]);
        if (fields.size() < 2)
            throw std::runtime_error("assessment CSV line " + std::to_string(i + 1) +
                                     ": expected two fields");
        std::string id = csv::trim(fields[0]);
        if (a.entries.count(id))
            throw std::runtime_error("assessment CSV line " + std::to_string(i + 1) +
                                     ": duplicate control " + id);
        a.entries[id] = assessment_value_from_string(csv::trim(fields[1]));
    }
    return a;
}

std::string assessment_to_csv_text(const ControlsAssessment& a) {
    std::ostringstream out;
    out << "control_id,value\n";
    for (const auto& [id, v] : a.entries) out << id << ',' << assessment_value_name(v) << '\n';
    return out.str();
}

ControlsAssessment load_assessment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open assessment file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return assessment_from_csv_text(ss.str());
}

}  // namespace mlag
