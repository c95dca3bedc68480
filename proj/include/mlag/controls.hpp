#pragma once

#include <map>
#include <string>
#include <vector>

namespace mlag {

struct SecurityControl {
    std::string id;     // framework identifier, e.g. "A.9.4.3"
    std::string title;
    std::vector<std::string> concepts;  // tokenized description used for alignment
};

enum class AssessmentValue { C, PC, NC };

const char* assessment_value_name(AssessmentValue v);
AssessmentValue assessment_value_from_string(const std::string& s);

// Percentage of coverage each assessment value stands for.
struct CoverageWeights {
    double c = 1.0;
    double pc = 0.5;
    double nc = 0.1;

    double of(AssessmentValue v) const;
    bool ordered() const { return c >= pc && pc >= nc && c <= 1.0 && nc >= 0.0; }
};

enum class CvMode { Paper, Normalized };

struct ControlsAssessment {
    std::map<std::string, AssessmentValue> entries;  // control id -> value
    CoverageWeights weights;
};

struct ValueCounts {
    std::size_t c = 0;
    std::size_t pc = 0;
    std::size_t nc = 0;
    std::size_t total() const { return c + pc + nc; }
};

ValueCounts count_by_value(const ControlsAssessment& a);

// cv = sum_x alpha_x * |x| / divisor, where the divisor is the number of
// assessment levels (3) in Paper mode or the total control count in
// Normalized mode.
double compute_cv(const ControlsAssessment& a, CvMode mode = CvMode::Paper);

// control catalog JSON: [{id,title,concepts:[...]}]
std::vector<SecurityControl> controls_from_json_text(const std::string& text);
std::string controls_to_json_text(const std::vector<SecurityControl>& controls);
std::vector<SecurityControl> load_controls(const std::string& path);

// assessment CSV: header "control_id,value"
ControlsAssessment assessment_from_csv_text(const std::string& text);
std::string assessment_to_csv_text(const ControlsAssessment& a);
ControlsAssessment load_assessment(const std::string& path);

}  // namespace mlag
