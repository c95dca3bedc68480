#include <doctest.h>

#include "mlag/controls.hpp"

using namespace mlag;

namespace {

ControlsAssessment make_assessment(std::size_t c, std::size_t pc, std::size_t nc,
                                   CoverageWeights w = {}) {
    ControlsAssessment a;
    a.weights = w;
    std::size_t i = 0;
    for (; i < c; ++i) a.entries["c" + std::to_string(i)] = AssessmentValue::C;
    for (; i < c + pc; ++i) a.entries["c" + std::to_string(i)] = AssessmentValue::PC;
    for (; i < c + pc + nc; ++i) a.entries["c" + std::to_string(i)] = AssessmentValue::NC;
    return a;
}

}  // namespace

TEST_CASE("count_by_value") {
    auto counts = count_by_value(make_assessment(3, 0, 0));
    CHECK(counts.c == 3);
    CHECK(counts.pc == 0);
    CHECK(counts.nc == 0);

    counts = count_by_value(make_assessment(1, 1, 1));
    CHECK(counts.c == 1);
    CHECK(counts.pc == 1);
    CHECK(counts.nc == 1);
    CHECK(counts.total() == 3);

    CHECK(count_by_value(ControlsAssessment{}).total() == 0);
}

TEST_CASE("compute_cv, divisor |X| = 3") {
    auto a = make_assessment(10, 4, 6, {1.0, 0.5, 0.0});
    CHECK(compute_cv(a) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("compute_cv is zero when everything is NC with zero weight") {
    auto a = make_assessment(0, 0, 7, {1.0, 0.5, 0.0});
    CHECK(compute_cv(a) == 0.0);
}

TEST_CASE("compute_cv normalized variant divides by control count") {
    auto a = make_assessment(10, 4, 6, {1.0, 0.5, 0.0});
    CHECK(compute_cv(a, CvMode::Normalized) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(compute_cv(ControlsAssessment{}, CvMode::Normalized) == 0.0);
}

TEST_CASE("cv is monotone under NC -> PC -> C upgrades") {
    for (auto mode : {CvMode::Paper, CvMode::Normalized}) {
        auto a = make_assessment(2, 3, 5);
        double prev = compute_cv(a, mode);
        // Upgrade one NC to PC, then to C.
        a.entries["c9"] = AssessmentValue::PC;
        double mid = compute_cv(a, mode);
        a.entries["c9"] = AssessmentValue::C;
        double high = compute_cv(a, mode);
        CHECK(prev <= mid);
        CHECK(mid <= high);
    }
}

TEST_CASE("cv linearity: all-PC is (pc/c) of all-C") {
    for (std::size_t n : {1u, 4u, 20u, 114u}) {
        auto all_c = make_assessment(n, 0, 0);
        auto all_pc = make_assessment(0, n, 0);
        CHECK(compute_cv(all_pc) == doctest::Approx(0.5 * compute_cv(all_c)).epsilon(1e-15));
    }
}

TEST_CASE("assessment CSV round-trip") {
    auto a = make_assessment(2, 1, 1);
    auto back = assessment_from_csv_text(assessment_to_csv_text(a));
    CHECK(back.entries == a.entries);
}

TEST_CASE("assessment CSV rejects bad input") {
    CHECK_THROWS(assessment_from_csv_text("control_id,value\nc1,X\n"));
    CHECK_THROWS(assessment_from_csv_text("id,value\nc1,C\n"));           // wrong header
    CHECK_THROWS(assessment_from_csv_text("control_id,value\nc1,C\nc1,PC\n"));  // duplicate
}

TEST_CASE("controls JSON round-trip and validation") {
    auto controls = controls_from_json_text(
        R"([{"id":"A.1","title":"t","concepts":["a","b"]}])");
    REQUIRE(controls.size() == 1);
    auto back = controls_from_json_text(controls_to_json_text(controls));
    CHECK(back.size() == 1);
    CHECK(back[0].id == "A.1");
    CHECK(back[0].concepts == std::vector<std::string>{"a", "b"});

    CHECK_THROWS(controls_from_json_text(R"([{"id":"A.1","title":"t","concepts":[]}])"));
}
