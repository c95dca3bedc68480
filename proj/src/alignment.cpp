#include "mlag/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "csv.hpp"

namespace mlag {

double AlignmentMatrix::value(const std::string& control_id, const std::string& column) const {
    auto row = rows_.find(control_id);
    if (row == rows_.end()) return 0.0;
    auto cell = row->second.find(column);
    return cell == row->second.end() ? 0.0 : cell->second;
}

void AlignmentMatrix::set(const std::string& control_id, const std::string& column, double v) {
    if (v < 0.0 || v > 1.0)
        throw std::out_of_range("alignment value out of [0,1] at (" + control_id + ", " + column +
                                "): " + std::to_string(v));
    if (std::find(columns.begin(), columns.end(), column) == columns.end())
        columns.push_back(column);
    rows_[control_id][column] = v;
}

bool AlignmentMatrix::has_row(const std::string& control_id) const {
    return rows_.count(control_id) > 0;
}

std::vector<std::string> AlignmentMatrix::row_ids() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : rows_) out.push_back(id);
    return out;
}

std::string normalize_token(std::string token) {
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (const std::string& suffix : {"ing", "ed", "s"}) {
        if (token.size() > suffix.size() + 2 && token.ends_with(suffix)) {
            token.erase(token.size() - suffix.size());
            break;
        }
    }
    return token;
}

static std::set<std::string> normalized_set(const std::vector<std::string>& terms) {
    std::set<std::string> out;
    for (const auto& t : terms) {
        auto n = normalize_token(t);
        if (!n.empty()) out.insert(n);
    }
    return out;
}

double lexical_align(const SecurityControl& control, const ConceptSet& concept_set) {
    if (concept_set.terms.empty()) throw std::invalid_argument("concept set " + concept_set.name + " is empty");
    if (control.concepts.empty())
        throw std::invalid_argument("control " + control.id + " has no concept terms");
    auto a = normalized_set(control.concepts);
    auto b = normalized_set(concept_set.terms);
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    std::size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

AlignmentMatrix alignment_matrix_from_csv_text(const std::string& text) {
    auto rows = csv::lines(text);
    if (rows.empty()) throw std::runtime_error("alignment CSV is empty");
    auto header = csv::split_line(rows[0]);
    if (header.size() < 2 || csv::trim(header[0]) != "id")
        throw std::runtime_error("alignment CSV: first header column must be \"id\"");

    AlignmentMatrix m;
    for (std::size_t c = 1; c < header.size(); ++c) m.columns.push_back(csv::trim(header[c]));

    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto fields = csv::split_line(rows[r]);
        std::string id = csv::trim(fields[0]);
        // Short rows leave trailing columns at 0 (missing-is-zero rule).
        for (std::size_t c = 1; c < fields.size() && c < header.size(); ++c) {
            std::string cell = csv::trim(fields[c]);
            if (cell.empty()) continue;
            double v;
            try {
                std::size_t pos = 0;
                v = std::stod(cell, &pos);
                if (pos != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw std::runtime_error("alignment CSV row " + std::to_string(r + 1) +
                                         ", column \"" + m.columns[c - 1] +
                                         "\": not a number: \"" + cell + "\"");
            }
            if (v < 0.0 || v > 1.0)
                throw std::runtime_error("alignment CSV row " + std::to_string(r + 1) +
                                         ", column \"" + m.columns[c - 1] +
                                         "\": value out of [0,1]: " + cell);
            m.set(id, m.columns[c - 1], v);
        }
        if (fields.size() == 1) m.set(id, m.columns[0], 0.0);  // keep the row present
    }
    return m;
}

AlignmentMatrix load_alignment_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open alignment file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return alignment_matrix_from_csv_text(ss.str());
}

AlignmentMatrix build_layer_alignment(const std::vector<SecurityControl>& controls,
                                      const ConceptSet& human, const ConceptSet& access,
                                      const ConceptSet& network) {
    AlignmentMatrix m;
    m.columns = {"human", "access", "network"};
    for (const auto& c : controls) {
        m.set(c.id, "human", lexical_align(c, human));
        m.set(c.id, "access", lexical_align(c, access));
        m.set(c.id, "network", lexical_align(c, network));
    }
    return m;
}

using nlohmann::json;

ConceptSet concept_set_from_json_text(const std::string& text) {
    json j = json::parse(text);
    ConceptSet cs;
    cs.name = j.at("name").get<std::string>();
    for (const auto& t : j.at("terms")) {
        auto term = normalize_token(t.get<std::string>());
        if (std::find(cs.terms.begin(), cs.terms.end(), term) == cs.terms.end())
            cs.terms.push_back(term);
    }
    if (cs.terms.empty()) throw std::runtime_error("concept set " + cs.name + " has no terms");
    return cs;
}

ConceptSet load_concept_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open concept set file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return concept_set_from_json_text(ss.str());
}

}  // namespace mlag
