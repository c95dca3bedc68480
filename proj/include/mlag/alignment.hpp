#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlag/controls.hpp"

namespace mlag {

// Similarity values in [0,1] between controls (rows) and concepts (columns).
// Missing cells read as 0.
class AlignmentMatrix {
public:
    std::vector<std::string> columns;

    double value(const std::string& control_id, const std::string& column) const;
    void set(const std::string& control_id, const std::string& column, double v);
    bool has_row(const std::string& control_id) const;
    std::vector<std::string> row_ids() const;

private:
    std::map<std::string, std::map<std::string, double>> rows_;
};

struct ConceptSet {
    std::string name;
    std::vector<std::string> terms;  // lowercase, deduplicated
};

// Jaccard similarity over lowercased, suffix-stripped tokens. A deterministic
// stand-in for an external ontology-alignment tool.
double lexical_align(const SecurityControl& control, const ConceptSet& concept_set);

// CSV: first column "id", remaining columns concept names, numeric cells in [0,1].
AlignmentMatrix alignment_matrix_from_csv_text(const std::string& text);
AlignmentMatrix load_alignment_matrix(const std::string& path);

// Columns human, access, network, built with lexical_align.
AlignmentMatrix build_layer_alignment(const std::vector<SecurityControl>& controls,
                                      const ConceptSet& human, const ConceptSet& access,
                                      const ConceptSet& network);

ConceptSet concept_set_from_json_text(const std::string& text);
ConceptSet load_concept_set(const std::string& path);

// Normalization applied to every token before comparison: lowercase plus a
// fixed strip list of suffixes ("ing", "ed", plural "s").
std::string normalize_token(std::string token);

}  // namespace mlag
