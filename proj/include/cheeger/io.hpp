#ifndef CHEEGER_IO_HPP
#define CHEEGER_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cheeger/cheeger.hpp"
#include "cheeger/embedded_graph.hpp"

namespace cheeger {

enum class ComplexFormat { Auto, Json, Text };

struct ComplexDocument {
    std::vector<std::vector<std::string>> facets;
    std::string name;        // optional metadata
    std::string description; // optional metadata
};

// JSON form: {"facets": [[...], ...]} with string or integer labels.
// Text form: one facet per line, whitespace-separated labels, '#' comments,
// blank lines skipped. Throws std::invalid_argument with line/offset info.
ComplexDocument parse_complex_file(const std::string& bytes,
                                   ComplexFormat format = ComplexFormat::Auto);

// JSON object with "adjacency": square symmetric 0/1 array, zero diagonal.
AdjacencyMatrix parse_graph_file(const std::string& bytes);

nlohmann::ordered_json complex_document_to_json(const ComplexDocument& doc);

enum class ReportMode { Human, Json };

// Human mode: aligned table. Json mode: stable field order, rationals as
// {"num","den"}, reals as decimals with 12 significant digits.
std::string render_report(const BoundReport& report, ReportMode mode);

nlohmann::ordered_json report_to_json(const BoundReport& report);

// 12-significant-digit decimal used across all JSON output.
std::string format_real(double x);

} // namespace cheeger

#endif
