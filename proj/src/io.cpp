#include "cheeger/io.hpp"

#include <cctype>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cheeger {

namespace {

std::string label_from_json(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) {
        const long long x = v.get<long long>();
        if (x < 0) throw std::invalid_argument("negative integer vertex label");
        return std::to_string(x);
    }
    throw std::invalid_argument("vertex labels must be strings or non-negative integers");
}

void check_no_duplicates(const std::vector<std::string>& facet, int line) {
    std::set<std::string> seen(facet.begin(), facet.end());
    if (seen.size() != facet.size()) {
        std::ostringstream msg;
        msg << "duplicate vertex within a facet";
        if (line > 0) msg << " at line " << line;
        throw std::invalid_argument(msg.str());
    }
}

ComplexDocument parse_complex_json(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw std::invalid_argument("expected an object with a \"facets\" array");
    ComplexDocument doc;
    doc.name = j.value("name", "");
    doc.description = j.value("description", "");
    for (const auto& f : j["facets"]) {
        if (!f.is_array() || f.empty())
            throw std::invalid_argument("each facet must be a nonempty array");
        std::vector<std::string> facet;
        for (const auto& v : f) facet.push_back(label_from_json(v));
        check_no_duplicates(facet, 0);
        doc.facets.push_back(std::move(facet));
    }
    if (doc.facets.empty())
        throw std::invalid_argument("facet list is empty");
    return doc;
}

ComplexDocument parse_complex_text(const std::string& bytes) {
    ComplexDocument doc;
    std::istringstream in(bytes);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string tok;
        while (ls >> tok) facet.push_back(tok);
        if (facet.empty()) continue;
        check_no_duplicates(facet, lineno);
        doc.facets.push_back(std::move(facet));
    }
    if (doc.facets.empty())
        throw std::invalid_argument("no facets found in text input");
    return doc;
}

} // namespace

ComplexDocument parse_complex_file(const std::string& bytes, ComplexFormat format) {
    if (format == ComplexFormat::Auto) {
        size_t i = 0;
        while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i])))
            ++i;
        format = (i < bytes.size() && bytes[i] == '{') ? ComplexFormat::Json
                                                       : ComplexFormat::Text;
    }
    return format == ComplexFormat::Json ? parse_complex_json(bytes)
                                         : parse_complex_text(bytes);
}

AdjacencyMatrix parse_graph_file(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("adjacency") || !j["adjacency"].is_array())
        throw std::invalid_argument("expected an object with an \"adjacency\" array");
    const auto& rows = j["adjacency"];
    AdjacencyMatrix m;
    m.order = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != m.order)
            throw std::invalid_argument("adjacency matrix is not square");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument("adjacency entries must be integers");
            const int x = v.get<int>();
            if (x != 0 && x != 1)
                throw std::invalid_argument("adjacency entries must be 0 or 1");
            r.push_back(x);
        }
        m.entries.push_back(std::move(r));
    }
    for (int i = 0; i < m.order; ++i) {
        if (m.entries[i][i] != 0)
            throw std::invalid_argument("adjacency matrix has a nonzero diagonal");
        for (int k = i + 1; k < m.order; ++k)
            if (m.entries[i][k] != m.entries[k][i])
                throw std::invalid_argument("adjacency matrix is not symmetric");
    }
    return m;
}

nlohmann::ordered_json complex_document_to_json(const ComplexDocument& doc) {
    nlohmann::ordered_json j;
    if (!doc.name.empty()) j["name"] = doc.name;
    if (!doc.description.empty()) j["description"] = doc.description;
    j["facets"] = doc.facets;
    return j;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

nlohmann::ordered_json rational_to_json(const Rational& r) {
    nlohmann::ordered_json j;
    const auto num = numerator(r), den = denominator(r);
    // emit plain integers when they fit, strings otherwise
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
        j["num"] = num.convert_to<long long>();
    else
        j["num"] = num.str();
    if (den <= std::numeric_limits<long long>::max())
        j["den"] = den.convert_to<long long>();
    else
        j["den"] = den.str();
    return j;
}

nlohmann::ordered_json witness_to_json(const WitnessB& w) {
    nlohmann::ordered_json j;
    j["side_b"] = w.side_b;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : w.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["lhs"] = rational_to_json(c.lhs);
        cj["rhs"] = rational_to_json(c.rhs);
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = w.all_pass;
    return j;
}

} // namespace

nlohmann::ordered_json report_to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json prof;
    prof["dimension"] = r.profile.dimension;
    prof["num_vertices"] = r.profile.num_vertices;
    prof["num_codim1"] = r.profile.num_codim1;
    if (r.profile.degree_D) prof["degree_D"] = *r.profile.degree_D;
    else prof["degree_D"] = nullptr;
    prof["delta_min"] = r.profile.delta_min;
    j["profile"] = std::move(prof);
    j["k"] = r.k;
    j["embedded_order"] = r.embedded_order;
    j["embedded_edges"] = r.embedded_edges;
    j["embedded_connected"] = r.embedded_connected;
    j["lambda"] = format_real(r.lambda);
    if (r.lower_bound) j["lower_bound"] = format_real(*r.lower_bound);
    else j["lower_bound"] = nullptr;
    if (r.exact_cut) {
        nlohmann::ordered_json cut;
        cut["side_a"] = r.exact_cut->side_a;
        cut["crossing_faces"] = r.exact_cut->crossing;
        cut["value"] = rational_to_json(r.exact_cut->value);
        j["exact_H"] = std::move(cut);
    } else {
        j["exact_H"] = nullptr;
    }
    if (r.prt) j["prt_h"] = rational_to_json(*r.prt);
    if (r.witness) j["witness"] = witness_to_json(*r.witness);
    else j["witness"] = nullptr;
    j["equality"] = r.equality;
    j["vacuous"] = r.vacuous;
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json vj;
        vj["name"] = v.name;
        vj["status"] = v.status;
        vj["detail"] = v.detail;
        verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts);
    j["tol"] = format_real(r.tol);
    return j;
}

std::string render_report(const BoundReport& r, ReportMode mode) {
    if (mode == ReportMode::Json) return report_to_json(r).dump(2) + "\n";

    std::ostringstream out;
    auto row = [&](const std::string& key, const std::string& value) {
        out << "  " << key;
        for (size_t i = key.size(); i < 22; ++i) out << ' ';
        out << value << "\n";
    };
    out << "complex profile\n";
    row("dimension n", std::to_string(r.profile.dimension));
    row("|V|", std::to_string(r.profile.num_vertices));
    row("|W|", std::to_string(r.profile.num_codim1));
    row("D", r.profile.degree_D ? std::to_string(*r.profile.degree_D)
                                : std::string("non-constant"));
    row("delta_min", std::to_string(r.profile.delta_min));
    row("k", std::to_string(r.k));
    out << "embedded graph\n";
    row("order", std::to_string(r.embedded_order));
    row("edges", std::to_string(r.embedded_edges));
    row("connected", r.embedded_connected ? "yes" : "no");
    row("lambda", format_real(r.lambda));
    out << "bounds\n";
    if (r.lower_bound) {
        row("bound", format_real(*r.lower_bound));
    } else if (!r.profile.degree_D) {
        row("bound", "not applicable (non-constant D)");
    } else {
        row("bound", "not applicable");
    }
    if (r.exact_cut) {
        row("H", to_string(r.exact_cut->value));
        std::string side = "{";
        for (size_t i = 0; i < r.exact_cut->side_a.size(); ++i) {
            if (i) side += ",";
            side += std::to_string(r.exact_cut->side_a[i]);
        }
        side += "}";
        row("minimizing A", side);
        row("crossing faces", std::to_string(r.exact_cut->crossing));
    } else {
        row("H", "not computed (over vertex budget)");
    }
    if (r.prt) row("prt_h", to_string(*r.prt));
    row("equality", r.equality ? "yes" : "no");
    if (r.vacuous) row("note", "bound vacuously satisfied (disconnected embedded graph)");
    out << "verdicts\n";
    for (const auto& v : r.verdicts) row(v.name, v.status + "  (" + v.detail + ")");
    return out.str();
}

} // namespace cheeger
