#include "nsmp/json_io.hpp"

#include <sstream>

namespace nsmp {

using nlohmann::json;

json matrix_to_json(const RationalMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(format_rational(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix json must be a nonempty array");
    std::size_t rows = j.size();
    std::size_t cols = j[0].size();
    RationalMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw ParseError("ragged matrix json");
        for (std::size_t c = 0; c < cols; ++c)
            a.at(i, c) = parse_rational(j[i][c].get<std::string>());
    }
    return a;
}

json pattern_to_json(const SignPattern& p) {
    json rows = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) row += ' ';
            row += sign_char(p.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SignPattern pattern_from_json(const json& j) {
    std::ostringstream text;
    for (const auto& row : j) text << row.get<std::string>() << '\n';
    return parse_pattern(text.str());
}

json verdict_to_json(const NsmpVerdict& v) {
    json out{{"property", property_name(v.property)},
             {"outcome", v.has_property() ? "HasProperty" : "LacksProperty"},
             {"nullity", v.nullity}};
    if (v.witness) out["witness"] = matrix_to_json(*v.witness);
    return out;
}

json classification_to_json(const Classification& c) {
    json out{{"allow", to_string(c.allow_verdict)},
             {"require", to_string(c.require_verdict)},
             {"provenance", c.provenance}};
    if (c.refutation) {
        out["witness"] = {{"realization", matrix_to_json(c.refutation->realization)},
                          {"solution", matrix_to_json(c.refutation->witness)}};
    }
    return out;
}

json summary_to_json(const ClassificationSummary& s) {
    json rows = json::array();
    for (const auto& row : s.rows) {
        json r = {{"pattern", pattern_to_json(row.pattern)},
                  {"canonical", pattern_to_json(row.canonical)},
                  {"orbit_size", row.orbit_size}};
        json cls = classification_to_json(row.classification);
        r.update(cls);
        rows.push_back(std::move(r));
    }
    json counts = json::array();
    for (const auto& [key, count] : s.verdict_counts)
        counts.push_back({{"allow", to_string(key.first)},
                          {"require", to_string(key.second)},
                          {"count", count}});
    json rules = json::object();
    for (const auto& [tag, count] : s.rule_counts) rules[tag] = count;
    return json{{"n", s.n},
                {"total_patterns", s.total_patterns},
                {"rows", std::move(rows)},
                {"verdict_counts", std::move(counts)},
                {"rule_counts", std::move(rules)}};
}

json envelope(const std::string& command, json input, json result, json provenance,
              std::uint64_t seed) {
    return json{{"command", command},
                {"input", std::move(input)},
                {"result", std::move(result)},
                {"provenance", std::move(provenance)},
                {"seed", seed}};
}

}  // namespace nsmp
