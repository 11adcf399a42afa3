#ifndef NSMP_JSON_IO_HPP
#define NSMP_JSON_IO_HPP

#include "nsmp/classifier.hpp"
#include "nsmp/engine.hpp"

#include <json.hpp>

namespace nsmp {

/// Matrices serialize as arrays of arrays of exact rational strings;
/// patterns as arrays of token rows. Both round-trip losslessly.
nlohmann::json matrix_to_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json pattern_to_json(const SignPattern& p);
SignPattern pattern_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const NsmpVerdict& v);
nlohmann::json classification_to_json(const Classification& c);
nlohmann::json summary_to_json(const ClassificationSummary& s);

/// The fixed top-level shape every command emits.
nlohmann::json envelope(const std::string& command, nlohmann::json input, nlohmann::json result,
                        nlohmann::json provenance, std::uint64_t seed);

}  // namespace nsmp

#endif
