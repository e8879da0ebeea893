// Structured and human-readable rendering of results.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "steenrod/bounds.hpp"
#include "steenrod/claims.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/polyaction.hpp"

namespace steenrod {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "1.0.0";

/// Envelope for every command's structured output. Keys serialize sorted.
struct OutputDocument
{
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::string engine_version = kEngineVersion;
    std::optional<double> elapsed_ms;  // only when timing was requested

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

nlohmann::json to_json(const OutputDocument& doc);
/// Throws std::runtime_error on a wrong schema version or missing fields.
OutputDocument document_from_json(const nlohmann::json& j);
std::string serialize(const OutputDocument& doc);
OutputDocument parse_document(const std::string& text);

std::string to_string(const BigInt& x);

nlohmann::json to_json(const MilnorElement& e);
nlohmann::json to_json(const AdmissibleExpansion& e);
nlohmann::json to_json(const PolyClass& f);
nlohmann::json to_json(const BoundReport& r, bool show_superseded);
nlohmann::json to_json(const NontrivialityWitness& w, Prime p, Entry r);
nlohmann::json to_json(const ClaimResult& c);

/// Rows r = 0..r_max of (r, ex(r), ex(r) - ex(r-1)).
nlohmann::json ex_table_json(Prime p, Entry r_max);
nlohmann::json upsilon_json(Prime p, Entry r);

std::string render_bounds(const BoundReport& r, bool show_superseded);
std::string render_ex_table(Prime p, Entry r_max);
std::string render_upsilon(Prime p, Entry r);
std::string render_witness(const NontrivialityWitness& w, Prime p, Entry r);
/// One line per claim: "<id> PASS|FAIL <seconds>s  <anchor>  <statement> [<detail>]".
std::string render_claim(const ClaimResult& c);

}  // namespace steenrod
