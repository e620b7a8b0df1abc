#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "aqn/census.hpp"
#include "aqn/connectivity.hpp"
#include "aqn/cuts.hpp"

namespace aqn {

enum class ReportFormat : std::uint8_t { structured, table };

ReportFormat parse_report_format(std::string_view name);

// One check's outcome.  Serializes to a canonical structured document
// (sorted keys, fixed schema); runtime_ms is the only field excluded from
// the determinism digest.
struct Report {
    static constexpr int kSchemaVersion = 1;

    int schema_version = kSchemaVersion;
    int n = 0;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::string check;
    std::string method;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json violations = nlohmann::json::array();
    double runtime_ms = 0;

    bool pass() const { return violations.empty(); }

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);

    // FNV-1a over the canonical serialization with runtime_ms removed.
    std::string digest() const;
};

std::string emit_report(const Report& report, ReportFormat format);

// Parses a structured report; a schema mismatch names the offending field.
Report load_report(std::string_view bytes);

// Converters from the engines' native result types.
Report make_report(const CensusReport& census, const nlohmann::json& params);
Report make_report(const ConnectivityResult& result, int n, std::uint64_t vertices,
                   std::uint64_t edges, const nlohmann::json& params);
Report make_report(const CutCertificate& cert, const std::string& check, int n, int h,
                   const nlohmann::json& params);

}  // namespace aqn
