#include "aqn/cache.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace aqn {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResultCache::key_for(const std::string& check, int n,
                                 const nlohmann::json& params) {
    nlohmann::json key;
    key["check"] = check;
    key["n"] = n;
    key["params"] = params;
    key["schema_version"] = Report::kSchemaVersion;
    const std::string canon = key.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << check << "-n" << n << "-" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::optional<Report> ResultCache::lookup(const std::string& key) const {
    const auto path = dir_ / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_report(buf.str());
    } catch (const ParseError&) {
        return std::nullopt;  // stale or corrupt entry: recompute
    }
}

void ResultCache::store(const std::string& key, const Report& report) const {
    const auto path = dir_ / (key + ".json");
    std::ofstream out(path, std::ios::trunc);
    out << emit_report(report, ReportFormat::structured);
}

}  // namespace aqn
