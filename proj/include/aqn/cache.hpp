#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "aqn/report.hpp"

namespace aqn {

// One report document per (check, n, params) key, stored under a cache
// directory.  Advisory: safe to delete, never required for correctness.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    static std::string key_for(const std::string& check, int n, const nlohmann::json& params);

    std::optional<Report> lookup(const std::string& key) const;
    void store(const std::string& key, const Report& report) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace aqn
