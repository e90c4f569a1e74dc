#pragma once
// Run reports and the on-disk report cache.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace syzygy::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "syzygy-0.1.0";

struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::string anchor;
    nlohmann::json verdicts = nlohmann::json::object();  // name -> bool
    nlohmann::json payload = nlohmann::json::object();
    std::string error;  // computation failure, if any

    bool pass() const;
};

/// Anchor id -> short description. Every report must carry one of these.
const std::map<std::string, std::string>& anchor_table();
bool anchor_registered(const std::string& anchor);

nlohmann::json to_json(const Report& r);
/// Throws std::invalid_argument on a malformed or unregistered report.
Report report_from_json(const nlohmann::json& j);
/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string serialize(const Report& r);

std::string sha256_hex(const std::string& bytes);
std::string cache_key(const std::string& command, const nlohmann::json& params, std::uint64_t seed,
                      std::uint32_t prime);

/// SYZYGY_CACHE_DIR if set and nonempty.
std::optional<std::filesystem::path> env_cache_dir();

class ReportCache {
public:
    explicit ReportCache(std::filesystem::path dir);

    /// Serialized report bytes on a hit. Entries that fail to parse or whose
    /// stored key differs are removed and reported as a miss.
    std::optional<std::string> lookup(const std::string& key);
    /// Write to a temporary file in the cache directory, then rename.
    void store(const std::string& key, const std::string& bytes);

    std::filesystem::path path_for(const std::string& key) const;
    std::size_t evictions() const noexcept { return evictions_; }

private:
    std::filesystem::path dir_;
    std::size_t evictions_ = 0;
};

}  // namespace syzygy::cli
