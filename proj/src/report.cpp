#include "syzygy/report.hpp"

#include <openssl/sha.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace syzygy::cli {

bool Report::pass() const {
    if (!error.empty()) return false;
    for (const auto& [name, v] : verdicts.items())
        if (!v.is_boolean() || !v.get<bool>()) return false;
    return true;
}

const std::map<std::string, std::string>& anchor_table() {
    static const std::map<std::string, std::string> t = {
        {"koszul.betti", "graded Betti table of a section ring via Koszul cohomology"},
        {"koszul.prym_green", "predicted Prym-canonical Betti table in odd genus"},
        {"koszul.secant", "K_{0,2} nonvanishing against the secant condition at genus 3"},
        {"lattice.certificate", "bounded lattice search certificate"},
        {"moduli.classes", "Chern class recursions against closed forms"},
        {"moduli.picid", "Syz = Sec + i Hur in span(lambda, sum psi)"},
        {"moduli.dims", "fibre dimension count"},
        {"curve.torsion_scan", "h1 of twisted 2-torsion classes on a hyperelliptic curve"},
    };
    return t;
}

bool anchor_registered(const std::string& anchor) { return anchor_table().count(anchor) > 0; }

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["command"] = r.command;
    j["params"] = r.params;
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    j["anchor"] = r.anchor;
    j["verdicts"] = r.verdicts;
    j["payload"] = r.payload;
    j["pass"] = r.pass();
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("report: not a JSON object");
    if (j.value("schema", -1) != kSchemaVersion) throw std::invalid_argument("report: unsupported schema version");
    Report r;
    try {
        r.command = j.at("command").get<std::string>();
        r.params = j.at("params");
        r.prime = j.at("prime").get<std::uint32_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.anchor = j.at("anchor").get<std::string>();
        r.verdicts = j.at("verdicts");
        r.payload = j.at("payload");
        r.error = j.value("error", std::string());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    if (!anchor_registered(r.anchor)) throw std::invalid_argument("report: unregistered anchor '" + r.anchor + "'");
    if (!r.verdicts.is_object()) throw std::invalid_argument("report: verdicts must be an object");
    return r;
}

std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
    std::ostringstream os;
    for (unsigned char c : md) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
    return os.str();
}

std::string cache_key(const std::string& command, const nlohmann::json& params, std::uint64_t seed,
                      std::uint32_t prime) {
    const nlohmann::json k = {{"command", command}, {"params", params}, {"seed", seed},
                              {"prime", prime},     {"code", kCodeVersion}, {"schema", kSchemaVersion}};
    return sha256_hex(k.dump());
}

std::optional<std::filesystem::path> env_cache_dir() {
    const char* v = std::getenv("SYZYGY_CACHE_DIR");
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::filesystem::path(v);
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ReportCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> ReportCache::lookup(const std::string& key) {
    const auto path = path_for(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const auto entry = nlohmann::json::parse(buf.str());
        const auto bytes = entry.at("report").get<std::string>();
        if (entry.at("key").get<std::string>() != key || entry.at("sha256").get<std::string>() != sha256_hex(bytes))
            throw std::runtime_error("stale entry");
        report_from_json(nlohmann::json::parse(bytes));
        return bytes;
    } catch (const std::exception&) {
        std::filesystem::remove(path, ec);
        ++evictions_;
        return std::nullopt;
    }
}

void ReportCache::store(const std::string& key, const std::string& bytes) {
    const nlohmann::json entry = {{"key", key}, {"sha256", sha256_hex(bytes)}, {"report", bytes}};
    std::random_device rd;
    const auto tmp = dir_ / (key + ".tmp." + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
        out << entry.dump();
        out.flush();
        if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path_for(key));
}

}  // namespace syzygy::cli
