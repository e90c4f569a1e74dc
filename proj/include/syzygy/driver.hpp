#pragma once
// Command-line driver: subcommands, report persistence and the exit-code contract
// (0 all checks pass, 1 a check failed, 2 usage error).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzygy/exactla.hpp"
#include "syzygy/report.hpp"

namespace syzygy::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct RunResult {
    int exit_code = kUsage;
    std::string bytes;       // serialized report, empty on usage errors
    bool from_cache = false;
};

/// args excludes the program name.
RunResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Parses "a..b" (or a single integer) into an inclusive range.
std::pair<long, long> parse_range(const std::string& s);

/// Seeded quartic and hyperelliptic genus-3 samples for the K_{0,2} comparison.
/// Even-indexed quartic samples put E on a pair of split lines.
nlohmann::json secant_suite(std::uint32_t p, long quartics, long hyperelliptic, std::uint64_t seed);

}  // namespace syzygy::cli
