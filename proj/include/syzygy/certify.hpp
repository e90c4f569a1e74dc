#pragma once
// Lattice lemmas as bounded enumerations with a verdict certificate.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzygy/lattice.hpp"

namespace syzygy::lattice {

struct BoundCheck {
    std::string what;
    std::int64_t lhs;
    std::int64_t rhs;
    bool holds;
};

struct Certificate {
    std::string lemma_id;
    std::map<std::string, long> params;
    std::string search_bounds;
    std::uint64_t candidates_checked = 0;
    std::uint64_t candidates_expected = 0;
    bool pass = false;
    std::optional<LatticeClass> counterexample;
    std::string lattice_name;
    std::vector<BoundCheck> bounds;
};

using Params = std::map<std::string, long>;

const std::vector<std::string>& lemma_ids();

/// Runs one lemma at one parameter point. Throws std::invalid_argument on an
/// unknown lemma or out-of-range params.
Certificate certify(const std::string& lemma_id, const Params& params);

/// Parameter points of the default grid for a lemma: odd g <= 41 with
/// 1 <= p <= 20 for the theta lemmas, even g <= 40 with p <= 20 for xi,
/// odd 11 <= g <= 41 for the Nikulin lemmas.
std::vector<Params> default_grid(const std::string& lemma_id);

nlohmann::json to_json(const Certificate& c);

}  // namespace syzygy::lattice
