#pragma once

#include "devissage/algebra.hpp"
#include "devissage/instance.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace devissage {

struct InstanceOptions {
    std::optional<std::size_t> dim_bound; // default depends on dim A
    std::size_t cap = 1'000'000;
    std::uint64_t seed = 0;
    std::size_t samples = 200;
};

// Parsed form of the JSON instance description:
// { "name", "p", "basis": [labels],
//   "mul": [[i,j,k,c], ...] (sparse structure constants, 0-based),
//   "unit": [c, ...], "ideal": [[c, ...], ...],
//   "options": { "dim_bound", "cap", "seed", "samples" } }
struct InstanceConfig {
    std::string name;
    RawAlgebra algebra;
    std::vector<Vec> ideal;
    InstanceOptions options;
};

InstanceConfig parse_config(const std::string& path);
InstanceConfig parse_config_json(const nlohmann::json& j);

// dim_bound default: 3 for algebras of dim <= 5, 2 otherwise.
std::size_t effective_dim_bound(const InstanceConfig& cfg);

// Builds the validated instance; algebra failures surface as AlgebraInvalid
// and ideal failures as IdealInvalid.
Instance instance_from_config(const InstanceConfig& cfg);

} // namespace devissage
