// JSON system configurations. Scalars travel as strings in the exact
// scalar grammar so that configs and reports never pass through floats.

#pragma once

#include "recimap/render.hpp"
#include "recimap/systems.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace recimap {

struct SystemConfig {
    std::string name;
    std::int64_t field_d = 0;
    std::vector<std::string> lengths;
    std::vector<std::size_t> permutation;
    std::string involution_s;
    std::optional<std::vector<std::pair<std::string, std::string>>> zeta;
};

SystemConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SystemConfig& cfg);

SystemConfig load_config(const std::string& path);

// Parses the scalar strings (validating they live in Q(sqrt(field_d)))
// and constructs the system.
ReciprocalSystem build_system(const SystemConfig& cfg);

// Suspension data from the optional zeta block; throws if absent.
SuspensionData build_suspension(const SystemConfig& cfg);

}  // namespace recimap
