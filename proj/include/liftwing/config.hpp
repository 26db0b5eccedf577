#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "liftwing/optimizer.hpp"
#include "liftwing/trim.hpp"

namespace liftwing {

struct GridSpec {
    double gamma_max = 50.0;
    double alpha_max = 18.0;
    double gamma_step = 1.0;
    double alpha_step = 1.0;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Everything the CLI runs from. Loaded from one JSON document whose field names carry
/// their units (mass_kg, capacity_As, ...). Keys absent from the document keep their
/// defaults; unknown keys are an error.
struct RunConfig {
    ModelBundle bundle;
    GridSpec grid_spec;
    EndpointConvention endpoint_convention = EndpointConvention::FromStep;
    std::string thrust_note;
    std::string torque_note;

    SweepGrid grid() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig default_config();

/// Throws Error(ConfigError) on malformed or unknown keys and Error(InvalidModel) when a
/// component invariant fails.
RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const RunConfig& config);

RunConfig load_config(const std::filesystem::path& path);
void save_config(const RunConfig& config, const std::filesystem::path& path);

nlohmann::json surrogate_to_json(const PolySurrogate& s, const std::string& note = {});
nlohmann::json esc_to_json(const EscCurrentModel& m);
nlohmann::json aero_to_json(const LinearAeroModel& m);

} // namespace liftwing
