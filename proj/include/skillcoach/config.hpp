#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "skillcoach/engine.hpp"

namespace skillcoach::config {

/// Parses an experiment configuration. Every key is optional and defaults
/// to the published setup; unknown keys anywhere are rejected so typos
/// fail fast instead of silently running the default.
engine::ExperimentConfig parse_experiment_config(const nlohmann::json& j);
engine::ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Canonical serialization of the effective configuration (defaults
/// filled in, keys sorted). Basis for the manifest hash.
nlohmann::json experiment_config_to_json(const engine::ExperimentConfig& cfg);

/// FNV-1a 64-bit over the canonical config dump; stable across reruns.
std::uint64_t fnv1a64(const std::string& data);
std::string config_hash(const engine::ExperimentConfig& cfg);

}  // namespace skillcoach::config
