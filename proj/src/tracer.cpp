#include "skillcoach/tracer.hpp"

#include <algorithm>
#include <cmath>

#include "skillcoach/errors.hpp"

namespace skillcoach::tracer {

void TracerConfig::validate() const {
    if (!(novice_mean > expert_mean) || !(expert_mean > 0.0))
        throw ConfigError("tracer: requires novice_mean > expert_mean > 0");
    if (!(process_noise_var >= 0.0) || !(obs_noise_var > 0.0) || !(initial_variance > 0.0))
        throw ConfigError("tracer: noise variances must be positive");
}

TracerConfig TracerConfig::from_endpoints(double novice_mean, double expert_mean,
                                          double obs_scale, double proc_scale,
                                          double init_scale) {
    TracerConfig cfg;
    cfg.novice_mean = novice_mean;
    cfg.expert_mean = expert_mean;
    const double range = novice_mean - expert_mean;
    cfg.obs_noise_var = (obs_scale * novice_mean) * (obs_scale * novice_mean);
    cfg.process_noise_var = (proc_scale * range) * (proc_scale * range);
    cfg.initial_variance = (init_scale * range) * (init_scale * range);
    cfg.validate();
    return cfg;
}

std::vector<SkillCalibration> navigation_default_calibrations() {
    return {
        {"navigate_to_door", TracerConfig::from_endpoints(40.0, 15.0)},
        {"open_door", TracerConfig::from_endpoints(40.0, 5.0)},
        {"enter_room", TracerConfig::from_endpoints(40.0, 10.0)},
    };
}

Belief predict(const Belief& b, const TracerConfig& cfg) {
    return {b.mean, b.variance + cfg.process_noise_var};
}

Belief update(const Belief& b, double y, const TracerConfig& cfg) {
    if (!std::isfinite(y)) throw std::invalid_argument("tracer update: non-finite observation");
    const double gain = b.variance / (b.variance + cfg.obs_noise_var);
    return {b.mean + gain * (y - b.mean), (1.0 - gain) * b.variance};
}

double proficiency(const Belief& b, const TracerConfig& cfg) {
    const double score = (cfg.novice_mean - b.mean) / (cfg.novice_mean - cfg.expert_mean);
    return std::clamp(score, 0.0, 1.0);
}

std::vector<Belief> init_beliefs(const std::vector<double>& first_observations,
                                 const std::vector<TracerConfig>& configs) {
    if (first_observations.size() != configs.size())
        throw ConfigError("init_beliefs: one first observation required per skill");
    std::vector<Belief> beliefs;
    beliefs.reserve(configs.size());
    for (std::size_t k = 0; k < configs.size(); ++k)
        beliefs.push_back({first_observations[k], configs[k].initial_variance});
    return beliefs;
}

}  // namespace skillcoach::tracer
