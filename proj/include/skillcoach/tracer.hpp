#pragma once

#include <string>
#include <vector>

namespace skillcoach::tracer {

/// Gaussian belief over a learner's expected completion time for one skill.
struct Belief {
    double mean = 0.0;      // seconds
    double variance = 0.0;  // seconds^2, >= 0
};

/// Calibration of one skill's tracker: reference performance endpoints and
/// the two noise terms of the linear-Gaussian model.
struct TracerConfig {
    double process_noise_var = 1.0;
    double obs_noise_var = 1.0;
    double novice_mean = 40.0;
    double expert_mean = 5.0;
    double initial_variance = 1.0;

    void validate() const;  // throws ConfigError

    /// Builds a config from the novice/expert endpoints with the default
    /// noise scaling: observation noise (obs_scale * novice)^2, process
    /// noise (proc_scale * range)^2 and initial variance (init_scale *
    /// range)^2.
    static TracerConfig from_endpoints(double novice_mean, double expert_mean,
                                       double obs_scale = 0.15, double proc_scale = 0.04,
                                       double init_scale = 0.25);
};

/// Named default calibration for one navigation sub-skill.
struct SkillCalibration {
    std::string skill;
    TracerConfig config;
};

/// Expert-demonstration calibration for the three doorway navigation
/// sub-skills: 15 s / 5 s / 10 s expert times against a 40 s novice level.
std::vector<SkillCalibration> navigation_default_calibrations();

/// Inflates the variance with process noise; the mean is unchanged.
Belief predict(const Belief& b, const TracerConfig& cfg);

/// Conjugate Gaussian update with observation y. The posterior variance is
/// strictly smaller than the prior's whenever obs_noise_var is finite.
Belief update(const Belief& b, double y, const TracerConfig& cfg);

/// Normalized proficiency: 1 at expert-level mean, 0 at novice-level mean,
/// linear in between and clipped to [0,1].
double proficiency(const Belief& b, const TracerConfig& cfg);

/// Participant-specific initialization: the first observation of each
/// skill becomes the belief mean; variance starts at initial_variance.
std::vector<Belief> init_beliefs(const std::vector<double>& first_observations,
                                 const std::vector<TracerConfig>& configs);

}  // namespace skillcoach::tracer
