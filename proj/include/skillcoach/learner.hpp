#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skillcoach/rng.hpp"

namespace skillcoach::learner {

/// Ground-truth parameters of one skill for one simulated learner.
///
/// The baseline (novice) performance is tau_star * multiplier and shrinks
/// toward tau_star as learning progress accumulates.
struct SkillParams {
    double tau_star = 1.0;        ///< optimal expert completion time, seconds
    double multiplier = 2.0;      ///< initial incompetence factor, > 1
    double variance_factor = 0.5; ///< baseline noise magnitude relative to tau_star
    double learning_rate = 0.1;   ///< progress gain per attempt, in (0,1)
    double forgetting_rate = 0.05;///< performance decay per non-practice step
    int fatigue_threshold = 10;   ///< attempts before over-practice penalties

    void validate() const;  // throws ConfigError on violated invariants
};

/// Model-wide constants shared by all skills of a learner.
/// min_time_floor and min_learning_increment are fixed by the model
/// equations (0.1 s and 0.01); the remaining rates are configurable.
struct ModelConstants {
    double lambda_fatigue = 0.05;
    double lambda_exp = 0.05;
    double gamma_dim = 1.0;
    double min_time_floor = 0.1;
    double min_learning_increment = 0.01;

    void validate() const;
};

/// Evolving per-skill state. Progress is monotone non-decreasing and
/// attempts advance by exactly one per practice attempt.
struct LearnerSkillState {
    double progress = 0.0;
    int attempts = 0;
    std::optional<int> last_practice_step;  // nullopt = never practiced
};

struct LearnerProfile {
    std::vector<SkillParams> skills;
    ModelConstants constants;
    std::vector<LearnerSkillState> states;  // index-aligned with skills

    std::size_t n_skills() const { return skills.size(); }
};

struct UniformRange {
    double lo = 0.0;
    double hi = 1.0;
};

struct MixtureComponent {
    double weight = 1.0;
    UniformRange range;
};

/// Sampling distributions for learner parameters. Defaults reproduce the
/// published population: a 30/30/40 easy/medium/hard split for expert
/// times, 20/30/50 for initial multipliers, 30/70 for variance factors and
/// 25/25/50 fast/slow/average for learning rates.
struct DistributionConfig {
    std::vector<MixtureComponent> tau_star;
    std::vector<MixtureComponent> multiplier;
    std::vector<MixtureComponent> variance_factor;
    std::vector<MixtureComponent> learning_rate;
    UniformRange forgetting_rate{0.02, 0.1};
    int fatigue_threshold_lo = 2;
    int fatigue_threshold_hi = 20;

    static DistributionConfig defaults();
    void validate() const;  // throws ConfigError
};

/// Draws one value from a uniform mixture: one uniform selects the
/// component by cumulative weight, a second picks the value in its range.
double sample_mixture(const std::vector<MixtureComponent>& mixture, Rng& rng);

/// Samples a fresh learner profile. Draw order per skill is fixed
/// (tau_star, multiplier, variance_factor, learning_rate, forgetting_rate,
/// fatigue_threshold) so that a given seed always yields the same profile.
LearnerProfile sample_profile(Rng& rng, int n_skills, const DistributionConfig& dist,
                              const ModelConstants& constants = {});

/// Baseline novice performance: mean tau_star * multiplier and standard
/// deviation tau_star * variance_factor.
struct Baseline {
    double mu_hat = 0.0;
    double sigma_hat = 0.0;
};
Baseline baseline(const SkillParams& params);

/// Expected completion time at a global step. Starts from the novice
/// baseline, subtracts the learning improvement and adds forgetting and
/// fatigue penalties; clamped to [tau_star, mu_hat] so performance never
/// beats the expert nor degrades past the untrained baseline.
double current_mean(const SkillParams& params, const ModelConstants& constants,
                    const LearnerSkillState& state, int step);

/// Performance noise: shrinks with experience down to half the baseline,
/// floored at 0.1 * tau_star.
double current_std(const SkillParams& params, const ModelConstants& constants,
                   const LearnerSkillState& state);

/// One practice attempt: samples the observed time from the pre-update
/// state (floored at min_time_floor), then applies the progress update,
/// increments the attempt count and records the practice step. Mutates the
/// profile's state in place and returns the observed time.
double attempt(LearnerProfile& profile, std::size_t skill, int step, Rng& rng);

/// Ground-truth proficiency in [0,1]: the novice/expert mapping of the
/// learning-only expected time (elapsed-time and fatigue effects excluded,
/// they are transient). Equals the clipped learning progress.
double latent_proficiency(const LearnerProfile& profile, std::size_t skill);

/// True iff every skill's latent proficiency reaches the threshold.
bool latent_mastered(const LearnerProfile& profile, double threshold);

}  // namespace skillcoach::learner
