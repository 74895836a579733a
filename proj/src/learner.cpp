#include "skillcoach/learner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "skillcoach/errors.hpp"

namespace skillcoach::learner {

namespace {

void check(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

void validate_mixture(const std::vector<MixtureComponent>& mixture, const std::string& name) {
    check(!mixture.empty(), name + ": mixture must have at least one component");
    double total = 0.0;
    for (const auto& c : mixture) {
        check(c.weight >= 0.0, name + ": negative mixture weight");
        check(c.range.lo <= c.range.hi, name + ": range lo > hi");
        check(c.range.lo >= 0.0, name + ": negative range");
        total += c.weight;
    }
    check(std::abs(total - 1.0) <= 1e-9, name + ": mixture weights must sum to 1");
}

}  // namespace

void SkillParams::validate() const {
    check(tau_star > 0.0, "tau_star must be > 0");
    check(multiplier > 1.0, "multiplier must be > 1");
    check(variance_factor > 0.0, "variance_factor must be > 0");
    check(learning_rate > 0.0 && learning_rate < 1.0, "learning_rate must be in (0,1)");
    check(forgetting_rate >= 0.0, "forgetting_rate must be >= 0");
    check(fatigue_threshold >= 1, "fatigue_threshold must be >= 1");
}

void ModelConstants::validate() const {
    check(lambda_fatigue >= 0.0, "lambda_fatigue must be >= 0");
    check(lambda_exp >= 0.0, "lambda_exp must be >= 0");
    check(gamma_dim >= 0.0 && gamma_dim <= 1.0, "gamma_dim must be in [0,1]");
    check(min_time_floor > 0.0, "min_time_floor must be > 0");
    check(min_learning_increment > 0.0, "min_learning_increment must be > 0");
}

DistributionConfig DistributionConfig::defaults() {
    DistributionConfig d;
    d.tau_star = {{0.30, {1.0, 5.0}}, {0.30, {5.0, 12.0}}, {0.40, {12.0, 25.0}}};
    d.multiplier = {{0.20, {1.0, 2.0}}, {0.30, {2.0, 5.0}}, {0.50, {5.0, 15.0}}};
    d.variance_factor = {{0.30, {0.05, 0.2}}, {0.70, {0.3, 1.2}}};
    d.learning_rate = {{0.25, {0.2, 0.5}}, {0.25, {0.01, 0.08}}, {0.50, {0.08, 0.25}}};
    d.forgetting_rate = {0.02, 0.1};
    d.fatigue_threshold_lo = 2;
    d.fatigue_threshold_hi = 20;
    return d;
}

void DistributionConfig::validate() const {
    validate_mixture(tau_star, "tau_star");
    validate_mixture(multiplier, "multiplier");
    validate_mixture(variance_factor, "variance_factor");
    validate_mixture(learning_rate, "learning_rate");
    check(forgetting_rate.lo <= forgetting_rate.hi, "forgetting_rate: range lo > hi");
    check(forgetting_rate.lo >= 0.0, "forgetting_rate: negative range");
    check(fatigue_threshold_lo >= 1, "fatigue_threshold: lo must be >= 1");
    check(fatigue_threshold_lo <= fatigue_threshold_hi, "fatigue_threshold: lo > hi");
}

double sample_mixture(const std::vector<MixtureComponent>& mixture, Rng& rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (const auto& c : mixture) {
        cumulative += c.weight;
        if (u < cumulative) return rng.uniform(c.range.lo, c.range.hi);
    }
    const auto& last = mixture.back();
    return rng.uniform(last.range.lo, last.range.hi);
}

LearnerProfile sample_profile(Rng& rng, int n_skills, const DistributionConfig& dist,
                              const ModelConstants& constants) {
    if (n_skills < 1) throw ConfigError("n_skills must be >= 1");
    dist.validate();
    constants.validate();

    LearnerProfile profile;
    profile.constants = constants;
    profile.skills.reserve(static_cast<std::size_t>(n_skills));
    profile.states.assign(static_cast<std::size_t>(n_skills), LearnerSkillState{});
    for (int i = 0; i < n_skills; ++i) {
        SkillParams p;
        p.tau_star = sample_mixture(dist.tau_star, rng);
        // multiplier == 1 would collapse the novice/expert range to zero
        p.multiplier = std::max(sample_mixture(dist.multiplier, rng), 1.0 + 1e-6);
        p.variance_factor = sample_mixture(dist.variance_factor, rng);
        p.learning_rate = sample_mixture(dist.learning_rate, rng);
        p.forgetting_rate = rng.uniform(dist.forgetting_rate.lo, dist.forgetting_rate.hi);
        p.fatigue_threshold = rng.uniform_int(dist.fatigue_threshold_lo, dist.fatigue_threshold_hi);
        p.validate();
        profile.skills.push_back(p);
    }
    return profile;
}

Baseline baseline(const SkillParams& params) {
    return {params.tau_star * params.multiplier, params.tau_star * params.variance_factor};
}

double current_mean(const SkillParams& params, const ModelConstants& constants,
                    const LearnerSkillState& state, int step) {
    const auto [mu_hat, sigma_hat] = baseline(params);
    (void)sigma_hat;
    const double range = mu_hat - params.tau_star;
    const double learn_gain = state.progress * range;
    const int delta_t = state.last_practice_step ? step - *state.last_practice_step : 0;
    const double forget_penalty = params.forgetting_rate * delta_t * range;
    const double over_practice = std::max(0, state.attempts - params.fatigue_threshold);
    const double fatigue_penalty = constants.lambda_fatigue * over_practice * range;
    const double raw = mu_hat - learn_gain + forget_penalty + fatigue_penalty;
    return std::max(params.tau_star, std::min(raw, mu_hat));
}

double current_std(const SkillParams& params, const ModelConstants& constants,
                   const LearnerSkillState& state) {
    const auto [mu_hat, sigma_hat] = baseline(params);
    (void)mu_hat;
    const double experience = std::min(0.5, constants.lambda_exp * state.attempts);
    return std::max(0.1 * params.tau_star, sigma_hat * (1.0 - experience));
}

double attempt(LearnerProfile& profile, std::size_t skill, int step, Rng& rng) {
    if (skill >= profile.skills.size())
        throw std::invalid_argument("attempt: skill index out of range");
    const SkillParams& params = profile.skills[skill];
    LearnerSkillState& state = profile.states[skill];

    // Performance is sampled from the pre-update state.
    const double mean = current_mean(params, profile.constants, state, step);
    const double stddev = current_std(params, profile.constants, state);
    const double observed = std::max(profile.constants.min_time_floor, rng.normal(mean, stddev));

    const double increment =
        std::max(profile.constants.min_learning_increment,
                 params.learning_rate * (1.0 - profile.constants.gamma_dim * state.progress));
    state.progress = std::min(1.0, state.progress + increment);
    state.attempts += 1;
    state.last_practice_step = step;
    return observed;
}

double latent_proficiency(const LearnerProfile& profile, std::size_t skill) {
    const SkillParams& params = profile.skills[skill];
    const auto [mu_hat, sigma_hat] = baseline(params);
    (void)sigma_hat;
    const double range = mu_hat - params.tau_star;
    const double learning_mean =
        std::max(params.tau_star, mu_hat - profile.states[skill].progress * range);
    return std::clamp((mu_hat - learning_mean) / range, 0.0, 1.0);
}

bool latent_mastered(const LearnerProfile& profile, double threshold) {
    for (std::size_t k = 0; k < profile.n_skills(); ++k)
        if (latent_proficiency(profile, k) < threshold) return false;
    return true;
}

}  // namespace skillcoach::learner
