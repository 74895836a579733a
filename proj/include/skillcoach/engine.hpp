#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skillcoach/curriculum.hpp"
#include "skillcoach/learner.hpp"
#include "skillcoach/rng.hpp"

namespace skillcoach::engine {

/// Tracker noise scales, relative to each skill's calibration endpoints.
struct TracerScales {
    double obs_noise_scale = 0.15;
    double process_noise_scale = 0.04;
    double initial_variance_scale = 0.25;
};

/// Full experiment description: population size, curriculum complexities,
/// per-skill action budget, policy set and model calibration. Everything
/// random derives from master_seed.
struct ExperimentConfig {
    std::uint64_t master_seed = 42;
    int n_learners = 500;
    std::vector<int> skill_counts{3, 5, 7, 10, 15};
    int budget_per_skill = 50;
    std::vector<curriculum::PolicyKind> policies{curriculum::PolicyKind::uniform,
                                                 curriculum::PolicyKind::greedy,
                                                 curriculum::PolicyKind::adaptive};
    learner::DistributionConfig distributions = learner::DistributionConfig::defaults();
    learner::ModelConstants constants;
    TracerScales tracer;
    double epsilon = 0.1;
    double mastery_threshold = 0.8;
    bool record_traces = false;

    void validate() const;  // throws ConfigError
};

struct ActionRecord {
    int skill = 0;
    double observed_time = 0.0;
    double progress_after = 0.0;  // latent progress of the practiced skill
};

struct EpisodeResult {
    int actions_used = 0;
    bool success = false;
    std::vector<ActionRecord> trace;  // populated only when requested
};

struct SummaryRow {
    curriculum::PolicyKind policy;
    int skill_count = 0;
    double mean_actions = 0.0;
    double std_actions = 0.0;
    double success_rate = 0.0;  // fraction in [0,1]
    bool degenerate = false;    // single-learner sample, std undefined
};

struct SignificanceRow {
    int skill_count = 0;
    std::string comparison;  // e.g. "adaptive_vs_uniform"
    double t = 0.0;
    double p = 1.0;
    double cohens_d = 0.0;
};

struct RawRecord {
    curriculum::PolicyKind policy;
    int skill_count = 0;
    int learner_id = 0;
    int actions_used = 0;
    bool success = false;
};

struct ExperimentReport {
    std::vector<SummaryRow> summary;
    std::vector<SignificanceRow> significance;
    std::vector<RawRecord> raw;
};

/// Builds the adaptive policy's tracker calibration for one learner:
/// expert endpoint = the skill's optimal time, novice endpoint = the
/// novice baseline, noises derived via the configured scales.
std::vector<tracer::TracerConfig> tracker_calibration(const learner::LearnerProfile& profile,
                                                      const TracerScales& scales);

/// Runs one teaching episode: the policy selects, the learner attempts,
/// the policy observes, and an omniscient check stops at latent mastery
/// (every skill's true proficiency >= mastery_threshold). The check runs
/// before the first action, so a pre-mastered learner uses zero actions.
EpisodeResult run_episode(learner::LearnerProfile& profile, curriculum::PolicyState& policy,
                          int budget, double mastery_threshold, Rng& rng,
                          bool record_trace = false);

/// Runs the full experiment grid (skill counts x learners x policies) with
/// a paired design: the same sampled learner is cloned across policies.
/// Each episode owns a seed-derived RNG stream, so the report is
/// byte-identical for a given config regardless of `threads`.
ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads = 1);

/// Aggregation used by both run_experiment and offline re-analysis; raw
/// records must be grouped in their emission order.
std::vector<SummaryRow> aggregate_summary(const std::vector<RawRecord>& raw);
std::vector<SignificanceRow> compute_significance(const std::vector<RawRecord>& raw);

}  // namespace skillcoach::engine
