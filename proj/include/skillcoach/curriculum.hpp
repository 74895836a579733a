#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skillcoach/rng.hpp"
#include "skillcoach/tracer.hpp"

namespace skillcoach::curriculum {

enum class PolicyKind { uniform, greedy, adaptive };

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);  // throws ConfigError

/// Per-learner bookkeeping for one curriculum policy. Only the fields
/// relevant to `kind` are consulted:
///   uniform  — round-robin cursor
///   greedy   — last observed time per skill, normalized by tau_star
///   adaptive — per-skill Gaussian beliefs and tracker calibration
struct PolicyState {
    PolicyKind kind = PolicyKind::uniform;

    std::size_t cursor = 0;

    std::vector<std::optional<double>> last_perf;
    std::vector<double> tau_star;

    std::vector<tracer::Belief> beliefs;
    std::vector<tracer::TracerConfig> tracer_configs;
    std::vector<bool> observed_once;

    double epsilon = 0.1;
    double mastery_threshold = 0.8;
};

PolicyState make_uniform_policy(std::size_t n_skills);
PolicyState make_greedy_policy(std::vector<double> tau_star, double epsilon = 0.1);
PolicyState make_adaptive_policy(std::vector<tracer::TracerConfig> configs,
                                 double epsilon = 0.1, double mastery_threshold = 0.8);

/// Coach-side proficiency estimate for one skill (adaptive only).
/// Unobserved skills score 0 (novice prior).
double estimated_proficiency(const PolicyState& state, std::size_t skill);

/// Picks the next skill to practice.
///   uniform  — fixed round-robin order, no randomness.
///   greedy   — with prob epsilon a uniform random skill; otherwise the
///              worst normalized recent time. Never-practiced skills rank
///              worst; ties break to the lowest index.
///   adaptive — with prob epsilon a uniform random skill among those below
///              the mastery threshold; otherwise the unmastered skill with
///              the lowest estimated proficiency. With every skill at or
///              above threshold, the overall lowest-proficiency skill.
std::size_t select(PolicyState& state, std::size_t n_skills, Rng& rng);

/// Feeds back the observed time for the skill just practiced. Uniform
/// ignores it; greedy caches y/tau_star; adaptive inflates every belief
/// with process noise, then either initializes the practiced skill's
/// belief from its first observation or applies the Gaussian update.
void observe(PolicyState& state, std::size_t skill, double y);

/// True iff every skill's estimated proficiency reaches the threshold.
/// Only meaningful for the adaptive policy; throws otherwise.
bool estimated_mastered(const PolicyState& state);

}  // namespace skillcoach::curriculum
