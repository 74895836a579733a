#include "skillcoach/curriculum.hpp"

#include <limits>
#include <stdexcept>

#include "skillcoach/errors.hpp"

namespace skillcoach::curriculum {

std::string to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::uniform: return "uniform";
        case PolicyKind::greedy: return "greedy";
        case PolicyKind::adaptive: return "adaptive";
    }
    return "unknown";
}

PolicyKind policy_kind_from_string(const std::string& name) {
    if (name == "uniform") return PolicyKind::uniform;
    if (name == "greedy") return PolicyKind::greedy;
    if (name == "adaptive") return PolicyKind::adaptive;
    throw ConfigError("unknown policy kind: '" + name + "'");
}

PolicyState make_uniform_policy(std::size_t n_skills) {
    (void)n_skills;
    PolicyState state;
    state.kind = PolicyKind::uniform;
    return state;
}

PolicyState make_greedy_policy(std::vector<double> tau_star, double epsilon) {
    PolicyState state;
    state.kind = PolicyKind::greedy;
    state.last_perf.assign(tau_star.size(), std::nullopt);
    state.tau_star = std::move(tau_star);
    state.epsilon = epsilon;
    return state;
}

PolicyState make_adaptive_policy(std::vector<tracer::TracerConfig> configs, double epsilon,
                                 double mastery_threshold) {
    PolicyState state;
    state.kind = PolicyKind::adaptive;
    state.beliefs.reserve(configs.size());
    for (const auto& cfg : configs)
        state.beliefs.push_back({cfg.novice_mean, cfg.initial_variance});
    state.observed_once.assign(configs.size(), false);
    state.tracer_configs = std::move(configs);
    state.epsilon = epsilon;
    state.mastery_threshold = mastery_threshold;
    return state;
}

double estimated_proficiency(const PolicyState& state, std::size_t skill) {
    return tracer::proficiency(state.beliefs[skill], state.tracer_configs[skill]);
}

namespace {

std::size_t random_index(Rng& rng, std::size_t n) {
    auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
    return idx >= n ? n - 1 : idx;
}

std::size_t greedy_pick(const PolicyState& state, std::size_t n_skills) {
    // Never-practiced skills rank worst (selected first), lowest index wins ties.
    std::size_t best = 0;
    double worst_time = -std::numeric_limits<double>::infinity();
    bool found_unpracticed = false;
    for (std::size_t k = 0; k < n_skills; ++k) {
        if (!state.last_perf[k]) {
            if (!found_unpracticed) {
                found_unpracticed = true;
                best = k;
            }
            continue;
        }
        if (found_unpracticed) continue;
        if (*state.last_perf[k] > worst_time) {
            worst_time = *state.last_perf[k];
            best = k;
        }
    }
    return best;
}

std::size_t adaptive_pick(const PolicyState& state, std::size_t n_skills, Rng& rng) {
    std::vector<std::size_t> unmastered;
    unmastered.reserve(n_skills);
    for (std::size_t k = 0; k < n_skills; ++k)
        if (estimated_proficiency(state, k) < state.mastery_threshold) unmastered.push_back(k);

    if (unmastered.empty()) {
        std::size_t best = 0;
        double lowest = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n_skills; ++k) {
            const double score = estimated_proficiency(state, k);
            if (score < lowest) {
                lowest = score;
                best = k;
            }
        }
        return best;
    }

    if (rng.uniform() < state.epsilon) return unmastered[random_index(rng, unmastered.size())];

    std::size_t best = unmastered.front();
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t k : unmastered) {
        const double score = estimated_proficiency(state, k);
        if (score < lowest) {
            lowest = score;
            best = k;
        }
    }
    return best;
}

}  // namespace

std::size_t select(PolicyState& state, std::size_t n_skills, Rng& rng) {
    if (n_skills == 0) throw std::invalid_argument("select: n_skills must be >= 1");
    switch (state.kind) {
        case PolicyKind::uniform: {
            const std::size_t pick = state.cursor % n_skills;
            ++state.cursor;
            return pick;
        }
        case PolicyKind::greedy: {
            if (rng.uniform() < state.epsilon) return random_index(rng, n_skills);
            return greedy_pick(state, n_skills);
        }
        case PolicyKind::adaptive:
            return adaptive_pick(state, n_skills, rng);
    }
    throw std::logic_error("select: unreachable policy kind");
}

void observe(PolicyState& state, std::size_t skill, double y) {
    switch (state.kind) {
        case PolicyKind::uniform:
            return;
        case PolicyKind::greedy:
            if (skill >= state.last_perf.size())
                throw std::invalid_argument("observe: skill index out of range");
            state.last_perf[skill] = y / state.tau_star[skill];
            return;
        case PolicyKind::adaptive: {
            if (skill >= state.beliefs.size())
                throw std::invalid_argument("observe: skill index out of range");
            for (std::size_t k = 0; k < state.beliefs.size(); ++k)
                state.beliefs[k] = tracer::predict(state.beliefs[k], state.tracer_configs[k]);
            if (!state.observed_once[skill]) {
                // First observation initializes the participant-specific mean.
                state.beliefs[skill] = {y, state.tracer_configs[skill].initial_variance};
                state.observed_once[skill] = true;
            } else {
                state.beliefs[skill] =
                    tracer::update(state.beliefs[skill], y, state.tracer_configs[skill]);
            }
            return;
        }
    }
}

bool estimated_mastered(const PolicyState& state) {
    if (state.kind != PolicyKind::adaptive)
        throw std::logic_error("estimated_mastered: only supported for the adaptive policy");
    for (std::size_t k = 0; k < state.beliefs.size(); ++k)
        if (estimated_proficiency(state, k) < state.mastery_threshold) return false;
    return true;
}

}  // namespace skillcoach::curriculum
