#include "skillcoach/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "skillcoach/errors.hpp"
#include "skillcoach/stats.hpp"

namespace skillcoach::engine {

void ExperimentConfig::validate() const {
    if (n_learners < 1) throw ConfigError("n_learners must be >= 1");
    if (budget_per_skill < 1) throw ConfigError("budget_per_skill must be >= 1");
    if (skill_counts.empty()) throw ConfigError("skill_counts must not be empty");
    for (int n : skill_counts)
        if (n < 1) throw ConfigError("skill_counts entries must be >= 1");
    if (policies.empty()) throw ConfigError("policies must not be empty");
    if (epsilon < 0.0 || epsilon > 1.0) throw ConfigError("epsilon must be in [0,1]");
    if (mastery_threshold <= 0.0 || mastery_threshold > 1.0)
        throw ConfigError("mastery_threshold must be in (0,1]");
    if (tracer.obs_noise_scale <= 0.0 || tracer.process_noise_scale < 0.0 ||
        tracer.initial_variance_scale <= 0.0)
        throw ConfigError("tracer scales must be positive");
    distributions.validate();
    constants.validate();
}

std::vector<tracer::TracerConfig> tracker_calibration(const learner::LearnerProfile& profile,
                                                      const TracerScales& scales) {
    std::vector<tracer::TracerConfig> configs;
    configs.reserve(profile.n_skills());
    for (const auto& skill : profile.skills) {
        const auto base = learner::baseline(skill);
        configs.push_back(tracer::TracerConfig::from_endpoints(
            base.mu_hat, skill.tau_star, scales.obs_noise_scale, scales.process_noise_scale,
            scales.initial_variance_scale));
    }
    return configs;
}

EpisodeResult run_episode(learner::LearnerProfile& profile, curriculum::PolicyState& policy,
                          int budget, double mastery_threshold, Rng& rng, bool record_trace) {
    if (budget < 1) throw ConfigError("run_episode: budget must be >= 1");
    const std::size_t n = profile.n_skills();

    EpisodeResult result;
    int steps = 0;
    while (true) {
        if (learner::latent_mastered(profile, mastery_threshold)) {
            result.success = true;
            break;
        }
        if (steps >= budget) {
            result.success = false;
            break;
        }
        const std::size_t skill = curriculum::select(policy, n, rng);
        const double observed = learner::attempt(profile, skill, steps, rng);
        curriculum::observe(policy, skill, observed);
        ++steps;
        if (record_trace)
            result.trace.push_back(
                {static_cast<int>(skill), observed, profile.states[skill].progress});
    }
    result.actions_used = steps;
    return result;
}

namespace {

curriculum::PolicyState make_policy(curriculum::PolicyKind kind,
                                    const learner::LearnerProfile& profile,
                                    const ExperimentConfig& cfg) {
    switch (kind) {
        case curriculum::PolicyKind::uniform:
            return curriculum::make_uniform_policy(profile.n_skills());
        case curriculum::PolicyKind::greedy: {
            std::vector<double> tau;
            tau.reserve(profile.n_skills());
            for (const auto& s : profile.skills) tau.push_back(s.tau_star);
            return curriculum::make_greedy_policy(std::move(tau), cfg.epsilon);
        }
        case curriculum::PolicyKind::adaptive:
            return curriculum::make_adaptive_policy(tracker_calibration(profile, cfg.tracer),
                                                    cfg.epsilon, cfg.mastery_threshold);
    }
    throw std::logic_error("make_policy: unreachable");
}

// Seed lanes: lane 1 samples learners (shared across policies, giving the
// paired design), lanes 2+ drive episodes per policy.
constexpr std::uint64_t kProfileLane = 1;
constexpr std::uint64_t kEpisodeLaneBase = 2;

struct Task {
    int skill_count_idx;
    int learner_id;
};

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads) {
    cfg.validate();
    if (threads < 1) threads = 1;

    const std::size_t n_counts = cfg.skill_counts.size();
    const std::size_t n_policies = cfg.policies.size();
    const std::size_t slots = n_counts * static_cast<std::size_t>(cfg.n_learners) * n_policies;

    ExperimentReport report;
    report.raw.assign(slots, RawRecord{});

    std::vector<Task> tasks;
    tasks.reserve(n_counts * static_cast<std::size_t>(cfg.n_learners));
    for (std::size_t c = 0; c < n_counts; ++c)
        for (int l = 0; l < cfg.n_learners; ++l)
            tasks.push_back({static_cast<int>(c), l});

    std::atomic<std::size_t> next_task{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        while (true) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                const Task task = tasks[t];
                const int n_skills = cfg.skill_counts[static_cast<std::size_t>(task.skill_count_idx)];
                const int budget = cfg.budget_per_skill * n_skills;
                const std::uint64_t count_lane = static_cast<std::uint64_t>(n_skills);

                Rng profile_rng(derive_seed(cfg.master_seed, kProfileLane, count_lane,
                                            static_cast<std::uint64_t>(task.learner_id)));
                const learner::LearnerProfile sampled = learner::sample_profile(
                    profile_rng, n_skills, cfg.distributions, cfg.constants);

                for (std::size_t p = 0; p < n_policies; ++p) {
                    learner::LearnerProfile clone = sampled;
                    auto policy = make_policy(cfg.policies[p], clone, cfg);
                    Rng episode_rng(derive_seed(cfg.master_seed, kEpisodeLaneBase + p, count_lane,
                                                static_cast<std::uint64_t>(task.learner_id)));
                    const EpisodeResult episode = run_episode(
                        clone, policy, budget, cfg.mastery_threshold, episode_rng,
                        cfg.record_traces);

                    const std::size_t slot =
                        (static_cast<std::size_t>(task.skill_count_idx) *
                             static_cast<std::size_t>(cfg.n_learners) +
                         static_cast<std::size_t>(task.learner_id)) *
                            n_policies +
                        p;
                    report.raw[slot] = {cfg.policies[p], n_skills, task.learner_id,
                                        episode.actions_used, episode.success};
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    report.summary = aggregate_summary(report.raw);
    report.significance = compute_significance(report.raw);
    return report;
}

namespace {

// Grouping key preserving first-appearance order of (skill_count, policy).
struct GroupKey {
    int skill_count;
    curriculum::PolicyKind policy;
    bool operator<(const GroupKey& o) const {
        if (skill_count != o.skill_count) return skill_count < o.skill_count;
        return static_cast<int>(policy) < static_cast<int>(o.policy);
    }
};

std::map<GroupKey, std::vector<double>> group_actions(const std::vector<RawRecord>& raw,
                                                      std::vector<GroupKey>& order) {
    std::map<GroupKey, std::vector<double>> groups;
    for (const auto& rec : raw) {
        const GroupKey key{rec.skill_count, rec.policy};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(static_cast<double>(rec.actions_used));
    }
    return groups;
}

}  // namespace

std::vector<SummaryRow> aggregate_summary(const std::vector<RawRecord>& raw) {
    std::vector<GroupKey> order;
    auto groups = group_actions(raw, order);

    std::map<GroupKey, int> successes;
    for (const auto& rec : raw) successes[{rec.skill_count, rec.policy}] += rec.success ? 1 : 0;

    std::vector<SummaryRow> rows;
    rows.reserve(order.size());
    for (const auto& key : order) {
        const auto& actions = groups[key];
        const auto m = stats::moments(actions);
        SummaryRow row;
        row.policy = key.policy;
        row.skill_count = key.skill_count;
        row.mean_actions = m.mean;
        row.std_actions = m.n >= 2 ? std::sqrt(m.variance) : 0.0;
        row.degenerate = m.n < 2;
        row.success_rate =
            static_cast<double>(successes[key]) / static_cast<double>(actions.size());
        rows.push_back(row);
    }
    return rows;
}

std::vector<SignificanceRow> compute_significance(const std::vector<RawRecord>& raw) {
    std::vector<GroupKey> order;
    auto groups = group_actions(raw, order);

    std::vector<int> counts;
    for (const auto& key : order)
        if (counts.empty() || counts.back() != key.skill_count) counts.push_back(key.skill_count);
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

    std::vector<SignificanceRow> rows;
    const std::pair<curriculum::PolicyKind, std::string> comparisons[] = {
        {curriculum::PolicyKind::greedy, "adaptive_vs_greedy"},
        {curriculum::PolicyKind::uniform, "adaptive_vs_uniform"},
    };
    for (int n : counts) {
        const auto adaptive_it = groups.find({n, curriculum::PolicyKind::adaptive});
        if (adaptive_it == groups.end()) continue;
        for (const auto& [other, label] : comparisons) {
            const auto other_it = groups.find({n, other});
            if (other_it == groups.end()) continue;
            if (adaptive_it->second.size() < 2 || other_it->second.size() < 2) continue;
            const auto welch = stats::welch_t(adaptive_it->second, other_it->second);
            SignificanceRow row;
            row.skill_count = n;
            row.comparison = label;
            row.t = welch.t;
            row.p = welch.p;
            row.cohens_d = stats::cohens_d(adaptive_it->second, other_it->second);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace skillcoach::engine
