#include "skillcoach/config.hpp"

#include <fstream>
#include <set>
#include <vector>

#include "skillcoach/errors.hpp"

namespace skillcoach::config {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return obj.at(key).get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer())
        throw ConfigError(where + "." + key + ": expected an integer");
    return obj.at(key).get<int>();
}

bool get_bool(const json& obj, const std::string& where, const std::string& key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) throw ConfigError(where + "." + key + ": expected a boolean");
    return obj.at(key).get<bool>();
}

std::vector<learner::MixtureComponent> parse_mixture(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty())
        throw ConfigError(where + ": expected a non-empty array of components");
    std::vector<learner::MixtureComponent> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string item = where + "[" + std::to_string(i) + "]";
        require_keys(arr[i], item, {"weight", "lo", "hi"});
        learner::MixtureComponent c;
        c.weight = get_number(arr[i], item, "weight", -1.0);
        c.range.lo = get_number(arr[i], item, "lo", -1.0);
        c.range.hi = get_number(arr[i], item, "hi", -1.0);
        out.push_back(c);
    }
    return out;
}

json mixture_to_json(const std::vector<learner::MixtureComponent>& mixture) {
    json arr = json::array();
    for (const auto& c : mixture)
        arr.push_back({{"weight", c.weight}, {"lo", c.range.lo}, {"hi", c.range.hi}});
    return arr;
}

}  // namespace

engine::ExperimentConfig parse_experiment_config(const json& j) {
    engine::ExperimentConfig cfg;
    require_keys(j, "config",
                 {"master_seed", "n_learners", "skill_counts", "budget_per_skill", "policies",
                  "epsilon", "mastery_threshold", "learner", "tracer", "record_traces"});

    if (j.contains("master_seed")) {
        if (!j.at("master_seed").is_number_unsigned() && !j.at("master_seed").is_number_integer())
            throw ConfigError("config.master_seed: expected an integer");
        cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    }
    cfg.n_learners = get_int(j, "config", "n_learners", cfg.n_learners);
    cfg.budget_per_skill = get_int(j, "config", "budget_per_skill", cfg.budget_per_skill);
    cfg.epsilon = get_number(j, "config", "epsilon", cfg.epsilon);
    cfg.mastery_threshold = get_number(j, "config", "mastery_threshold", cfg.mastery_threshold);
    cfg.record_traces = get_bool(j, "config", "record_traces", cfg.record_traces);

    if (j.contains("skill_counts")) {
        if (!j.at("skill_counts").is_array())
            throw ConfigError("config.skill_counts: expected an array of integers");
        cfg.skill_counts.clear();
        for (const auto& v : j.at("skill_counts")) {
            if (!v.is_number_integer())
                throw ConfigError("config.skill_counts: expected an array of integers");
            cfg.skill_counts.push_back(v.get<int>());
        }
    }
    if (j.contains("policies")) {
        if (!j.at("policies").is_array())
            throw ConfigError("config.policies: expected an array of policy names");
        cfg.policies.clear();
        for (const auto& v : j.at("policies")) {
            if (!v.is_string())
                throw ConfigError("config.policies: expected an array of policy names");
            cfg.policies.push_back(curriculum::policy_kind_from_string(v.get<std::string>()));
        }
    }

    if (j.contains("learner")) {
        const json& l = j.at("learner");
        require_keys(l, "config.learner", {"constants", "distributions"});
        if (l.contains("constants")) {
            const json& c = l.at("constants");
            require_keys(c, "config.learner.constants",
                         {"lambda_fatigue", "lambda_exp", "gamma_dim", "min_time_floor",
                          "min_learning_increment"});
            auto& mc = cfg.constants;
            mc.lambda_fatigue = get_number(c, "constants", "lambda_fatigue", mc.lambda_fatigue);
            mc.lambda_exp = get_number(c, "constants", "lambda_exp", mc.lambda_exp);
            mc.gamma_dim = get_number(c, "constants", "gamma_dim", mc.gamma_dim);
            mc.min_time_floor = get_number(c, "constants", "min_time_floor", mc.min_time_floor);
            mc.min_learning_increment =
                get_number(c, "constants", "min_learning_increment", mc.min_learning_increment);
        }
        if (l.contains("distributions")) {
            const json& d = l.at("distributions");
            require_keys(d, "config.learner.distributions",
                         {"tau_star", "multiplier", "variance_factor", "learning_rate",
                          "forgetting_rate", "fatigue_threshold"});
            auto& dist = cfg.distributions;
            if (d.contains("tau_star"))
                dist.tau_star = parse_mixture(d.at("tau_star"), "distributions.tau_star");
            if (d.contains("multiplier"))
                dist.multiplier = parse_mixture(d.at("multiplier"), "distributions.multiplier");
            if (d.contains("variance_factor"))
                dist.variance_factor =
                    parse_mixture(d.at("variance_factor"), "distributions.variance_factor");
            if (d.contains("learning_rate"))
                dist.learning_rate =
                    parse_mixture(d.at("learning_rate"), "distributions.learning_rate");
            if (d.contains("forgetting_rate")) {
                const json& f = d.at("forgetting_rate");
                require_keys(f, "distributions.forgetting_rate", {"lo", "hi"});
                dist.forgetting_rate.lo = get_number(f, "forgetting_rate", "lo", 0.02);
                dist.forgetting_rate.hi = get_number(f, "forgetting_rate", "hi", 0.1);
            }
            if (d.contains("fatigue_threshold")) {
                const json& f = d.at("fatigue_threshold");
                require_keys(f, "distributions.fatigue_threshold", {"lo", "hi"});
                dist.fatigue_threshold_lo = get_int(f, "fatigue_threshold", "lo", 2);
                dist.fatigue_threshold_hi = get_int(f, "fatigue_threshold", "hi", 20);
            }
        }
    }

    if (j.contains("tracer")) {
        const json& t = j.at("tracer");
        require_keys(t, "config.tracer",
                     {"obs_noise_scale", "process_noise_scale", "initial_variance_scale"});
        cfg.tracer.obs_noise_scale =
            get_number(t, "tracer", "obs_noise_scale", cfg.tracer.obs_noise_scale);
        cfg.tracer.process_noise_scale =
            get_number(t, "tracer", "process_noise_scale", cfg.tracer.process_noise_scale);
        cfg.tracer.initial_variance_scale =
            get_number(t, "tracer", "initial_variance_scale", cfg.tracer.initial_variance_scale);
    }

    cfg.validate();
    return cfg;
}

engine::ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }
    return parse_experiment_config(j);
}

json experiment_config_to_json(const engine::ExperimentConfig& cfg) {
    json j;
    j["master_seed"] = cfg.master_seed;
    j["n_learners"] = cfg.n_learners;
    j["skill_counts"] = cfg.skill_counts;
    j["budget_per_skill"] = cfg.budget_per_skill;
    json policies = json::array();
    for (auto p : cfg.policies) policies.push_back(curriculum::to_string(p));
    j["policies"] = policies;
    j["epsilon"] = cfg.epsilon;
    j["mastery_threshold"] = cfg.mastery_threshold;
    j["record_traces"] = cfg.record_traces;
    j["learner"]["constants"] = {{"lambda_fatigue", cfg.constants.lambda_fatigue},
                                 {"lambda_exp", cfg.constants.lambda_exp},
                                 {"gamma_dim", cfg.constants.gamma_dim},
                                 {"min_time_floor", cfg.constants.min_time_floor},
                                 {"min_learning_increment", cfg.constants.min_learning_increment}};
    j["learner"]["distributions"] = {
        {"tau_star", mixture_to_json(cfg.distributions.tau_star)},
        {"multiplier", mixture_to_json(cfg.distributions.multiplier)},
        {"variance_factor", mixture_to_json(cfg.distributions.variance_factor)},
        {"learning_rate", mixture_to_json(cfg.distributions.learning_rate)},
        {"forgetting_rate",
         {{"lo", cfg.distributions.forgetting_rate.lo}, {"hi", cfg.distributions.forgetting_rate.hi}}},
        {"fatigue_threshold",
         {{"lo", cfg.distributions.fatigue_threshold_lo},
          {"hi", cfg.distributions.fatigue_threshold_hi}}}};
    j["tracer"] = {{"obs_noise_scale", cfg.tracer.obs_noise_scale},
                   {"process_noise_scale", cfg.tracer.process_noise_scale},
                   {"initial_variance_scale", cfg.tracer.initial_variance_scale}};
    return j;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string config_hash(const engine::ExperimentConfig& cfg) {
    const std::uint64_t h = fnv1a64(experiment_config_to_json(cfg).dump());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace skillcoach::config
