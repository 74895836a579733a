#include "skillcoach/pipeline/types.hpp"

#include <array>
#include <stdexcept>

namespace skillcoach::pipeline {

namespace {

using nlohmann::json;

template <typename Enum, std::size_t N>
std::string enum_to_string(Enum v, const std::array<const char*, N>& names) {
    const auto idx = static_cast<std::size_t>(v);
    return idx < N ? names[idx] : "unknown";
}

template <typename Enum, std::size_t N>
Enum enum_from_string(const std::string& s, const std::array<const char*, N>& names,
                      const char* what) {
    for (std::size_t i = 0; i < N; ++i)
        if (s == names[i]) return static_cast<Enum>(i);
    throw std::invalid_argument(std::string(what) + ": invalid value '" + s + "'");
}

constexpr std::array<const char*, 10> kUserStates = {
    "unknown", "approaching", "positioned", "interacting", "completed",
    "stuck",   "retreating",  "hesitant",   "confused",    "searching"};
constexpr std::array<const char*, 8> kRobotStates = {
    "unknown", "guiding", "waiting", "signaling", "assisting", "monitoring", "stopped",
    "adjusting"};
constexpr std::array<const char*, 4> kConnectionStates = {"connected", "loose", "disconnected",
                                                          "unknown"};
constexpr std::array<const char*, 5> kEnvironmentStates = {"unknown", "clear", "cluttered",
                                                           "hazardous", "changing"};
constexpr std::array<const char*, 6> kTaskProgress = {"not_started",    "in_progress",
                                                      "nearly_complete", "complete",
                                                      "failed",          "interrupted"};
constexpr std::array<const char*, 5> kQuality = {"excellent", "good", "fair", "poor", "very_poor"};
constexpr std::array<const char*, 4> kTechnique = {"excellent", "good", "needs_improvement",
                                                   "poor"};
constexpr std::array<const char*, 3> kDistance = {"closer", "farther", "maintain"};
constexpr std::array<const char*, 3> kPointing = {"more_left", "more_right", "maintain"};

std::vector<std::string> string_list(const json& j, const char* key) {
    std::vector<std::string> out;
    for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
    return out;
}

json to_json_list(const std::vector<std::string>& v) {
    return json(v);
}

}  // namespace

std::string to_string(UserState v) { return enum_to_string(v, kUserStates); }
std::string to_string(RobotState v) { return enum_to_string(v, kRobotStates); }
std::string to_string(ConnectionState v) { return enum_to_string(v, kConnectionStates); }
std::string to_string(EnvironmentState v) { return enum_to_string(v, kEnvironmentStates); }
std::string to_string(TaskProgress v) { return enum_to_string(v, kTaskProgress); }
std::string to_string(QualityRating v) { return enum_to_string(v, kQuality); }
std::string to_string(TechniqueRating v) { return enum_to_string(v, kTechnique); }
std::string to_string(DistanceAdjustment v) { return enum_to_string(v, kDistance); }
std::string to_string(PointingAdjustment v) { return enum_to_string(v, kPointing); }

json to_json(const FrameState& v) {
    return {{"timestamp_sec", v.timestamp_sec},
            {"user_state", to_string(v.user_state)},
            {"robot_state", to_string(v.robot_state)},
            {"connection_state", to_string(v.connection_state)},
            {"environment_state", to_string(v.environment_state)},
            {"task_progress", to_string(v.task_progress)},
            {"safety_concerns", v.safety_concerns},
            {"user_difficulties", v.user_difficulties},
            {"frame_description", v.frame_description}};
}

FrameState frame_state_from_json(const json& j) {
    FrameState v;
    if (j.contains("timestamp_sec")) v.timestamp_sec = j.at("timestamp_sec").get<double>();
    v.user_state =
        enum_from_string<UserState>(j.at("user_state").get<std::string>(), kUserStates,
                                    "user_state");
    v.robot_state =
        enum_from_string<RobotState>(j.at("robot_state").get<std::string>(), kRobotStates,
                                     "robot_state");
    v.connection_state = enum_from_string<ConnectionState>(
        j.at("connection_state").get<std::string>(), kConnectionStates, "connection_state");
    v.environment_state = enum_from_string<EnvironmentState>(
        j.at("environment_state").get<std::string>(), kEnvironmentStates, "environment_state");
    v.task_progress = enum_from_string<TaskProgress>(j.at("task_progress").get<std::string>(),
                                                     kTaskProgress, "task_progress");
    v.safety_concerns = j.at("safety_concerns").get<bool>();
    v.user_difficulties = j.at("user_difficulties").get<bool>();
    v.frame_description = j.at("frame_description").get<std::string>();
    return v;
}

json to_json(const TimelineEvent& v) {
    return {{"timestamp_sec", v.timestamp_sec},
            {"changed_fields", to_json_list(v.changed_fields)},
            {"description", v.description}};
}

json to_json(const EpisodeStats& v) {
    json events = json::array();
    for (const auto& e : v.events) events.push_back(to_json(e));
    return {{"duration_sec", v.duration_sec},
            {"terminal_task_progress", to_string(v.terminal_task_progress)},
            {"safety_flag_count", v.safety_flag_count},
            {"events", events}};
}

json decision_json(const EpisodeSummary& v) {
    return {{"success", v.success},
            {"navigation_quality", to_string(v.navigation_quality)},
            {"time_efficiency", v.time_efficiency},
            {"safety_rating", to_string(v.safety_rating)},
            {"following_technique", to_string(v.following_technique)},
            {"communication_effectiveness", v.communication_effectiveness},
            {"trust_level", to_string(v.trust_level)},
            {"issues_encountered", to_json_list(v.issues_encountered)},
            {"result_summary", v.result_summary},
            {"timeline_summary", v.timeline_summary}};
}

json to_json(const EpisodeSummary& v) {
    json j = decision_json(v);
    j["stats"] = to_json(v.stats);
    return j;
}

json to_json(const CoachingAction& v) {
    return {{"technique_assessment",
             {{"following_technique", to_string(v.technique_assessment.following_technique)},
              {"distance_maintenance", to_string(v.technique_assessment.distance_maintenance)},
              {"cue_response", to_string(v.technique_assessment.cue_response)},
              {"trust_level", to_string(v.technique_assessment.trust_level)}}},
            {"specific_feedback",
             {{"strengths", to_json_list(v.specific_feedback.strengths)},
              {"areas_for_improvement", to_json_list(v.specific_feedback.areas_for_improvement)},
              {"safety_notes", to_json_list(v.specific_feedback.safety_notes)},
              {"communication_feedback",
               to_json_list(v.specific_feedback.communication_feedback)}}},
            {"coaching_recommendations",
             {{"immediate_practice", to_json_list(v.coaching_recommendations.immediate_practice)},
              {"technique_tips", to_json_list(v.coaching_recommendations.technique_tips)},
              {"communication_tips", to_json_list(v.coaching_recommendations.communication_tips)},
              {"safety_tips", to_json_list(v.coaching_recommendations.safety_tips)}}},
            {"result_summary", v.result_summary},
            {"terminal_instruction_to_user", v.terminal_instruction_to_user},
            {"user_actionables", to_json_list(v.user_actionables)}};
}

CoachingAction coaching_action_from_json(const json& j) {
    CoachingAction v;
    const json& ta = j.at("technique_assessment");
    v.technique_assessment.following_technique = enum_from_string<TechniqueRating>(
        ta.at("following_technique").get<std::string>(), kTechnique, "following_technique");
    v.technique_assessment.distance_maintenance = enum_from_string<TechniqueRating>(
        ta.at("distance_maintenance").get<std::string>(), kTechnique, "distance_maintenance");
    v.technique_assessment.cue_response = enum_from_string<TechniqueRating>(
        ta.at("cue_response").get<std::string>(), kTechnique, "cue_response");
    v.technique_assessment.trust_level = enum_from_string<TechniqueRating>(
        ta.at("trust_level").get<std::string>(), kTechnique, "trust_level");
    const json& sf = j.at("specific_feedback");
    v.specific_feedback.strengths = string_list(sf, "strengths");
    v.specific_feedback.areas_for_improvement = string_list(sf, "areas_for_improvement");
    v.specific_feedback.safety_notes = string_list(sf, "safety_notes");
    v.specific_feedback.communication_feedback = string_list(sf, "communication_feedback");
    const json& cr = j.at("coaching_recommendations");
    v.coaching_recommendations.immediate_practice = string_list(cr, "immediate_practice");
    v.coaching_recommendations.technique_tips = string_list(cr, "technique_tips");
    v.coaching_recommendations.communication_tips = string_list(cr, "communication_tips");
    v.coaching_recommendations.safety_tips = string_list(cr, "safety_tips");
    v.result_summary = j.at("result_summary").get<std::string>();
    v.terminal_instruction_to_user = j.at("terminal_instruction_to_user").get<std::string>();
    v.user_actionables = string_list(j, "user_actionables");
    return v;
}

json to_json(const RobotAdjustment& v) {
    return {{"distance_to_door_adjustment", to_string(v.distance_to_door_adjustment)},
            {"pointing_direction_adjustment", to_string(v.pointing_direction_adjustment)},
            {"reasoning", v.reasoning}};
}

RobotAdjustment robot_adjustment_from_json(const json& j) {
    RobotAdjustment v;
    v.distance_to_door_adjustment = enum_from_string<DistanceAdjustment>(
        j.at("distance_to_door_adjustment").get<std::string>(), kDistance,
        "distance_to_door_adjustment");
    v.pointing_direction_adjustment = enum_from_string<PointingAdjustment>(
        j.at("pointing_direction_adjustment").get<std::string>(), kPointing,
        "pointing_direction_adjustment");
    v.reasoning = j.at("reasoning").get<std::string>();
    return v;
}

json to_json(const RobotConfigState& v) {
    return {{"stop_distance_to_door", v.stop_distance_to_door},
            {"pointing_angle", v.pointing_angle}};
}

RobotConfigState robot_config_from_json(const json& j) {
    RobotConfigState v;
    v.stop_distance_to_door = j.at("stop_distance_to_door").get<double>();
    v.pointing_angle = j.at("pointing_angle").get<double>();
    return v;
}

}  // namespace skillcoach::pipeline
