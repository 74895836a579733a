#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace skillcoach::pipeline {

/// One captured observation: a timestamp plus either a pre-annotated text
/// description or a reference to an image file (consumed by the backend).
struct FrameObservation {
    double timestamp_sec = 0.0;
    std::optional<std::string> description;
    std::optional<std::string> image_path;
};

enum class UserState {
    unknown, approaching, positioned, interacting, completed,
    stuck, retreating, hesitant, confused, searching
};
enum class RobotState {
    unknown, guiding, waiting, signaling, assisting, monitoring, stopped, adjusting
};
enum class ConnectionState { connected, loose, disconnected, unknown };
enum class EnvironmentState { unknown, clear, cluttered, hazardous, changing };
enum class TaskProgress { not_started, in_progress, nearly_complete, complete, failed, interrupted };

/// Five-level quality rating shared by several summary fields.
enum class QualityRating { excellent, good, fair, poor, very_poor };

/// Four-level technique rating used in coaching assessments.
enum class TechniqueRating { excellent, good, needs_improvement, poor };

enum class DistanceAdjustment { closer, farther, maintain };
enum class PointingAdjustment { more_left, more_right, maintain };

std::string to_string(UserState v);
std::string to_string(RobotState v);
std::string to_string(ConnectionState v);
std::string to_string(EnvironmentState v);
std::string to_string(TaskProgress v);
std::string to_string(QualityRating v);
std::string to_string(TechniqueRating v);
std::string to_string(DistanceAdjustment v);
std::string to_string(PointingAdjustment v);

/// Symbolic state extracted from one frame. `unknown` values are explicit
/// fallbacks, never absent fields.
struct FrameState {
    double timestamp_sec = 0.0;
    UserState user_state = UserState::unknown;
    RobotState robot_state = RobotState::unknown;
    ConnectionState connection_state = ConnectionState::unknown;
    EnvironmentState environment_state = EnvironmentState::unknown;
    TaskProgress task_progress = TaskProgress::not_started;
    bool safety_concerns = false;
    bool user_difficulties = false;
    std::string frame_description;
};

/// One entry of the deterministic episode event list: the first frame plus
/// every frame where any symbolic enum field changed.
struct TimelineEvent {
    double timestamp_sec = 0.0;
    std::vector<std::string> changed_fields;  // empty list marks the initial event
    std::string description;
};

/// Locally computed episode statistics (never backend-claimed).
struct EpisodeStats {
    double duration_sec = 0.0;
    TaskProgress terminal_task_progress = TaskProgress::not_started;
    int safety_flag_count = 0;
    std::vector<TimelineEvent> events;
};

/// Episode summary: judgment fields produced by the backend under the
/// decision schema plus the locally computed stats. time_efficiency is
/// always recomputed locally as duration / target.
struct EpisodeSummary {
    bool success = false;
    QualityRating navigation_quality = QualityRating::fair;
    double time_efficiency = 0.0;
    QualityRating safety_rating = QualityRating::fair;
    QualityRating following_technique = QualityRating::fair;
    bool communication_effectiveness = false;
    QualityRating trust_level = QualityRating::fair;
    std::vector<std::string> issues_encountered;
    std::string result_summary;
    std::string timeline_summary;
    EpisodeStats stats;
};

struct TechniqueAssessment {
    TechniqueRating following_technique = TechniqueRating::needs_improvement;
    TechniqueRating distance_maintenance = TechniqueRating::needs_improvement;
    TechniqueRating cue_response = TechniqueRating::needs_improvement;
    TechniqueRating trust_level = TechniqueRating::needs_improvement;
};

struct SpecificFeedback {
    std::vector<std::string> strengths;
    std::vector<std::string> areas_for_improvement;
    std::vector<std::string> safety_notes;
    std::vector<std::string> communication_feedback;
};

struct CoachingRecommendations {
    std::vector<std::string> immediate_practice;
    std::vector<std::string> technique_tips;
    std::vector<std::string> communication_tips;
    std::vector<std::string> safety_tips;
};

struct CoachingAction {
    TechniqueAssessment technique_assessment;
    SpecificFeedback specific_feedback;
    CoachingRecommendations coaching_recommendations;
    std::string result_summary;
    std::string terminal_instruction_to_user;
    std::vector<std::string> user_actionables;  // at least one entry
};

struct RobotAdjustment {
    DistanceAdjustment distance_to_door_adjustment = DistanceAdjustment::maintain;
    PointingAdjustment pointing_direction_adjustment = PointingAdjustment::maintain;
    std::string reasoning;
};

/// Numeric robot parameters the adjustments act on.
struct RobotConfigState {
    double stop_distance_to_door = 1.0;  // meters, clamped to [0.4, 2.5]
    double pointing_angle = 0.0;         // degrees, negative left, clamped to [-45, 45]
};

nlohmann::json to_json(const FrameState& v);
FrameState frame_state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TimelineEvent& v);
nlohmann::json to_json(const EpisodeStats& v);
nlohmann::json to_json(const EpisodeSummary& v);   // includes "stats"
nlohmann::json decision_json(const EpisodeSummary& v);  // judgment fields only

nlohmann::json to_json(const CoachingAction& v);
CoachingAction coaching_action_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RobotAdjustment& v);
RobotAdjustment robot_adjustment_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RobotConfigState& v);
RobotConfigState robot_config_from_json(const nlohmann::json& j);

}  // namespace skillcoach::pipeline
