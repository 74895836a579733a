#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skillcoach/pipeline/backend.hpp"
#include "skillcoach/pipeline/types.hpp"

namespace skillcoach::pipeline {

struct EpisodeMetadata {
    std::string episode_id;
    std::string sub_skill;
    double target_time_sec = 0.0;
};

struct Episode {
    EpisodeMetadata metadata;
    std::vector<FrameObservation> frames;
};

/// Parses and validates an episode file; error messages cite the offending
/// field (e.g. "frames[3].timestamp_sec").
Episode episode_from_json(const nlohmann::json& j);
Episode load_episode(const std::filesystem::path& path);
nlohmann::json to_json(const Episode& episode);

struct PipelineOptions {
    int frame_workers = 1;  // fan-out width for per-frame backend calls
};

struct PipelineResult {
    std::vector<FrameState> frame_states;
    EpisodeSummary summary;
    CoachingAction coaching;
    RobotAdjustment adjustment;
    std::vector<std::string> fallback_flags;   // e.g. "frame[3]", "coach"
    std::vector<std::string> repair_notes;
    std::vector<std::string> stage_log;        // stage start order
    std::map<std::string, double> stage_latencies_sec;
};

/// Four-stage post-episode coaching pipeline over a pluggable backend.
/// Stages run strictly after the episode's final frame; frame extraction
/// may fan out, the remaining stages are sequential. Every stage resolves
/// to a schema-valid object within at most two backend calls per item:
/// one regeneration is attempted before the conservative fallback.
class CoachPipeline {
public:
    explicit CoachPipeline(Backend& backend, PipelineOptions options = {});

    std::vector<FrameState> extract_frame_states(const std::vector<FrameObservation>& frames,
                                                 const EpisodeMetadata& metadata);
    EpisodeSummary summarize_timeline(const std::vector<FrameState>& states,
                                      const EpisodeMetadata& metadata);
    CoachingAction generate_coaching(const EpisodeSummary& summary,
                                     const std::optional<std::string>& user_feedback,
                                     const EpisodeMetadata& metadata);
    RobotAdjustment adapt_robot(const CoachingAction& action,
                                const std::optional<std::string>& user_feedback);

    PipelineResult run(const Episode& episode,
                       const std::optional<std::string>& user_feedback = std::nullopt);

private:
    nlohmann::json call_validated(StageId stage, const nlohmann::json& payload,
                                  const std::string& item_label,
                                  const nlohmann::json& fallback_value);

    Backend& backend_;
    PipelineOptions options_;
    std::vector<std::string> fallback_flags_;
    std::vector<std::string> repair_notes_;
    std::vector<std::string> stage_log_;
    std::map<std::string, double> stage_latencies_;
};

/// Applies an adjustment to the numeric robot parameters: distance steps
/// of 0.15 m, pointing steps of 15 degrees, clamped to the workspace
/// bounds ([0.4, 2.5] m, [-45, 45] deg).
RobotConfigState apply_adjustment(const RobotConfigState& config, const RobotAdjustment& adj);

/// Builds the pipeline output document written by the CLI.
nlohmann::json result_to_json(const PipelineResult& result, const EpisodeMetadata& metadata,
                              const RobotConfigState& before, const RobotConfigState& after);

}  // namespace skillcoach::pipeline
