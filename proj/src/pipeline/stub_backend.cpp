#include <algorithm>
#include <cctype>
#include <cstdio>

#include "skillcoach/errors.hpp"
#include "skillcoach/pipeline/backend.hpp"
#include "skillcoach/pipeline/types.hpp"

namespace skillcoach::pipeline {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool has(const std::string& text, const char* needle) {
    return text.find(needle) != std::string::npos;
}

std::string fmt1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

// ---- frame stage ----------------------------------------------------------

json stub_frame(const json& payload) {
    std::string description;
    const json& frame = payload.at("frame");
    if (frame.contains("description")) description = frame.at("description").get<std::string>();
    const std::string text = lower(description);

    std::string user_state = "unknown";
    if (has(text, "door fully opened") || has(text, "completed")) user_state = "completed";
    else if ((has(text, "handle") && has(text, "grasp")) || has(text, "interacting"))
        user_state = "interacting";
    else if (has(text, "search")) user_state = "searching";
    else if (has(text, "stuck")) user_state = "stuck";
    else if (has(text, "confus")) user_state = "confused";
    else if (has(text, "retreat")) user_state = "retreating";
    else if (has(text, "hesita")) user_state = "hesitant";
    else if (has(text, "positioned")) user_state = "positioned";
    else if (has(text, "approach")) user_state = "approaching";

    std::string robot_state = "unknown";
    if (has(text, "robot adjust") || has(text, "adjusting")) robot_state = "adjusting";
    else if (has(text, "robot stopped")) robot_state = "stopped";
    else if (has(text, "signal")) robot_state = "signaling";
    else if (has(text, "assist")) robot_state = "assisting";
    else if (has(text, "monitor")) robot_state = "monitoring";
    else if (has(text, "waiting")) robot_state = "waiting";
    else if (has(text, "guiding") || has(text, "leading")) robot_state = "guiding";

    std::string connection_state = "unknown";
    if (has(text, "disconnect") || has(text, "dropped the leash") || has(text, "lost contact"))
        connection_state = "disconnected";
    else if (has(text, "loose")) connection_state = "loose";
    else if (has(text, "connected") || has(text, "leash in hand")) connection_state = "connected";

    std::string environment_state = "unknown";
    if (has(text, "hazard") || has(text, "collision") || has(text, "obstacle"))
        environment_state = "hazardous";
    else if (has(text, "clutter")) environment_state = "cluttered";
    else if (has(text, "changing")) environment_state = "changing";
    else if (has(text, "clear")) environment_state = "clear";

    std::string task_progress = "not_started";
    if (has(text, "door fully opened") || has(text, "completed the task") ||
        has(text, "task complete"))
        task_progress = "complete";
    else if (has(text, "failed")) task_progress = "failed";
    else if (has(text, "interrupted")) task_progress = "interrupted";
    else if (has(text, "nearly")) task_progress = "nearly_complete";
    else if (!text.empty()) task_progress = "in_progress";

    const bool safety = has(text, "hazard") || has(text, "collision") || has(text, "unsafe") ||
                        has(text, "danger");
    const bool difficulties = has(text, "hesita") || has(text, "search") || has(text, "stuck") ||
                              has(text, "confus") || has(text, "difficult") ||
                              has(text, "struggl") || has(text, "far from");

    return {{"timestamp_sec", frame.at("timestamp_sec").get<double>()},
            {"user_state", user_state},
            {"robot_state", robot_state},
            {"connection_state", connection_state},
            {"environment_state", environment_state},
            {"task_progress", task_progress},
            {"safety_concerns", safety},
            {"user_difficulties", difficulties},
            {"frame_description",
             description.empty() ? std::string("unannotated image frame") : description}};
}

// ---- timeline stage -------------------------------------------------------

std::string quality_from_efficiency(double efficiency) {
    if (efficiency <= 1.0) return "excellent";
    if (efficiency <= 1.5) return "good";
    if (efficiency <= 2.5) return "fair";
    if (efficiency <= 4.0) return "poor";
    return "very_poor";
}

std::string ladder(int count, int good_max, int fair_max, int poor_max) {
    if (count == 0) return "excellent";
    if (count <= good_max) return "good";
    if (count <= fair_max) return "fair";
    if (count <= poor_max) return "poor";
    return "very_poor";
}

json stub_timeline(const json& payload) {
    const json& stats = payload.at("stats");
    const double duration = stats.at("duration_sec").get<double>();
    const double target = payload.at("target_time_sec").get<double>();
    const double efficiency = target > 0.0 ? duration / target : 0.0;
    const std::string terminal = stats.at("terminal_task_progress").get<std::string>();
    const bool success = terminal == "complete";
    const int safety_count = stats.at("safety_flag_count").get<int>();

    int difficulty_frames = 0;
    bool any_search = false;
    bool any_disconnected = false;
    bool any_loose = false;
    std::string all_text;
    for (const auto& state : payload.at("states")) {
        if (state.at("user_difficulties").get<bool>()) ++difficulty_frames;
        const std::string us = state.at("user_state").get<std::string>();
        if (us == "searching" || us == "hesitant") any_search = true;
        const std::string conn = state.at("connection_state").get<std::string>();
        if (conn == "disconnected") any_disconnected = true;
        if (conn == "loose") any_loose = true;
        all_text += lower(state.at("frame_description").get<std::string>());
        all_text += '\n';
    }

    json issues = json::array();
    if (any_search) issues.push_back("user hesitated while searching for the handle");
    if (has(all_text, "far")) issues.push_back("user positioned too far from the door");
    if (has(all_text, "wrong direction")) issues.push_back("user searched in the wrong direction");
    if (has(all_text, "too close to the robot"))
        issues.push_back("user stayed too close to the robot");
    if (has(all_text, "not fully open"))
        issues.push_back("user did not keep the door fully open for the robot");
    if (safety_count > 0) issues.push_back("safety concerns observed");
    if (!success) issues.push_back("task not completed");

    std::string timeline_text;
    for (const auto& event : stats.at("events")) {
        timeline_text += "At " + fmt1(event.at("timestamp_sec").get<double>()) +
                         "s: " + event.at("description").get<std::string>() + ". ";
    }
    if (!timeline_text.empty()) timeline_text.pop_back();

    std::string trust = any_disconnected ? "poor" : (any_loose ? "fair" : "good");
    if (trust == "good" && difficulty_frames == 0) trust = "excellent";

    return {{"success", success},
            {"navigation_quality", quality_from_efficiency(efficiency)},
            {"time_efficiency", efficiency},
            {"safety_rating", ladder(safety_count, 1, 3, 6)},
            {"following_technique", ladder(difficulty_frames, 2, 8, 16)},
            {"communication_effectiveness", !any_disconnected},
            {"trust_level", trust},
            {"issues_encountered", issues},
            {"result_summary",
             success ? "Task completed in " + fmt1(duration) + "s (target " + fmt1(target) + "s)."
                     : "Task not completed within " + fmt1(duration) + "s."},
            {"timeline_summary", timeline_text}};
}

// ---- coach stage ----------------------------------------------------------

std::string technique_from_quality(const std::string& quality) {
    if (quality == "excellent") return "excellent";
    if (quality == "good") return "good";
    if (quality == "fair") return "needs_improvement";
    return "poor";
}

json stub_coach(const json& payload) {
    const json& summary = payload.at("summary");
    std::string text = lower(summary.at("result_summary").get<std::string>()) + "\n" +
                       lower(summary.at("timeline_summary").get<std::string>());
    for (const auto& issue : summary.at("issues_encountered"))
        text += "\n" + lower(issue.get<std::string>());

    const bool success = summary.at("success").get<bool>();
    const bool too_far = has(text, "too far");
    const bool wrong_direction = has(text, "wrong direction");
    const bool wrong_region = !wrong_direction && (has(text, "wrong region") || has(text, "search"));
    const bool door_not_open = has(text, "not fully open") || has(text, "keep the door");
    const bool too_close_robot = has(text, "too close to the robot");
    const bool safety = has(text, "safety");

    json strengths = json::array();
    if (success) strengths.push_back("completed the task");
    if (!safety) strengths.push_back("no safety incidents");

    json areas = json::array();
    json practice = json::array();
    json technique_tips = json::array();
    json actionables = json::array();
    std::string diagnosis;
    std::string instruction;

    if (too_far) {
        diagnosis = "spatial misalignment: positioned too far from the door";
        areas.push_back("position yourself closer to the door before grasping the handle");
        technique_tips.push_back("stop about arm's length away from the door");
        practice.push_back("practice stopping closer to the door");
        actionables.push_back("position yourself closer to the door before grasping the handle");
        instruction = "Step 1: move closer to the door, about arm's length. "
                      "Step 2: then reach out for the handle.";
    } else if (wrong_direction) {
        diagnosis = "cue misinterpretation: searched in the wrong direction";
        areas.push_back("search toward the side the robot is pointing");
        technique_tips.push_back("follow the pointing cue before reaching");
        practice.push_back("practice locating the handle from the robot's cue");
        actionables.push_back("search toward the side the robot points to");
        instruction = "Step 1: pause and sense the robot's pointing cue. "
                      "Step 2: search on that side only.";
    } else if (wrong_region) {
        diagnosis = "searched the wrong region for the handle";
        areas.push_back("search at waist height near the door edge");
        technique_tips.push_back("sweep at waist height along the door edge");
        practice.push_back("practice locating the handle region");
        actionables.push_back("search for the handle at waist height near the door edge");
        instruction = "Step 1: place your hand at waist height. "
                      "Step 2: sweep along the door edge.";
    } else if (door_not_open) {
        diagnosis = "door was not kept fully open for the robot";
        areas.push_back("hold the door fully open until the robot passes");
        technique_tips.push_back("keep pressure on the door while the robot passes");
        practice.push_back("practice holding the door open");
        actionables.push_back("keep the door fully open for the robot to pass through");
        instruction = "Step 1: push the door fully open. "
                      "Step 2: hold it until the robot passes.";
    } else if (too_close_robot) {
        diagnosis = "user crowded the robot while passing through";
        areas.push_back("give the robot space to adjust its pose");
        technique_tips.push_back("stay a step behind while the robot adjusts");
        practice.push_back("practice passing through with more clearance");
        actionables.push_back("give the robot more space when passing through the door");
        instruction = "Step 1: hold position while the robot adjusts. "
                      "Step 2: follow one step behind.";
    } else if (!success) {
        diagnosis = "task not completed";
        areas.push_back("repeat the sub-skill with the robot's guidance");
        technique_tips.push_back("follow the robot's lead at a steady pace");
        practice.push_back("repeat the sub-skill");
        actionables.push_back("repeat the sub-skill focusing on the robot's cues");
        instruction = "Step 1: restart the sub-skill. Step 2: follow the robot's cues closely.";
    } else {
        diagnosis = "no major issues";
        practice.push_back("consolidate with one more repetition");
        actionables.push_back("keep the same pace and distance");
        instruction = "Great job. Keep the same pace and distance on the next run.";
    }

    if (payload.contains("user_feedback")) {
        instruction += " Regarding your feedback: noted, the robot will adjust.";
    }

    json safety_notes = json::array();
    if (safety) safety_notes.push_back("safety concerns were flagged during the episode");

    json communication = json::array();
    if (!summary.at("communication_effectiveness").get<bool>())
        communication.push_back("re-establish the leash connection promptly when lost");

    const std::string sub_skill =
        payload.contains("sub_skill") ? payload.at("sub_skill").get<std::string>() : "sub-skill";

    return {{"technique_assessment",
             {{"following_technique",
               technique_from_quality(summary.at("following_technique").get<std::string>())},
              {"distance_maintenance",
               too_far || too_close_robot ? "needs_improvement"
                                          : technique_from_quality(
                                                summary.at("navigation_quality").get<std::string>())},
              {"cue_response", wrong_direction || wrong_region ? "needs_improvement" : "good"},
              {"trust_level",
               technique_from_quality(summary.at("trust_level").get<std::string>())}}},
            {"specific_feedback",
             {{"strengths", strengths},
              {"areas_for_improvement", areas},
              {"safety_notes", safety_notes},
              {"communication_feedback", communication}}},
            {"coaching_recommendations",
             {{"immediate_practice", practice},
              {"technique_tips", technique_tips},
              {"communication_tips", communication},
              {"safety_tips", safety_notes}}},
            {"result_summary", "Coaching for " + sub_skill + ": " + diagnosis + "."},
            {"terminal_instruction_to_user", instruction},
            {"user_actionables", actionables}};
}

// ---- param stage ----------------------------------------------------------

json stub_param(const json& payload) {
    const json& coaching = payload.at("coaching");
    std::string text = lower(coaching.at("result_summary").get<std::string>());
    for (const auto& s : coaching.at("specific_feedback").at("areas_for_improvement"))
        text += "\n" + lower(s.get<std::string>());
    for (const auto& s : coaching.at("user_actionables")) text += "\n" + lower(s.get<std::string>());
    if (payload.contains("user_feedback"))
        text += "\n" + lower(payload.at("user_feedback").get<std::string>());

    const bool wants_closer = has(text, "too far") || has(text, "closer");
    const bool wants_farther = has(text, "too close to the door") || has(text, "farther");

    std::string distance = "maintain";
    std::string reasoning;
    if (wants_closer && wants_farther) {
        reasoning = "contradictory distance feedback, keeping the current stopping position";
    } else if (wants_closer) {
        distance = "closer";
        reasoning = "user stands too far away from the door, stopping position moves closer";
    } else if (wants_farther) {
        distance = "farther";
        reasoning = "user is cramped at the door, stopping position moves farther";
    }

    std::string pointing = "maintain";
    if (has(text, "wrong direction")) {
        pointing = has(text, "left") ? "more_left" : "more_right";
        if (!reasoning.empty()) reasoning += "; ";
        reasoning += "search direction was wrong, pointing direction shifts";
    }
    if (reasoning.empty()) reasoning = "no spatial issue diagnosed, parameters unchanged";

    return {{"distance_to_door_adjustment", distance},
            {"pointing_direction_adjustment", pointing},
            {"reasoning", reasoning}};
}

}  // namespace

BackendResponse StubBackend::complete(const BackendRequest& request) {
    json out;
    switch (request.stage) {
        case StageId::frame: out = stub_frame(request.payload); break;
        case StageId::timeline: out = stub_timeline(request.payload); break;
        case StageId::coach: out = stub_coach(request.payload); break;
        case StageId::param: out = stub_param(request.payload); break;
        default: throw TransportError("stub backend: unrecognized stage id");
    }
    return {out.dump()};
}

}  // namespace skillcoach::pipeline
