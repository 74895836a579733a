#include "skillcoach/pipeline/schema.hpp"

#include <stdexcept>

namespace skillcoach::pipeline {

namespace {

using nlohmann::json;

const std::vector<std::string> kUserStates = {
    "unknown", "approaching", "positioned", "interacting", "completed",
    "stuck",   "retreating",  "hesitant",   "confused",    "searching"};
const std::vector<std::string> kRobotStates = {"unknown",   "guiding",    "waiting",
                                               "signaling", "assisting",  "monitoring",
                                               "stopped",   "adjusting"};
const std::vector<std::string> kConnectionStates = {"connected", "loose", "disconnected",
                                                    "unknown"};
const std::vector<std::string> kEnvironmentStates = {"unknown", "clear", "cluttered", "hazardous",
                                                     "changing"};
const std::vector<std::string> kTaskProgress = {"not_started",     "in_progress",
                                                "nearly_complete", "complete",
                                                "failed",          "interrupted"};
const std::vector<std::string> kQuality = {"excellent", "good", "fair", "poor", "very_poor"};
const std::vector<std::string> kTechnique = {"excellent", "good", "needs_improvement", "poor"};
const std::vector<std::string> kDistance = {"closer", "farther", "maintain"};
const std::vector<std::string> kPointing = {"more_left", "more_right", "maintain"};

FieldSpec enum_field(std::string name, const std::vector<std::string>& values,
                     std::string fallback, std::string description = {}) {
    FieldSpec f;
    f.name = std::move(name);
    f.type = FieldType::enum_string;
    f.enum_values = values;
    f.enum_fallback = std::move(fallback);
    f.description = std::move(description);
    return f;
}

FieldSpec bool_field(std::string name, std::string description = {}) {
    FieldSpec f;
    f.name = std::move(name);
    f.type = FieldType::boolean;
    f.description = std::move(description);
    return f;
}

FieldSpec number_field(std::string name, std::string description = {}) {
    FieldSpec f;
    f.name = std::move(name);
    f.type = FieldType::number;
    f.description = std::move(description);
    return f;
}

FieldSpec string_field(std::string name, bool non_empty = false, std::string description = {}) {
    FieldSpec f;
    f.name = std::move(name);
    f.type = FieldType::string;
    f.non_empty = non_empty;
    f.description = std::move(description);
    return f;
}

FieldSpec array_field(std::string name, std::size_t min_items = 0, std::string description = {}) {
    FieldSpec f;
    f.name = std::move(name);
    f.type = FieldType::string_array;
    f.min_items = min_items;
    f.description = std::move(description);
    return f;
}

FieldSpec object_field(std::string name, std::vector<FieldSpec> children,
                       std::string description = {}) {
    FieldSpec f;
    f.name = std::move(name);
    f.type = FieldType::object;
    f.children = std::move(children);
    f.description = std::move(description);
    return f;
}

ObjectSchema build_frame_state_schema() {
    ObjectSchema s;
    s.id = "skillcoach.schemas.frame_state";
    s.title = "Per-frame symbolic state";
    FieldSpec ts = number_field("timestamp_sec", "frame capture time in seconds");
    ts.auto_filled = true;  // the pipeline copies it from the input frame
    s.fields = {
        ts,
        enum_field("user_state", kUserStates, "unknown"),
        enum_field("robot_state", kRobotStates, "unknown"),
        enum_field("connection_state", kConnectionStates, "unknown",
                   "status of leash/harness connection between user and robot"),
        enum_field("environment_state", kEnvironmentStates, "unknown"),
        enum_field("task_progress", kTaskProgress, "not_started"),
        bool_field("safety_concerns", "are there any safety issues present"),
        bool_field("user_difficulties",
                   "is the user experiencing any difficulties or challenges"),
        string_field("frame_description", false,
                     "a brief description of the frame, noting any challenges, safety issues, "
                     "or user difficulties"),
    };
    s.example = {{"timestamp_sec", 5.0},
                 {"user_state", "searching"},
                 {"robot_state", "waiting"},
                 {"connection_state", "connected"},
                 {"environment_state", "clear"},
                 {"task_progress", "in_progress"},
                 {"safety_concerns", false},
                 {"user_difficulties", true},
                 {"frame_description",
                  "user positioned far from the door, hand searching for the handle"}};
    return s;
}

ObjectSchema build_episode_summary_schema() {
    ObjectSchema s;
    s.id = "skillcoach.schemas.episode_summary";
    s.title = "Episode decision summary";
    s.fields = {
        bool_field("success", "did user successfully complete the navigation task"),
        enum_field("navigation_quality", kQuality, "fair"),
        number_field("time_efficiency", "actual_time / target_time ratio"),
        enum_field("safety_rating", kQuality, "fair"),
        enum_field("following_technique", kQuality, "fair"),
        bool_field("communication_effectiveness", "was user-robot communication clear"),
        enum_field("trust_level", kQuality, "fair"),
        array_field("issues_encountered", 0, "list of any problems"),
        string_field("result_summary", false, "brief outcome description"),
        string_field("timeline_summary", false,
                     "detailed chronological summary of what the user did at key timestamps"),
    };
    s.example = {{"success", true},
                 {"navigation_quality", "good"},
                 {"time_efficiency", 1.2},
                 {"safety_rating", "excellent"},
                 {"following_technique", "good"},
                 {"communication_effectiveness", true},
                 {"trust_level", "good"},
                 {"issues_encountered", json::array()},
                 {"result_summary", "Task completed safely."},
                 {"timeline_summary", "At 0.0s: user approached the door. At 8.7s: user arrived."}};
    return s;
}

ObjectSchema build_coaching_action_schema() {
    ObjectSchema s;
    s.id = "skillcoach.schemas.coaching_action";
    s.title = "Coaching action";
    FieldSpec instruction = string_field(
        "terminal_instruction_to_user", true,
        "terminal instruction to the user, mistakes first, then actionable steps, maximum two "
        "steps");
    s.fields = {
        object_field("technique_assessment",
                     {enum_field("following_technique", kTechnique, "needs_improvement"),
                      enum_field("distance_maintenance", kTechnique, "needs_improvement"),
                      enum_field("cue_response", kTechnique, "needs_improvement"),
                      enum_field("trust_level", kTechnique, "needs_improvement")}),
        object_field("specific_feedback",
                     {array_field("strengths", 0, "list of things done well"),
                      array_field("areas_for_improvement", 0,
                                  "list of navigation technique improvements"),
                      array_field("safety_notes", 0,
                                  "list of safety observations during navigation"),
                      array_field("communication_feedback", 0,
                                  "specific feedback about robot communication")}),
        object_field("coaching_recommendations",
                     {array_field("immediate_practice", 0,
                                  "navigation skills to practice in next session"),
                      array_field("technique_tips", 0,
                                  "specific navigation technique improvements"),
                      array_field("communication_tips", 0,
                                  "how to better notice and respond to robot signals"),
                      array_field("safety_tips", 0, "safety practices for navigation")}),
        string_field("result_summary", false, "brief navigation coaching summary"),
        instruction,
        array_field("user_actionables", 1, "actionable navigation suggestions"),
    };
    s.example = {
        {"technique_assessment",
         {{"following_technique", "good"},
          {"distance_maintenance", "needs_improvement"},
          {"cue_response", "good"},
          {"trust_level", "good"}}},
        {"specific_feedback",
         {{"strengths", json::array({"completed the task"})},
          {"areas_for_improvement",
           json::array({"position closer to the door before grasping the handle"})},
          {"safety_notes", json::array()},
          {"communication_feedback", json::array()}}},
        {"coaching_recommendations",
         {{"immediate_practice", json::array({"practice stopping at arm's length from the door"})},
          {"technique_tips", json::array({"stop closer to the door"})},
          {"communication_tips", json::array()},
          {"safety_tips", json::array()}}},
        {"result_summary", "User succeeded but stood too far from the door."},
        {"terminal_instruction_to_user",
         "Step 1: move closer to the door. Step 2: reach for the handle."},
        {"user_actionables",
         json::array({"position yourself closer to the door before grasping the handle"})}};
    return s;
}

ObjectSchema build_robot_adjustment_schema() {
    ObjectSchema s;
    s.id = "skillcoach.schemas.robot_adjustment";
    s.title = "Robot parameter adjustment";
    s.fields = {
        enum_field("distance_to_door_adjustment", kDistance, "maintain",
                   "adjust distance robot maintains to door"),
        enum_field("pointing_direction_adjustment", kPointing, "maintain",
                   "adjust horizontal pointing direction (left/center/right)"),
        string_field("reasoning", false,
                     "explanation for navigation parameter adjustments based on user safety and "
                     "comfort"),
    };
    s.example = {{"distance_to_door_adjustment", "closer"},
                 {"pointing_direction_adjustment", "maintain"},
                 {"reasoning", "user stands too far away from the door"}};
    return s;
}

ObjectSchema build_baseline_instruction_schema() {
    ObjectSchema s;
    s.id = "skillcoach.schemas.baseline_instruction";
    s.title = "Baseline single-field instruction";
    s.fields = {string_field("terminal_instruction_to_user", true,
                             "terminal instruction to the user, mistakes first, then actionable "
                             "steps, maximum two steps")};
    s.example = {{"terminal_instruction_to_user",
                  "Step 1: move closer to the door. Step 2: reach for the handle."}};
    return s;
}

json field_to_json_schema(const FieldSpec& f) {
    json p;
    switch (f.type) {
        case FieldType::boolean: p["type"] = "boolean"; break;
        case FieldType::number: p["type"] = "number"; break;
        case FieldType::string:
            p["type"] = "string";
            if (f.non_empty) p["minLength"] = 1;
            break;
        case FieldType::enum_string:
            p["type"] = "string";
            p["enum"] = f.enum_values;
            break;
        case FieldType::string_array:
            p["type"] = "array";
            p["items"] = {{"type", "string"}};
            if (f.min_items > 0) p["minItems"] = f.min_items;
            break;
        case FieldType::object: {
            p["type"] = "object";
            p["additionalProperties"] = false;
            json props = json::object();
            json required = json::array();
            for (const auto& c : f.children) {
                props[c.name] = field_to_json_schema(c);
                if (c.required) required.push_back(c.name);
            }
            p["properties"] = props;
            p["required"] = required;
            break;
        }
    }
    if (!f.description.empty()) p["description"] = f.description;
    return p;
}

}  // namespace

std::string to_string(StageId stage) {
    switch (stage) {
        case StageId::frame: return "frame";
        case StageId::timeline: return "timeline";
        case StageId::coach: return "coach";
        case StageId::param: return "param";
    }
    return "unknown";
}

json ObjectSchema::to_json_schema() const {
    json s;
    s["$schema"] = "http://json-schema.org/draft-07/schema#";
    s["$id"] = id;
    s["title"] = title;
    s["type"] = "object";
    s["additionalProperties"] = false;
    json props = json::object();
    json required = json::array();
    for (const auto& f : fields) {
        props[f.name] = field_to_json_schema(f);
        if (f.required) required.push_back(f.name);
    }
    s["properties"] = props;
    s["required"] = required;
    s["examples"] = json::array({example});
    return s;
}

const ObjectSchema& frame_state_schema() {
    static const ObjectSchema s = build_frame_state_schema();
    return s;
}
const ObjectSchema& episode_summary_schema() {
    static const ObjectSchema s = build_episode_summary_schema();
    return s;
}
const ObjectSchema& coaching_action_schema() {
    static const ObjectSchema s = build_coaching_action_schema();
    return s;
}
const ObjectSchema& robot_adjustment_schema() {
    static const ObjectSchema s = build_robot_adjustment_schema();
    return s;
}
const ObjectSchema& baseline_instruction_schema() {
    static const ObjectSchema s = build_baseline_instruction_schema();
    return s;
}

const ObjectSchema& schema_for(StageId stage) {
    switch (stage) {
        case StageId::frame: return frame_state_schema();
        case StageId::timeline: return episode_summary_schema();
        case StageId::coach: return coaching_action_schema();
        case StageId::param: return robot_adjustment_schema();
    }
    throw std::logic_error("schema_for: unreachable stage");
}

std::vector<const ObjectSchema*> all_schemas() {
    return {&frame_state_schema(), &episode_summary_schema(), &coaching_action_schema(),
            &robot_adjustment_schema(), &baseline_instruction_schema()};
}

std::optional<json> extract_first_object(const std::string& text) {
    for (std::size_t start = 0; start < text.size(); ++start) {
        if (text[start] != '{') continue;
        int depth = 0;
        bool in_string = false;
        bool escaped = false;
        for (std::size_t i = start; i < text.size(); ++i) {
            const char c = text[i];
            if (in_string) {
                if (escaped) {
                    escaped = false;
                } else if (c == '\\') {
                    escaped = true;
                } else if (c == '"') {
                    in_string = false;
                }
                continue;
            }
            if (c == '"') {
                in_string = true;
            } else if (c == '{') {
                ++depth;
            } else if (c == '}') {
                --depth;
                if (depth == 0) {
                    const json parsed =
                        json::parse(text.substr(start, i - start + 1), nullptr, false);
                    if (!parsed.is_discarded() && parsed.is_object()) return parsed;
                    break;  // balanced but unparseable, try the next '{'
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

void repair_fields(const json& in, const std::vector<FieldSpec>& fields, const std::string& path,
                   json& out, RepairOutcome& outcome, bool& rejected) {
    for (const auto& item : in.items()) {
        bool known = false;
        for (const auto& f : fields)
            if (f.name == item.key()) known = true;
        if (!known) outcome.notes.push_back("dropped unknown field " + path + item.key());
    }

    for (const auto& f : fields) {
        const std::string where = path + f.name;
        if (!in.contains(f.name)) {
            if (f.required && !f.auto_filled) {
                outcome.notes.push_back("missing required field " + where);
                rejected = true;
                return;
            }
            continue;
        }
        const json& v = in.at(f.name);
        switch (f.type) {
            case FieldType::boolean:
                if (!v.is_boolean()) {
                    outcome.notes.push_back("type mismatch at " + where + ": expected boolean");
                    rejected = true;
                    return;
                }
                out[f.name] = v;
                break;
            case FieldType::number:
                if (!v.is_number()) {
                    outcome.notes.push_back("type mismatch at " + where + ": expected number");
                    rejected = true;
                    return;
                }
                out[f.name] = v;
                break;
            case FieldType::string:
                if (!v.is_string()) {
                    outcome.notes.push_back("type mismatch at " + where + ": expected string");
                    rejected = true;
                    return;
                }
                if (f.non_empty && v.get<std::string>().empty()) {
                    outcome.notes.push_back("empty string at " + where);
                    rejected = true;
                    return;
                }
                out[f.name] = v;
                break;
            case FieldType::enum_string: {
                if (!v.is_string()) {
                    outcome.notes.push_back("type mismatch at " + where + ": expected string");
                    rejected = true;
                    return;
                }
                const std::string s = v.get<std::string>();
                bool in_set = false;
                for (const auto& allowed : f.enum_values)
                    if (s == allowed) in_set = true;
                if (in_set) {
                    out[f.name] = v;
                } else {
                    out[f.name] = f.enum_fallback;
                    outcome.notes.push_back("repaired enum " + where + ": '" + s + "' -> '" +
                                            f.enum_fallback + "'");
                }
                break;
            }
            case FieldType::string_array: {
                if (!v.is_array()) {
                    outcome.notes.push_back("type mismatch at " + where + ": expected array");
                    rejected = true;
                    return;
                }
                for (const auto& e : v) {
                    if (!e.is_string()) {
                        outcome.notes.push_back("type mismatch at " + where +
                                                ": expected string elements");
                        rejected = true;
                        return;
                    }
                }
                if (v.size() < f.min_items) {
                    outcome.notes.push_back("too few items at " + where);
                    rejected = true;
                    return;
                }
                out[f.name] = v;
                break;
            }
            case FieldType::object: {
                if (!v.is_object()) {
                    outcome.notes.push_back("type mismatch at " + where + ": expected object");
                    rejected = true;
                    return;
                }
                json child = json::object();
                repair_fields(v, f.children, where + ".", child, outcome, rejected);
                if (rejected) return;
                out[f.name] = child;
                break;
            }
        }
    }
}

}  // namespace

RepairOutcome validate_object(const json& object, const ObjectSchema& schema) {
    RepairOutcome outcome;
    if (!object.is_object()) {
        outcome.status = RepairOutcome::Status::rejected;
        outcome.notes.push_back("response is not a JSON object");
        return outcome;
    }
    json out = json::object();
    bool rejected = false;
    const std::size_t notes_before = outcome.notes.size();
    repair_fields(object, schema.fields, "", out, outcome, rejected);
    if (rejected) {
        outcome.status = RepairOutcome::Status::rejected;
        return outcome;
    }
    outcome.value = std::move(out);
    bool any_repair = false;
    for (std::size_t i = notes_before; i < outcome.notes.size(); ++i)
        if (outcome.notes[i].rfind("repaired", 0) == 0) any_repair = true;
    outcome.status = any_repair ? RepairOutcome::Status::repaired : RepairOutcome::Status::ok;
    return outcome;
}

RepairOutcome validate_and_repair(const std::string& raw_text, const ObjectSchema& schema) {
    const auto object = extract_first_object(raw_text);
    if (!object) {
        RepairOutcome outcome;
        outcome.status = RepairOutcome::Status::rejected;
        outcome.notes.push_back("no JSON object found in response");
        return outcome;
    }
    return validate_object(*object, schema);
}

}  // namespace skillcoach::pipeline
