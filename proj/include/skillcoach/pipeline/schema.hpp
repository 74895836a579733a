#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace skillcoach::pipeline {

enum class StageId { frame, timeline, coach, param };

std::string to_string(StageId stage);

enum class FieldType { boolean, number, string, enum_string, string_array, object };

/// One field of a closed stage schema.
struct FieldSpec {
    std::string name;
    FieldType type = FieldType::string;
    bool required = true;
    bool auto_filled = false;  // supplied by the pipeline, tolerated if absent
    bool non_empty = false;    // strings only
    std::size_t min_items = 0; // arrays only
    std::vector<std::string> enum_values;
    std::string enum_fallback;  // substituted for out-of-set enum values
    std::vector<FieldSpec> children;  // object fields
    std::string description;
};

/// A closed object schema: the full field set is known, unknown extra
/// fields are dropped during validation.
struct ObjectSchema {
    std::string id;
    std::string title;
    std::vector<FieldSpec> fields;
    nlohmann::json example;

    /// JSON Schema (draft-07 subset) rendering, with the example embedded
    /// under "examples".
    nlohmann::json to_json_schema() const;
};

const ObjectSchema& frame_state_schema();
const ObjectSchema& episode_summary_schema();   // the decision schema
const ObjectSchema& coaching_action_schema();
const ObjectSchema& robot_adjustment_schema();
const ObjectSchema& baseline_instruction_schema();  // single-field baseline format

const ObjectSchema& schema_for(StageId stage);

/// All exportable schemas in their shipped order.
std::vector<const ObjectSchema*> all_schemas();

struct RepairOutcome {
    enum class Status { ok, repaired, rejected };
    Status status = Status::rejected;
    nlohmann::json value;               // schema-conformant when not rejected
    std::vector<std::string> notes;     // repairs applied or the rejection cause
};

/// Extracts the first balanced, parseable JSON object embedded in text.
std::optional<nlohmann::json> extract_first_object(const std::string& text);

/// Validates raw backend text against a closed schema. Unknown fields are
/// dropped; out-of-set enum values are replaced by the field's fallback
/// (the object is otherwise kept); missing required fields, type
/// mismatches or unparseable text reject the response, which callers
/// resolve with one regeneration and then the stage fallback.
RepairOutcome validate_and_repair(const std::string& raw_text, const ObjectSchema& schema);

/// Same checks on an already-parsed object.
RepairOutcome validate_object(const nlohmann::json& object, const ObjectSchema& schema);

}  // namespace skillcoach::pipeline
