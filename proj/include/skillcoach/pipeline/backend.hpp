#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "skillcoach/pipeline/schema.hpp"

namespace skillcoach::pipeline {

/// A stage request: which stage, which prompt template, and the stage's
/// structured payload. Backends are interchangeable; the pipeline's
/// behavior depends only on the response text.
struct BackendRequest {
    StageId stage = StageId::frame;
    std::string template_id;
    nlohmann::json payload;
};

struct BackendResponse {
    std::string text;  // expected to contain one schema-conformant object
};

class Backend {
public:
    virtual ~Backend() = default;
    /// Throws TransportError when the service cannot be reached.
    virtual BackendResponse complete(const BackendRequest& request) = 0;
};

/// Deterministic rule-based test double. Maps description keywords to
/// frame states, thresholds time efficiency for summary quality, and maps
/// diagnosed failure modes to the corresponding corrections and robot
/// parameter changes. No randomness anywhere.
class StubBackend : public Backend {
public:
    BackendResponse complete(const BackendRequest& request) override;
};

/// HTTP backend: POSTs the request as JSON to <base_url><path> and returns
/// the response body. Reads the bearer credential from the environment
/// variable named by credential_env at call time.
class RemoteBackend : public Backend {
public:
    explicit RemoteBackend(std::string endpoint_url,
                           std::string credential_env = "SKILLCOACH_BACKEND_TOKEN");
    BackendResponse complete(const BackendRequest& request) override;

private:
    std::string host_base_;  // scheme://host[:port]
    std::string path_;
    std::string credential_env_;
};

}  // namespace skillcoach::pipeline
