#include <cstdlib>

#include <httplib.h>

#include "skillcoach/errors.hpp"
#include "skillcoach/pipeline/backend.hpp"

namespace skillcoach::pipeline {

RemoteBackend::RemoteBackend(std::string endpoint_url, std::string credential_env)
    : credential_env_(std::move(credential_env)) {
    // Split scheme://host[:port] from the request path.
    const auto scheme_end = endpoint_url.find("://");
    const std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const auto path_start = endpoint_url.find('/', host_start);
    if (path_start == std::string::npos) {
        host_base_ = endpoint_url;
        path_ = "/v1/complete";
    } else {
        host_base_ = endpoint_url.substr(0, path_start);
        path_ = endpoint_url.substr(path_start);
    }
    if (host_base_.empty()) throw ConfigError("remote backend: empty endpoint URL");
}

BackendResponse RemoteBackend::complete(const BackendRequest& request) {
    httplib::Client client(host_base_);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(30, 0);

    httplib::Headers headers;
    if (const char* token = std::getenv(credential_env_.c_str()); token && *token)
        headers.emplace("Authorization", std::string("Bearer ") + token);

    const nlohmann::json body = {{"stage", to_string(request.stage)},
                                 {"template_id", request.template_id},
                                 {"payload", request.payload}};
    const auto result = client.Post(path_, headers, body.dump(), "application/json");
    if (!result)
        throw TransportError("remote backend unreachable: " + host_base_ + " (" +
                             httplib::to_string(result.error()) + ")");
    if (result->status != 200)
        throw TransportError("remote backend returned HTTP " + std::to_string(result->status));
    return {result->body};
}

}  // namespace skillcoach::pipeline
