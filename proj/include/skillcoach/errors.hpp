#pragma once

#include <stdexcept>
#include <string>

namespace skillcoach {

/// Invalid or inconsistent configuration (bad file, bad ranges, unknown keys).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Statistical routine called on degenerate input (sample too small, zero variance).
class StatisticsError : public std::runtime_error {
public:
    explicit StatisticsError(const std::string& what) : std::runtime_error(what) {}
};

/// Episode/input file failed structural validation; message names the offending field.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Backend unreachable or protocol-level failure. Aborts the episode, no partial output.
class TransportError : public std::runtime_error {
public:
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skillcoach
