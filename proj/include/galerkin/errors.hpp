#pragma once

#include <stdexcept>
#include <string>

namespace galerkin {

/// Bad or inconsistent configuration / arguments.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// NaN/Inf appeared in an evolving state.
struct BlowUpError : std::runtime_error {
    explicit BlowUpError(const std::string& what) : std::runtime_error(what) {}
};

/// A required file or archive member is absent.
struct MissingArtifactError : std::runtime_error {
    explicit MissingArtifactError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace galerkin
