#pragma once

#include "riskkit/policy/track_record.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace riskkit::cli {

enum class OutputFormat { Json, Text };

struct Config {
    std::string store = "riskkit-store";
    std::string host = "127.0.0.1";
    int port = 8080;
    int budget = 20;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> static_dir;
    policy::TravelDomain travel_domain;

    /// Throws ValidationError: budget >= 1, port in [1, 65535].
    void validate() const;
};

inline constexpr const char* kStoreEnvironmentVariable = "RISKKIT_STORE";

/// Defaults, then the config file (if any), then RISKKIT_STORE.
Config load_config(const std::optional<std::string>& path);

OutputFormat parse_format(std::string_view text);

} // namespace riskkit::cli
