#include "config.hpp"

#include "riskkit/error.hpp"
#include "riskkit/io/json.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace riskkit::cli {

void Config::validate() const {
    if (budget < 1) {
        throw ValidationError(fmt::format("budget must be >= 1, got {}", budget));
    }
    if (port < 1 || port > 65535) {
        throw ValidationError(fmt::format("port must be in [1, 65535], got {}", port));
    }
    if (store.empty()) {
        throw ValidationError("store path is empty");
    }
    travel_domain.validate();
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "text") {
        return OutputFormat::Text;
    }
    throw ValidationError(fmt::format("unknown output format '{}' (expected json or text)", text));
}

Config load_config(const std::optional<std::string>& path) {
    Config c;
    if (path) {
        std::ifstream in(*path);
        if (!in) {
            throw StorageError(fmt::format("cannot read config file {}", *path));
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        const auto j = io::parse_json(buffer.str(), *path);
        if (!j.is_object()) {
            throw ValidationError(fmt::format("config file {} must hold a JSON object", *path));
        }
        try {
            c.store = j.value("store", c.store);
            c.host = j.value("host", c.host);
            c.port = j.value("port", c.port);
            c.budget = j.value("budget", c.budget);
            c.seed = j.value("seed", c.seed);
            if (j.contains("format")) {
                c.format = parse_format(j.at("format").get<std::string>());
            }
            if (j.contains("static_dir")) {
                c.static_dir = j.at("static_dir").get<std::string>();
            }
            if (j.contains("travel_domain")) {
                const auto& d = j.at("travel_domain");
                c.travel_domain = d.is_string() ? policy::load_travel_domain(d.get<std::string>())
                                                : policy::travel_domain_from_json(d);
            }
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(fmt::format("config file {}: {}", *path, e.what()));
        }
    }
    if (const char* store = std::getenv(kStoreEnvironmentVariable); store != nullptr && *store != '\0') {
        c.store = store;
    }
    c.validate();
    return c;
}

} // namespace riskkit::cli
