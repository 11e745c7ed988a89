#include "riskkit/io/time.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <ctime>

namespace riskkit::io {

std::string iso8601_utc(std::chrono::system_clock::time_point t) {
    const std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    return fmt::format("{:%Y-%m-%dT%H:%M:%S}Z", tm);
}

std::string now_iso8601() { return iso8601_utc(std::chrono::system_clock::now()); }

std::string synthetic_timestamp(std::int64_t seconds_after_epoch) {
    // 2000-01-01T00:00:00Z
    constexpr std::int64_t kEpoch = 946684800;
    return iso8601_utc(std::chrono::system_clock::time_point(
        std::chrono::seconds(kEpoch + seconds_after_epoch)));
}

} // namespace riskkit::io
