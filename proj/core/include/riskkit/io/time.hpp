#pragma once

#include <chrono>
#include <string>

namespace riskkit::io {

/// "YYYY-MM-DDTHH:MM:SSZ" in UTC, second resolution.
std::string iso8601_utc(std::chrono::system_clock::time_point t);
std::string now_iso8601();

/// Fixed epoch plus offset, for reproducible timestamps in simulated data.
std::string synthetic_timestamp(std::int64_t seconds_after_epoch);

} // namespace riskkit::io
