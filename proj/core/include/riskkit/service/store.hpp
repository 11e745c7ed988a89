#pragma once

#include "riskkit/io/json.hpp"
#include "riskkit/service/envelope.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace riskkit::service {

struct LogEntry {
    std::uint64_t seq = 0;
    io::Json event;
    io::Json envelope;
};

/// Flat-file session storage: `<id>.log.jsonl` gets one line per event
/// (event plus resulting envelope) and `<id>.snapshot.json` holds the latest
/// envelope, replaced by write-then-rename. Callers serialise writes per id.
class SessionStore {
public:
    explicit SessionStore(std::filesystem::path directory);

    const std::filesystem::path& directory() const noexcept { return directory_; }

    /// Throws ConflictError if the id exists.
    void create(const SessionEnvelope& envelope, const io::Json& event);
    void append(const SessionEnvelope& envelope, const io::Json& event);

    bool exists(std::string_view id) const;
    /// Latest envelope. A missing or unreadable snapshot falls back to the
    /// last complete log line. Throws NotFoundError for unknown ids.
    SessionEnvelope load(std::string_view id) const;
    /// Complete log lines; a torn final line is skipped.
    std::vector<LogEntry> read_log(std::string_view id) const;
    /// Session ids, sorted.
    std::vector<std::string> list() const;

    std::filesystem::path log_path(std::string_view id) const;
    std::filesystem::path snapshot_path(std::string_view id) const;

private:
    void write(const SessionEnvelope& envelope, const io::Json& event, std::uint64_t seq);

    std::filesystem::path directory_;
};

/// Session ids are restricted to [0-9a-zA-Z_-] so they are safe file names.
bool valid_session_id(std::string_view id) noexcept;

} // namespace riskkit::service
