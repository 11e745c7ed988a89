#include "riskkit/service/store.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

namespace riskkit::service {
namespace fs = std::filesystem;
namespace {

[[noreturn]] void fail(std::string_view action, const fs::path& path) {
    throw StorageError(fmt::format("{} {}: {}", action, path.string(), std::strerror(errno)));
}

void write_all(int fd, std::string_view data, const fs::path& path) {
    while (!data.empty()) {
        const auto n = ::write(fd, data.data(), data.size());
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            fail("cannot write", path);
        }
        data.remove_prefix(static_cast<std::size_t>(n));
    }
}

void append_line(const fs::path& path, const std::string& line) {
    const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) {
        fail("cannot open", path);
    }
    write_all(fd, line + "\n", path);
    if (::fsync(fd) != 0) {
        ::close(fd);
        fail("cannot sync", path);
    }
    ::close(fd);
}

void replace_file(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (fd < 0) {
        fail("cannot open", tmp);
    }
    write_all(fd, content, tmp);
    if (::fsync(fd) != 0) {
        ::close(fd);
        fail("cannot sync", tmp);
    }
    ::close(fd);
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        fail("cannot rename onto", path);
    }
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

bool valid_session_id(std::string_view id) noexcept {
    return !id.empty() && id.size() <= 128 && std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '-' ||
               c == '_';
    });
}

SessionStore::SessionStore(fs::path directory) : directory_(std::move(directory)) {
    std::error_code ec;
    fs::create_directories(directory_, ec);
    if (ec || !fs::is_directory(directory_)) {
        throw StorageError(fmt::format("cannot create store directory {}: {}", directory_.string(),
                                       ec ? ec.message() : "not a directory"));
    }
}

fs::path SessionStore::log_path(std::string_view id) const {
    return directory_ / (std::string(id) + ".log.jsonl");
}

fs::path SessionStore::snapshot_path(std::string_view id) const {
    return directory_ / (std::string(id) + ".snapshot.json");
}

bool SessionStore::exists(std::string_view id) const {
    return valid_session_id(id) && (fs::exists(log_path(id)) || fs::exists(snapshot_path(id)));
}

void SessionStore::write(const SessionEnvelope& envelope, const io::Json& event, std::uint64_t seq) {
    const io::Json body = envelope_to_json(envelope);
    append_line(log_path(envelope.id), io::Json{{"seq", seq}, {"event", event}, {"envelope", body}}.dump());
    replace_file(snapshot_path(envelope.id), body.dump(2) + "\n");
}

void SessionStore::create(const SessionEnvelope& envelope, const io::Json& event) {
    if (!valid_session_id(envelope.id)) {
        throw ValidationError(fmt::format("invalid session id '{}'", envelope.id));
    }
    if (exists(envelope.id)) {
        throw ConflictError(fmt::format("session {} already exists", envelope.id));
    }
    write(envelope, event, 1);
}

void SessionStore::append(const SessionEnvelope& envelope, const io::Json& event) {
    const auto log = read_log(envelope.id);
    if (log.empty()) {
        throw NotFoundError(fmt::format("session {} not found", envelope.id));
    }
    write(envelope, event, log.back().seq + 1);
}

std::vector<LogEntry> SessionStore::read_log(std::string_view id) const {
    if (!valid_session_id(id)) {
        throw NotFoundError(fmt::format("session {} not found", id));
    }
    std::ifstream in(log_path(id));
    if (!in) {
        return {};
    }
    std::vector<LogEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto j = io::Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("seq") || !j.contains("event") ||
            !j.contains("envelope")) {
            // Only the final line can be torn by a crash mid-append.
            if (in.peek() == std::char_traits<char>::eof()) {
                break;
            }
            throw StorageError(fmt::format("corrupt line in {}", log_path(id).string()));
        }
        out.push_back({j.at("seq").get<std::uint64_t>(), j.at("event"), j.at("envelope")});
    }
    return out;
}

SessionEnvelope SessionStore::load(std::string_view id) const {
    if (!exists(id)) {
        throw NotFoundError(fmt::format("session {} not found", id));
    }
    if (const auto text = read_file(snapshot_path(id))) {
        const auto j = io::Json::parse(*text, nullptr, false);
        if (!j.is_discarded()) {
            try {
                return envelope_from_json(j);
            } catch (const ValidationError&) {
                // fall through to the log
            }
        }
    }
    const auto log = read_log(id);
    if (log.empty()) {
        throw StorageError(fmt::format("session {} has no readable snapshot or log in {}", id,
                                       directory_.string()));
    }
    return envelope_from_json(log.back().envelope);
}

std::vector<std::string> SessionStore::list() const {
    std::vector<std::string> ids;
    constexpr std::string_view suffix = ".log.jsonl";
    for (const auto& entry : fs::directory_iterator(directory_)) {
        const auto name = entry.path().filename().string();
        if (name.size() > suffix.size() && name.ends_with(suffix)) {
            ids.push_back(name.substr(0, name.size() - suffix.size()));
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace riskkit::service
