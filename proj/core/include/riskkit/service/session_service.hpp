#pragma once

#include "riskkit/service/store.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace riskkit::service {

struct ServiceHooks {
    std::function<std::string()> new_id;
    std::function<std::string()> now;
};

/// Random version-4 UUID.
std::string random_uuid();
ServiceHooks default_hooks();

/// Session operations over a store, serialised per session id.
class SessionService {
public:
    explicit SessionService(SessionStore& store, ServiceHooks hooks = default_hooks());

    SessionEnvelope create(elicitation::Protocol protocol, const elicitation::SessionOptions& options);
    SessionEnvelope get(const std::string& id);
    /// {"done": true} or {"done": false, "question": ..., "progress": {...}}.
    /// Repeated calls return the same pending question.
    io::Json next(const std::string& id);
    SessionEnvelope answer(const std::string& id, const std::string& question_id,
                           const std::string& response);
    /// Class, fit and policy preview from the answers so far.
    io::Json profile(const std::string& id);
    /// One summary object per stored session.
    io::Json list();

    SessionStore& store() noexcept { return store_; }

private:
    std::mutex& lock_for(const std::string& id);

    SessionStore& store_;
    ServiceHooks hooks_;
    std::mutex registry_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>, std::less<>> locks_;
};

/// Profile payload for an envelope: results, class and policy preview.
io::Json profile_json(const SessionEnvelope& envelope);

} // namespace riskkit::service
