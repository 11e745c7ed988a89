#pragma once

#include "riskkit/elicitation/session.hpp"
#include "riskkit/io/json.hpp"

#include <optional>
#include <string>

namespace riskkit::service {

struct SessionEnvelope {
    std::string id;
    std::string created_at;
    std::string updated_at;
    elicitation::SessionState state;
    /// Present once the session is complete.
    std::optional<elicitation::SessionResults> results;
};

io::Json envelope_to_json(const SessionEnvelope& e);
SessionEnvelope envelope_from_json(const io::Json& j);

/// Events recorded in a session log. Replaying them from an empty state
/// reproduces the envelope.
io::Json create_event(elicitation::Protocol protocol, const elicitation::SessionOptions& options,
                      const std::string& id, const std::string& timestamp);
io::Json ask_event(const elicitation::Question& question, const std::string& timestamp);
io::Json answer_event(std::string_view question_id, std::string_view response,
                      const std::string& timestamp);

/// Applies one event; a create event must come first and only once.
void apply_event(std::optional<SessionEnvelope>& envelope, const io::Json& event);

SessionEnvelope replay(const std::vector<io::Json>& events);

} // namespace riskkit::service
