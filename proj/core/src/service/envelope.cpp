#include "riskkit/service/envelope.hpp"

#include "riskkit/error.hpp"
#include "riskkit/io/serialize.hpp"

#include <fmt/format.h>

namespace riskkit::service {

io::Json envelope_to_json(const SessionEnvelope& e) {
    return {{"id", e.id},
            {"protocol", elicitation::to_string(e.state.protocol)},
            {"status", elicitation::to_string(e.state.status)},
            {"created_at", e.created_at},
            {"updated_at", e.updated_at},
            {"state", io::session_state_to_json(e.state)},
            {"results", e.results ? io::results_to_json(*e.results) : io::Json(nullptr)}};
}

SessionEnvelope envelope_from_json(const io::Json& j) {
    try {
        SessionEnvelope e;
        e.id = j.at("id").get<std::string>();
        e.created_at = j.at("created_at").get<std::string>();
        e.updated_at = j.at("updated_at").get<std::string>();
        e.state = io::session_state_from_json(j.at("state"));
        if (e.state.id != e.id) {
            throw ValidationError(fmt::format("envelope id {} does not match state id {}", e.id, e.state.id));
        }
        // Results are derived data; recompute rather than trust the stored copy.
        if (e.state.status == elicitation::SessionStatus::Complete) {
            e.results = elicitation::summarize(e.state);
        }
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(fmt::format("session envelope: {}", ex.what()));
    }
}

io::Json create_event(elicitation::Protocol protocol, const elicitation::SessionOptions& options,
                      const std::string& id, const std::string& timestamp) {
    return {{"type", "create"},
            {"id", id},
            {"protocol", elicitation::to_string(protocol)},
            {"options", io::session_options_to_json(options)},
            {"timestamp", timestamp}};
}

io::Json ask_event(const elicitation::Question& question, const std::string& timestamp) {
    return {{"type", "ask"}, {"question", io::question_to_json(question)}, {"timestamp", timestamp}};
}

io::Json answer_event(std::string_view question_id, std::string_view response,
                      const std::string& timestamp) {
    return {{"type", "answer"},
            {"question_id", question_id},
            {"response", response},
            {"timestamp", timestamp}};
}

void apply_event(std::optional<SessionEnvelope>& envelope, const io::Json& event) {
    try {
        const auto type = event.at("type").get<std::string>();
        const auto timestamp = event.at("timestamp").get<std::string>();
        if (type == "create") {
            if (envelope) {
                throw ValidationError("create event on an existing session");
            }
            SessionEnvelope e;
            e.id = event.at("id").get<std::string>();
            e.created_at = timestamp;
            e.updated_at = timestamp;
            e.state = elicitation::new_session(
                e.id, elicitation::parse_protocol(event.at("protocol").get<std::string>()),
                io::session_options_from_json(event.at("options")));
            envelope = std::move(e);
            return;
        }
        if (!envelope) {
            throw ValidationError(fmt::format("'{}' event before create", type));
        }
        if (type == "ask") {
            elicitation::mark_asked(envelope->state, io::question_from_json(event.at("question")));
        } else if (type == "answer") {
            elicitation::apply_answer(envelope->state, event.at("question_id").get<std::string>(),
                                      event.at("response").get<std::string>(), timestamp);
        } else {
            throw ValidationError(fmt::format("unknown event type '{}'", type));
        }
        envelope->updated_at = timestamp;
        if (envelope->state.status == elicitation::SessionStatus::Complete) {
            envelope->results = elicitation::summarize(envelope->state);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(fmt::format("session event: {}", ex.what()));
    }
}

SessionEnvelope replay(const std::vector<io::Json>& events) {
    std::optional<SessionEnvelope> envelope;
    for (const auto& e : events) {
        apply_event(envelope, e);
    }
    if (!envelope) {
        throw ValidationError("empty session log");
    }
    return std::move(*envelope);
}

} // namespace riskkit::service
