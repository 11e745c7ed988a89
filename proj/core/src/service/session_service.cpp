#include "riskkit/service/session_service.hpp"

#include "riskkit/error.hpp"
#include "riskkit/io/serialize.hpp"
#include "riskkit/io/time.hpp"
#include "riskkit/policy/fixtures.hpp"

#include <fmt/format.h>

#include <random>

namespace riskkit::service {

std::string random_uuid() {
    static thread_local std::mt19937_64 engine{std::random_device{}()};
    std::uint64_t hi = engine();
    std::uint64_t lo = engine();
    hi = (hi & 0xffffffffffff0fffULL) | 0x0000000000004000ULL;
    lo = (lo & 0x3fffffffffffffffULL) | 0x8000000000000000ULL;
    return fmt::format("{:08x}-{:04x}-{:04x}-{:04x}-{:012x}", hi >> 32, (hi >> 16) & 0xffff, hi & 0xffff,
                       lo >> 48, lo & 0xffffffffffffULL);
}

ServiceHooks default_hooks() { return {random_uuid, io::now_iso8601}; }

SessionService::SessionService(SessionStore& store, ServiceHooks hooks)
    : store_(store), hooks_(std::move(hooks)) {}

std::mutex& SessionService::lock_for(const std::string& id) {
    std::lock_guard guard(registry_mutex_);
    auto& slot = locks_[id];
    if (!slot) {
        slot = std::make_unique<std::mutex>();
    }
    return *slot;
}

SessionEnvelope SessionService::create(elicitation::Protocol protocol,
                                       const elicitation::SessionOptions& options) {
    const auto id = hooks_.new_id();
    std::lock_guard guard(lock_for(id));
    const auto event = create_event(protocol, options, id, hooks_.now());
    std::optional<SessionEnvelope> envelope;
    apply_event(envelope, event);
    store_.create(*envelope, event);
    return std::move(*envelope);
}

SessionEnvelope SessionService::get(const std::string& id) {
    std::lock_guard guard(lock_for(id));
    return store_.load(id);
}

io::Json SessionService::next(const std::string& id) {
    std::lock_guard guard(lock_for(id));
    std::optional<SessionEnvelope> envelope = store_.load(id);
    const auto& state = envelope->state;
    const io::Json progress{{"asked", state.asked.size()},
                            {"answered", state.answers.size()},
                            {"budget", state.options.budget}};
    if (state.status == elicitation::SessionStatus::Complete) {
        return {{"done", true}, {"progress", progress}};
    }
    const auto step = elicitation::adaptive_next_question(state);
    if (std::holds_alternative<elicitation::Done>(step)) {
        return {{"done", true}, {"progress", progress}};
    }
    const auto& question = std::get<elicitation::Question>(step);
    const bool pending = state.asked.size() > state.answers.size();
    if (!pending) {
        const auto event = ask_event(question, hooks_.now());
        apply_event(envelope, event);
        store_.append(*envelope, event);
    }
    return {{"done", false},
            {"question", io::question_to_json(question)},
            {"progress",
             {{"asked", envelope->state.asked.size()},
              {"answered", envelope->state.answers.size()},
              {"budget", envelope->state.options.budget}}}};
}

SessionEnvelope SessionService::answer(const std::string& id, const std::string& question_id,
                                       const std::string& response) {
    std::lock_guard guard(lock_for(id));
    std::optional<SessionEnvelope> envelope = store_.load(id);
    const auto event = answer_event(question_id, response, hooks_.now());
    apply_event(envelope, event);
    // The stored event carries the normalised response so replay sees the same text.
    auto stored = event;
    stored["response"] = envelope->state.answers.back().response;
    store_.append(*envelope, stored);
    return std::move(*envelope);
}

io::Json profile_json(const SessionEnvelope& envelope) {
    const auto results = envelope.results ? *envelope.results : elicitation::summarize(envelope.state);
    io::Json j = io::results_to_json(results);
    j["session_id"] = envelope.id;
    j["protocol"] = elicitation::to_string(envelope.state.protocol);
    j["status"] = elicitation::to_string(envelope.state.status);
    j["attitude"] = results.switch_point ? io::Json(elicitation::to_string(results.switch_point->attitude))
                                         : io::Json(nullptr);
    j["switch_row"] = results.switch_point && results.switch_point->switch_row
                          ? io::Json(*results.switch_point->switch_row)
                          : io::Json(nullptr);
    if (results.risk_class) {
        const auto category = results.risk_class->category;
        const auto& portfolio = policy::portfolio_policy(category);
        j["policy_preview"] = {{"airport_lead_time_hours", policy::airport_policy(category)},
                               {"portfolio",
                                {{"name", portfolio.name},
                                 {"stock_pct", portfolio.stock_pct},
                                 {"bond_pct", portfolio.bond_pct},
                                 {"cash_pct", portfolio.cash_pct}}}};
    } else {
        j["policy_preview"] = nullptr;
    }
    return j;
}

io::Json SessionService::profile(const std::string& id) {
    std::lock_guard guard(lock_for(id));
    return profile_json(store_.load(id));
}

io::Json SessionService::list() {
    io::Json out = io::Json::array();
    for (const auto& id : store_.list()) {
        std::lock_guard guard(lock_for(id));
        try {
            const auto e = store_.load(id);
            out.push_back({{"id", e.id},
                           {"protocol", elicitation::to_string(e.state.protocol)},
                           {"status", elicitation::to_string(e.state.status)},
                           {"created_at", e.created_at},
                           {"updated_at", e.updated_at},
                           {"answers", e.state.answers.size()}});
        } catch (const StorageError&) {
            out.push_back({{"id", id}, {"status", "unreadable"}});
        }
    }
    return out;
}

} // namespace riskkit::service
