#pragma once

#include "riskkit/elicitation/instruments.hpp"
#include "riskkit/lottery.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace riskkit::elicitation {

enum class Protocol { MPL, RandomPairs, OrderedMenu, GeneralRisk, Allais };

std::string_view to_string(Protocol p) noexcept;
/// Accepts the wire names (mpl, pairs, menu, general, allais).
Protocol parse_protocol(std::string_view text);

/// One observed binary choice.
struct ChoiceRecord {
    std::string session_id;
    std::string question_id;
    Protocol protocol = Protocol::MPL;
    Lottery option_a = Lottery::sure(0.0);
    Lottery option_b = Lottery::sure(0.0);
    Choice chosen = Choice::A;
    std::string timestamp;

    const Lottery& chosen_option() const { return chosen == Choice::A ? option_a : option_b; }
    const Lottery& rejected_option() const { return chosen == Choice::A ? option_b : option_a; }
};

inline constexpr std::string_view kChoiceCsvHeader =
    "session_id,question_id,protocol,option_a_json,option_b_json,chosen,timestamp_iso8601";

/// RFC 4180 CSV with kChoiceCsvHeader; lottery columns hold [[p, x], ...] JSON.
void write_choice_csv(std::ostream& out, std::span<const ChoiceRecord> records);
std::vector<ChoiceRecord> read_choice_csv(std::istream& in);

} // namespace riskkit::elicitation
