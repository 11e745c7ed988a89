#include "riskkit/elicitation/choice_record.hpp"

#include "riskkit/error.hpp"
#include "riskkit/io/json.hpp"

#include <fmt/format.h>

#include <istream>
#include <ostream>

namespace riskkit::elicitation {
namespace {

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

/// Reads one logical CSV record (quoted fields may span lines). Returns false at EOF.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    char c = 0;
    while (in.get(c)) {
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            fields.push_back(std::move(field));
            return true;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (in_quotes) {
        throw ValidationError("unterminated quoted CSV field");
    }
    if (any) {
        fields.push_back(std::move(field));
    }
    return any;
}

} // namespace

std::string_view to_string(Protocol p) noexcept {
    switch (p) {
    case Protocol::MPL: return "mpl";
    case Protocol::RandomPairs: return "pairs";
    case Protocol::OrderedMenu: return "menu";
    case Protocol::GeneralRisk: return "general";
    case Protocol::Allais: return "allais";
    }
    return "?";
}

Protocol parse_protocol(std::string_view text) {
    for (auto p : {Protocol::MPL, Protocol::RandomPairs, Protocol::OrderedMenu, Protocol::GeneralRisk,
                   Protocol::Allais}) {
        if (text == to_string(p)) {
            return p;
        }
    }
    throw ValidationError(
        fmt::format("unknown protocol '{}' (mpl, pairs, menu, general, allais)", text));
}

void write_choice_csv(std::ostream& out, std::span<const ChoiceRecord> records) {
    out << kChoiceCsvHeader << '\n';
    for (const auto& r : records) {
        out << csv_escape(r.session_id) << ',' << csv_escape(r.question_id) << ','
            << to_string(r.protocol) << ',' << csv_escape(io::lottery_to_json(r.option_a).dump())
            << ',' << csv_escape(io::lottery_to_json(r.option_b).dump()) << ',' << to_char(r.chosen)
            << ',' << csv_escape(r.timestamp) << '\n';
    }
}

std::vector<ChoiceRecord> read_choice_csv(std::istream& in) {
    std::vector<std::string> fields;
    if (!read_csv_record(in, fields)) {
        throw ValidationError("choice CSV is empty (missing header)");
    }
    std::string header;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        header += (i ? "," : "") + fields[i];
    }
    if (header != kChoiceCsvHeader) {
        throw ValidationError(fmt::format("unexpected choice CSV header '{}'", header));
    }
    std::vector<ChoiceRecord> records;
    std::size_t line = 1;
    while (read_csv_record(in, fields)) {
        ++line;
        if (fields.size() == 1 && fields[0].empty()) {
            continue;
        }
        if (fields.size() != 7) {
            throw ValidationError(
                fmt::format("choice CSV record {} has {} fields, expected 7", line, fields.size()));
        }
        try {
            ChoiceRecord r;
            r.session_id = fields[0];
            r.question_id = fields[1];
            r.protocol = parse_protocol(fields[2]);
            r.option_a = io::lottery_from_json(io::parse_json(fields[3], "option_a_json"));
            r.option_b = io::lottery_from_json(io::parse_json(fields[4], "option_b_json"));
            r.chosen = parse_choice(fields[5]);
            r.timestamp = fields[6];
            records.push_back(std::move(r));
        } catch (const ValidationError& e) {
            throw ValidationError(fmt::format("choice CSV record {}: {}", line, e.what()));
        }
    }
    return records;
}

} // namespace riskkit::elicitation
