#include "commands.hpp"

#include "riskkit/calibration/fit.hpp"
#include "riskkit/calibration/simulation.hpp"
#include "riskkit/error.hpp"
#include "riskkit/io/serialize.hpp"
#include "riskkit/policy/fixtures.hpp"
#include "riskkit/random.hpp"
#include "riskkit/service/http_server.hpp"
#include "riskkit/service/session_service.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

namespace riskkit::cli {
namespace {

using io::Json;

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string money(double amount) {
    const double cents = elicitation::round_to_cents(amount);
    return cents < 0 ? fmt::format("-${:.2f}", -cents) : fmt::format("${:.2f}", cents);
}

std::string describe(const Lottery& lottery) {
    std::string out;
    for (const auto& b : lottery.branches()) {
        if (!out.empty()) {
            out += ", ";
        }
        out += fmt::format("{:g}: {}", b.probability, money(b.outcome));
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

std::map<std::string, double> parse_params(std::string_view text) {
    std::map<std::string, double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ValidationError(fmt::format("parameter '{}' is not of the form name=value", item));
        }
        const auto name = trim(std::string_view(item).substr(0, eq));
        const auto value_text = trim(std::string_view(item).substr(eq + 1));
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(value_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value_text.size()) {
            throw ValidationError(fmt::format("parameter {} has non-numeric value '{}'", name, value_text));
        }
        out[name] = value;
    }
    return out;
}

std::vector<elicitation::ChoiceRecord> read_records(const std::string& path, std::istream& in) {
    if (path == "-") {
        return elicitation::read_choice_csv(in);
    }
    std::ifstream file(path);
    if (!file) {
        throw StorageError(fmt::format("cannot read records file {}", path));
    }
    return elicitation::read_choice_csv(file);
}

Json question_json(const elicitation::BinaryQuestion& q) {
    return {{"id", q.id},
            {"option_a", io::lottery_to_json(q.option_a)},
            {"option_b", io::lottery_to_json(q.option_b)}};
}

std::string parameter_text(const models::ModelSpec& model) {
    std::string out;
    for (const auto& [name, value] : model.named_parameters()) {
        out += fmt::format("{}{}={:.4f}", out.empty() ? "" : " ", name, value);
    }
    return out;
}

void print_fit_text(std::ostream& out, const calibration::FitResult& f) {
    fmt::print(out, "family      {}\n", models::to_string(f.model.family()));
    for (const auto& [name, value] : f.model.named_parameters()) {
        const bool pinned =
            std::find(f.diagnostics.pinned.begin(), f.diagnostics.pinned.end(), name) != f.diagnostics.pinned.end();
        fmt::print(out, "{:<11} {:.4f}{}\n", name, value, pinned ? " (pinned)" : "");
    }
    fmt::print(out, "sharpness   {:.4g}\n", f.choice_sharpness);
    fmt::print(out, "log-lik     {:.4f}\n", f.log_likelihood);
    fmt::print(out, "AIC         {:.4f}\n", f.aic);
    fmt::print(out, "BIC         {:.4f}\n", f.bic);
    fmt::print(out, "n           {}\n", f.n_observations);
    fmt::print(out, "converged   {} ({} iterations)\n", f.diagnostics.converged ? "yes" : "no",
               f.diagnostics.iterations);
    for (const auto& w : f.diagnostics.warnings) {
        fmt::print(out, "warning     {}\n", w);
    }
}

Json preview_json(elicitation::RiskCategory category) {
    const auto& p = policy::portfolio_policy(category);
    return {{"airport_lead_time_hours", policy::airport_policy(category)},
            {"portfolio",
             {{"name", p.name}, {"stock_pct", p.stock_pct}, {"bond_pct", p.bond_pct}, {"cash_pct", p.cash_pct}}}};
}

void print_preview_text(std::ostream& out, elicitation::RiskCategory category) {
    const auto& p = policy::portfolio_policy(category);
    fmt::print(out, "airport lead time   {:g} h\n", policy::airport_policy(category));
    fmt::print(out, "portfolio           {} (stocks {}%, bonds {}%, cash {}%)\n", p.name, p.stock_pct,
               p.bond_pct, p.cash_pct);
}

elicitation::SessionOptions session_options(const Config& config, std::optional<int> budget,
                                            std::optional<std::uint64_t> seed, double scale,
                                            const std::string& menu) {
    elicitation::SessionOptions o;
    o.budget = budget.value_or(config.budget);
    o.seed = seed.value_or(config.seed);
    o.scale = scale;
    o.menu = elicitation::parse_menu_kind(menu);
    return o;
}

void prompt(std::ostream& err, const elicitation::Question& q, const Json& progress) {
    fmt::print(err, "\n[{}/{}] {}\n", progress.at("asked").get<int>(), progress.at("budget").get<int>(),
               q.prompt);
    switch (q.kind) {
    case elicitation::Question::Kind::Binary:
        for (const auto& o : q.options) {
            fmt::print(err, "  {}: {}\n", o.label, describe(o.lottery));
        }
        fmt::print(err, "Answer A or B: ");
        break;
    case elicitation::Question::Kind::Menu:
        for (std::size_t i = 0; i < q.options.size(); ++i) {
            fmt::print(err, "  {} [{}]: {}\n", i, q.options[i].label, describe(q.options[i].lottery));
        }
        fmt::print(err, "Answer with an option number: ");
        break;
    case elicitation::Question::Kind::Scale:
        fmt::print(err, "Answer {}-{}: ", q.scale_min, q.scale_max);
        break;
    }
    err.flush();
}

/// A line of ten A/B letters answers price-list questions by row.
bool is_row_script(const std::string& line) {
    return line.size() == static_cast<std::size_t>(elicitation::kHoltLauryRows) &&
           std::all_of(line.begin(), line.end(), [](char c) { return c == 'A' || c == 'B' || c == 'a' || c == 'b'; });
}

void print_profile_text(std::ostream& out, const Json& profile) {
    fmt::print(out, "session             {}\n", profile.at("session_id").get<std::string>());
    fmt::print(out, "protocol            {} ({})\n", profile.at("protocol").get<std::string>(),
               profile.at("status").get<std::string>());
    if (!profile.at("switch_row").is_null()) {
        fmt::print(out, "switch row          {}\n", profile.at("switch_row").get<int>());
    }
    if (!profile.at("attitude").is_null()) {
        fmt::print(out, "attitude            {}\n", profile.at("attitude").get<std::string>());
    }
    if (!profile.at("general_risk_score").is_null()) {
        fmt::print(out, "general risk score  {}\n", profile.at("general_risk_score").get<int>());
    }
    if (!profile.at("menu_choice").is_null()) {
        fmt::print(out, "menu choice         {}\n", profile.at("menu_choice").get<std::string>());
    }
    if (!profile.at("allais").is_null()) {
        const auto& a = profile.at("allais");
        fmt::print(out, "allais pattern      {} ({})\n", a.at("pattern").get<std::string>(),
                   a.at("eu_consistent").get<bool>() ? "consistent with EU" : "inconsistent with EU");
    }
    if (!profile.at("risk_class").is_null()) {
        const auto& c = profile.at("risk_class");
        fmt::print(out, "risk class          {} (scores {}-{})\n", c.at("category").get<std::string>(),
                   c.at("score_min").get<int>(), c.at("score_max").get<int>());
    }
    if (!profile.at("fit").is_null()) {
        const auto f = io::fit_from_json(profile.at("fit"));
        fmt::print(out, "fitted model        {} {} sharpness={:.4g}\n", models::to_string(f.model.family()),
                   parameter_text(f.model), f.choice_sharpness);
    }
    if (!profile.at("policy_preview").is_null()) {
        const auto& p = profile.at("policy_preview");
        const auto& portfolio = p.at("portfolio");
        fmt::print(out, "airport lead time   {:g} h\n", p.at("airport_lead_time_hours").get<double>());
        fmt::print(out, "portfolio           {} (stocks {}%, bonds {}%, cash {}%)\n",
                   portfolio.at("name").get<std::string>(), portfolio.at("stock_pct").get<int>(),
                   portfolio.at("bond_pct").get<int>(), portfolio.at("cash_pct").get<int>());
    }
}

} // namespace

int run_battery(const Config& config, const BatteryArgs& args, Streams io) {
    const auto protocol = elicitation::parse_protocol(args.protocol);
    Json j{{"protocol", elicitation::to_string(protocol)}};
    std::string text;
    switch (protocol) {
    case elicitation::Protocol::MPL: {
        const auto list = elicitation::holt_laury_list(args.scale);
        Json rows = Json::array();
        text = fmt::format("{:>3}  {:<28}  {:<28}  {:>11}\n", "row", "option A", "option B", "EV(A)-EV(B)");
        for (std::size_t i = 0; i < list.rows.size(); ++i) {
            const auto& r = list.rows[i];
            rows.push_back({{"row", i + 1},
                            {"option_a", io::lottery_to_json(r.option_a)},
                            {"option_b", io::lottery_to_json(r.option_b)},
                            {"ev_difference", r.ev_difference()},
                            {"ev_difference_cents", elicitation::round_to_cents(r.ev_difference())}});
            text += fmt::format("{:>3}  {:<28}  {:<28}  {:>11}\n", i + 1, describe(r.option_a),
                                describe(r.option_b), money(r.ev_difference()));
        }
        j["scale"] = args.scale;
        j["rows"] = rows;
        break;
    }
    case elicitation::Protocol::RandomPairs: {
        if (args.count < 1) {
            throw ValidationError("--count must be >= 1");
        }
        constexpr std::array outcomes{0.0, 5.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 80.0, 100.0};
        constexpr std::array probabilities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        const auto seed = args.seed.value_or(config.seed);
        Json questions = Json::array();
        for (int i = 0; i < args.count; ++i) {
            const auto [a, b] = elicitation::random_pair(derive_seed(seed, static_cast<std::uint64_t>(i)),
                                                         outcomes, probabilities);
            const elicitation::BinaryQuestion q{fmt::format("pairs-{}", i + 1), a, b};
            questions.push_back(question_json(q));
            text += fmt::format("{}\n  A: {}\n  B: {}\n", q.id, describe(a), describe(b));
        }
        j["seed"] = seed;
        j["questions"] = questions;
        break;
    }
    case elicitation::Protocol::OrderedMenu: {
        const auto menu = elicitation::ordered_menu(elicitation::parse_menu_kind(args.menu));
        Json options = Json::array();
        for (const auto& o : menu) {
            options.push_back({{"label", o.label}, {"lottery", io::lottery_to_json(o.lottery)}});
            text += fmt::format("{:<14} {}\n", o.label, describe(o.lottery));
        }
        j["menu"] = args.menu;
        j["options"] = options;
        break;
    }
    case elicitation::Protocol::GeneralRisk:
        j["prompt"] = elicitation::kGeneralRiskPrompt;
        j["scale_min"] = 0;
        j["scale_max"] = 10;
        text = fmt::format("{}\n", elicitation::kGeneralRiskPrompt);
        break;
    case elicitation::Protocol::Allais: {
        Json questions = Json::array();
        const char* labels[2][2] = {{"A", "B"}, {"C", "D"}};
        int n = 0;
        for (const auto& q : elicitation::allais_battery()) {
            questions.push_back(question_json(q));
            text += fmt::format("{}\n  {}: {}\n  {}: {}\n", q.id, labels[n][0], describe(q.option_a),
                                labels[n][1], describe(q.option_b));
            ++n;
        }
        j["questions"] = questions;
        break;
    }
    }
    if (config.format == OutputFormat::Json) {
        emit_json(io.out, j);
    } else {
        io.out << text;
    }
    return 0;
}

int run_simulate(const Config& config, const SimulateArgs& args, Streams io) {
    if (args.questions < 1) {
        throw ValidationError("--questions must be >= 1");
    }
    if (!(args.sharpness > 0.0)) {
        throw ValidationError("--sharpness must be > 0");
    }
    const auto family = models::parse_family(args.family);
    const auto seed = args.seed.value_or(config.seed);
    calibration::SimAgent agent;
    agent.model = models::ModelSpec::from_named(family, parse_params(args.params));
    agent.sharpness = args.sharpness;
    agent.seed = derive_seed(seed, 1);
    const auto questions = calibration::question_bank(calibration::parse_question_bank(args.bank),
                                                      static_cast<std::size_t>(args.questions),
                                                      derive_seed(seed, 0));
    const auto records = calibration::simulate_battery(agent, questions, fmt::format("sim-{}", seed));
    if (config.format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& r : records) {
            Json record;
            record["session_id"] = r.session_id;
            record["question_id"] = r.question_id;
            record["protocol"] = elicitation::to_string(r.protocol);
            record["option_a"] = io::lottery_to_json(r.option_a);
            record["option_b"] = io::lottery_to_json(r.option_b);
            record["chosen"] = std::string(1, elicitation::to_char(r.chosen));
            record["timestamp"] = r.timestamp;
            arr.push_back(std::move(record));
        }
        emit_json(io.out, arr);
    } else {
        elicitation::write_choice_csv(io.out, records);
    }
    return 0;
}

int run_fit(const Config& config, const FitArgs& args, Streams io) {
    const auto family = models::parse_family(args.family);
    const auto records = read_records(args.records, io.in);
    const auto result = calibration::fit(records, family);
    if (config.format == OutputFormat::Json) {
        emit_json(io.out, io::fit_to_json(result));
    } else {
        print_fit_text(io.out, result);
    }
    return 0;
}

int run_compare(const Config& config, const CompareArgs& args, Streams io) {
    std::vector<models::Family> families;
    for (const auto& f : args.families) {
        families.push_back(models::parse_family(f));
    }
    const auto records = read_records(args.records, io.in);
    const auto results = calibration::compare(records, families);
    if (config.format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(io::fit_to_json(r));
        }
        emit_json(io.out, arr);
    } else {
        fmt::print(io.out, "{:<6} {:>12} {:>12} {:>12}  {}\n", "family", "log-lik", "AIC", "BIC", "parameters");
        for (const auto& r : results) {
            fmt::print(io.out, "{:<6} {:>12.4f} {:>12.4f} {:>12.4f}  {} sharpness={:.4g}\n",
                       models::to_string(r.model.family()), r.log_likelihood, r.aic, r.bic,
                       parameter_text(r.model), r.choice_sharpness);
        }
    }
    return 0;
}

int run_classify(const Config& config, const ClassifyArgs& args, Streams io) {
    const auto c = elicitation::dohmen_classify(args.score);
    if (config.format == OutputFormat::Json) {
        emit_json(io.out, {{"score", args.score},
                           {"risk_class", io::risk_class_to_json(c)},
                           {"policy_preview", preview_json(c.category)}});
    } else {
        fmt::print(io.out, "risk class          {} (scores {}-{})\n", elicitation::to_string(c.category),
                   c.score_min, c.score_max);
        print_preview_text(io.out, c.category);
    }
    return 0;
}

int run_elicit(const Config& config, const ElicitArgs& args, Streams io) {
    service::SessionStore store(config.store);
    service::SessionService sessions(store);
    const auto envelope =
        sessions.create(elicitation::parse_protocol(args.protocol),
                        session_options(config, args.budget, args.seed, args.scale, args.menu));
    const auto& id = envelope.id;
    fmt::print(io.err, "session {} ({})\n", id, args.protocol);

    std::optional<std::string> row_script;
    std::string line;
    while (true) {
        const auto next = sessions.next(id);
        if (next.at("done").get<bool>()) {
            break;
        }
        const auto question = io::question_from_json(next.at("question"));
        std::string response;
        if (row_script && question.row > 0) {
            response = std::string(1, (*row_script)[static_cast<std::size_t>(question.row - 1)]);
        } else {
            prompt(io.err, question, next.at("progress"));
            while (response.empty()) {
                if (!std::getline(io.in, line)) {
                    throw ValidationError(
                        fmt::format("input ended before session {} was complete", id));
                }
                response = trim(line);
                if (!response.empty() && response.front() == '#') {
                    response.clear();
                }
            }
            if (question.row > 0 && is_row_script(response)) {
                row_script = response;
                response = std::string(1, response[static_cast<std::size_t>(question.row - 1)]);
            }
        }
        try {
            sessions.answer(id, question.id, response);
        } catch (const ValidationError& e) {
            // Interactive input: re-ask rather than abort on a typo.
            fmt::print(io.err, "invalid answer: {}\n", e.what());
        }
    }
    const auto profile = sessions.profile(id);
    if (config.format == OutputFormat::Json) {
        emit_json(io.out, {{"session_id", id}, {"profile", profile}});
    } else {
        io.out << id << '\n';
        print_profile_text(io.err, profile);
    }
    return 0;
}

int run_report(const Config& config, const ReportArgs& args, Streams io) {
    if (args.episodes < 1) {
        throw ValidationError("--episodes must be >= 1");
    }
    service::SessionStore store(config.store);
    service::SessionService sessions(store);
    const auto profile = sessions.profile(args.session);
    const auto seed = args.seed.value_or(config.seed);
    std::vector<policy::TrackRecord> records;
    for (const auto& p : policy::class_travel_policies()) {
        records.push_back(policy::run_track_record(p, config.travel_domain, args.episodes, seed));
    }
    if (config.format == OutputFormat::Json) {
        Json tr = Json::array();
        for (const auto& r : records) {
            tr.push_back(policy::track_record_to_json(r));
        }
        emit_json(io.out, {{"profile", profile},
                           {"travel_domain", policy::travel_domain_to_json(config.travel_domain)},
                           {"seed", seed},
                           {"track_record", tr}});
    } else {
        print_profile_text(io.out, profile);
        fmt::print(io.out, "\ntrack record ({} episodes per policy, seed {})\n", args.episodes, seed);
        io.out << policy::track_record_table(records);
    }
    return 0;
}

int run_serve(const Config& config, const ServeArgs& args, Streams io) {
    service::ServerConfig server_config;
    server_config.host = args.host.value_or(config.host);
    server_config.port = args.port.value_or(config.port);
    server_config.static_dir = args.static_dir ? args.static_dir : config.static_dir;
    if (server_config.port < 0 || server_config.port > 65535) {
        throw ValidationError(fmt::format("port must be in [1, 65535], got {}", server_config.port));
    }
    service::SessionStore store(config.store);
    service::SessionService sessions(store);
    service::HttpServer server(sessions, server_config);
    const int port = server.bind();
    fmt::print(io.err, "serving on http://{}:{} (store {})\n", server_config.host, port, config.store);
    io.err.flush();
    server.run();
    return 0;
}

} // namespace riskkit::cli
