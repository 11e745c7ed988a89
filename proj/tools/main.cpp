#include "commands.hpp"
#include "config.hpp"

#include "riskkit/error.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <iostream>

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

} // namespace

int main(int argc, char** argv) {
    using namespace riskkit::cli;

    CLI::App app{"riskkit: risk-attitude elicitation, model fitting and policy reports"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<std::string> store;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--format", format, "Output format: json or text");
    app.add_option("--store", store, "Session store directory (RISKKIT_STORE overrides the config)");

    BatteryArgs battery;
    auto* battery_cmd = app.add_subcommand("battery", "Print an elicitation instrument");
    battery_cmd->add_option("--protocol", battery.protocol, "mpl, pairs, menu, general or allais");
    battery_cmd->add_option("--scale", battery.scale, "Price-list payoff multiplier");
    battery_cmd->add_option("--menu", battery.menu, "Ordered menu: investment or abstract");
    battery_cmd->add_option("--count", battery.count, "Number of random pairs");
    battery_cmd->add_option("--seed", battery.seed, "Seed for random pairs");

    SimulateArgs simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate an agent and emit choice records as CSV");
    simulate_cmd->add_option("--family", simulate.family, "EU, REU, WLU or PT");
    simulate_cmd->add_option("--params", simulate.params, "Parameters as name=value,...");
    simulate_cmd->add_option("--questions", simulate.questions, "Number of questions");
    simulate_cmd->add_option("--seed", simulate.seed, "Random seed");
    simulate_cmd->add_option("--sharpness", simulate.sharpness, "Choice sharpness of the agent");
    simulate_cmd->add_option("--bank", simulate.bank, "Question bank: gains, hl or mixed");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a model family to choice records");
    fit_cmd->add_option("--records", fit.records, "Choice-record CSV ('-' for stdin)")->required();
    fit_cmd->add_option("--family", fit.family, "EU, REU, WLU or PT");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "Fit several families and rank them by BIC");
    compare_cmd->add_option("--records", compare.records, "Choice-record CSV ('-' for stdin)")->required();
    compare_cmd->add_option("--families", compare.families, "Families to compare")->delimiter(',');

    ClassifyArgs classify;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a 0-10 general-risk score");
    classify_cmd->add_option("--score", classify.score, "Self-reported willingness, 0-10")->required();

    ElicitArgs elicit;
    auto* elicit_cmd = app.add_subcommand("elicit", "Run a session in the terminal, answers on stdin");
    elicit_cmd->add_option("--protocol", elicit.protocol, "mpl, pairs, menu, general or allais");
    elicit_cmd->add_option("--budget", elicit.budget, "Question budget");
    elicit_cmd->add_option("--seed", elicit.seed, "Seed for random pairs");
    elicit_cmd->add_option("--scale", elicit.scale, "Price-list payoff multiplier");
    elicit_cmd->add_option("--menu", elicit.menu, "Ordered menu: investment or abstract");

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "Profile and track record for a stored session");
    report_cmd->add_option("--session", report.session, "Session id")->required();
    report_cmd->add_option("--episodes", report.episodes, "Simulated trips per policy");
    report_cmd->add_option("--seed", report.seed, "Track-record seed");

    ServeArgs serve;
    auto* serve_cmd = app.add_subcommand("serve", "Run the session API and serve the UI bundle");
    serve_cmd->add_option("--host", serve.host, "Bind address (default loopback)");
    serve_cmd->add_option("--port", serve.port, "Port (0 picks a free one)");
    serve_cmd->add_option("--static-dir", serve.static_dir, "UI bundle directory");
    serve_cmd->add_option("--config", config_path, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    Streams io{std::cin, std::cout, std::cerr};
    try {
        Config config = load_config(config_path);
        if (store) {
            config.store = *store;
        }
        if (format) {
            config.format = parse_format(*format);
        }
        if (*battery_cmd) {
            return run_battery(config, battery, io);
        }
        if (*simulate_cmd) {
            return run_simulate(config, simulate, io);
        }
        if (*fit_cmd) {
            return run_fit(config, fit, io);
        }
        if (*compare_cmd) {
            return run_compare(config, compare, io);
        }
        if (*classify_cmd) {
            return run_classify(config, classify, io);
        }
        if (*elicit_cmd) {
            return run_elicit(config, elicit, io);
        }
        if (*report_cmd) {
            return run_report(config, report, io);
        }
        if (*serve_cmd) {
            return run_serve(config, serve, io);
        }
    } catch (const riskkit::Error& e) {
        fmt::print(std::cerr, "riskkit: {}\n", e.what());
        return kDataError;
    } catch (const std::exception& e) {
        fmt::print(std::cerr, "riskkit: {}\n", e.what());
        return kDataError;
    }
    return kUsageError;
}
