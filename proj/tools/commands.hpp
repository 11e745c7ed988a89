#pragma once

#include "config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace riskkit::cli {

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

struct BatteryArgs {
    std::string protocol = "mpl";
    double scale = 1.0;
    std::string menu = "investment";
    /// Random pairs to draw for the pairs protocol.
    int count = 10;
    std::optional<std::uint64_t> seed;
};

struct SimulateArgs {
    std::string family = "REU";
    /// "name=value,..."; omitted parameters take their defaults.
    std::string params;
    int questions = 200;
    std::optional<std::uint64_t> seed;
    double sharpness = 1.0;
    std::string bank = "gains";
};

struct FitArgs {
    /// CSV path, "-" for standard input.
    std::string records;
    std::string family = "REU";
};

struct CompareArgs {
    std::string records;
    std::vector<std::string> families{"EU", "REU", "WLU", "PT"};
};

struct ClassifyArgs {
    int score = 0;
};

struct ElicitArgs {
    std::string protocol = "mpl";
    std::optional<int> budget;
    std::optional<std::uint64_t> seed;
    double scale = 1.0;
    std::string menu = "investment";
};

struct ReportArgs {
    std::string session;
    std::uint64_t episodes = 10000;
    std::optional<std::uint64_t> seed;
};

struct ServeArgs {
    std::optional<std::string> host;
    std::optional<int> port;
    std::optional<std::string> static_dir;
};

int run_battery(const Config& config, const BatteryArgs& args, Streams io);
int run_simulate(const Config& config, const SimulateArgs& args, Streams io);
int run_fit(const Config& config, const FitArgs& args, Streams io);
int run_compare(const Config& config, const CompareArgs& args, Streams io);
int run_classify(const Config& config, const ClassifyArgs& args, Streams io);
int run_elicit(const Config& config, const ElicitArgs& args, Streams io);
int run_report(const Config& config, const ReportArgs& args, Streams io);
int run_serve(const Config& config, const ServeArgs& args, Streams io);

} // namespace riskkit::cli
