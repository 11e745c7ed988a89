#pragma once

#include "riskkit/elicitation/instruments.hpp"
#include "riskkit/io/json.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace riskkit::policy {

/// Lognormal with the given median and log-scale sigma, capped at max_hours.
struct DurationDistribution {
    double median_hours = 0.0;
    double sigma = 0.0;
    double max_hours = 0.0;
};

/// Stylised airport trip. The traveller plans to arrive `lead` hours before
/// departure; a transit delay eats into that, then security and the boarding
/// cutoff must fit in what is left. A missed flight costs the rebooking fee.
struct TravelDomain {
    DurationDistribution transit_delay{0.5, 0.8, 4.0};
    DurationDistribution security{0.5, 0.5, 2.0};
    double boarding_cutoff_hours = 0.25;
    double ticket_price = 400.0;
    double rebooking_fee = 250.0;

    /// Throws ValidationError naming the offending field.
    void validate() const;
};

TravelDomain travel_domain_from_json(const io::Json& j);
io::Json travel_domain_to_json(const TravelDomain& domain);
/// Reads a domain config file; missing keys keep their defaults.
TravelDomain load_travel_domain(const std::string& path);

struct TravelPolicy {
    std::string name;
    double lead_time_hours = 3.0;
};

/// One policy per class, most averse first.
std::vector<TravelPolicy> class_travel_policies();

struct Episode {
    bool missed = false;
    /// Time spent in the airport before scheduled departure.
    double wait_hours = 0.0;
    double expense = 0.0;
};

/// Episode i under `seed` uses its own derived stream, so different lead
/// times see the same delays.
Episode simulate_episode(const TravelPolicy& policy, const TravelDomain& domain, std::uint64_t seed,
                         std::uint64_t index);

inline constexpr std::array kExpenseQuantiles{0.05, 0.25, 0.5, 0.75, 0.95};

struct TrackRecord {
    std::string policy;
    double lead_time_hours = 0.0;
    std::uint64_t episodes = 0;
    double miss_rate = 0.0;
    double mean_wait_hours = 0.0;
    double mean_expense = 0.0;
    /// (q, expense quantile) at kExpenseQuantiles.
    std::vector<std::pair<double, double>> expense_quantiles;
};

/// Throws ValidationError for episodes < 1 or an invalid domain. Episodes are
/// simulated in parallel; the result depends only on the arguments.
TrackRecord run_track_record(const TravelPolicy& policy, const TravelDomain& domain,
                             std::uint64_t episodes, std::uint64_t seed);

io::Json track_record_to_json(const TrackRecord& record);
TrackRecord track_record_from_json(const io::Json& j);

/// Fixed-width table, one row per record.
std::string track_record_table(const std::vector<TrackRecord>& records);

} // namespace riskkit::policy
