#include "riskkit/policy/track_record.hpp"

#include "riskkit/error.hpp"
#include "riskkit/policy/actions.hpp"
#include "riskkit/policy/fixtures.hpp"
#include "riskkit/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

namespace riskkit::policy {
namespace {

// Fixed chunking keeps floating-point sums independent of the thread count.
constexpr std::uint64_t kChunks = 8;

void validate_distribution(const DurationDistribution& d, std::string_view name) {
    if (!(d.median_hours > 0.0) || !std::isfinite(d.median_hours)) {
        throw ValidationError(fmt::format("{}.median_hours must be positive", name));
    }
    if (!(d.sigma >= 0.0) || !std::isfinite(d.sigma)) {
        throw ValidationError(fmt::format("{}.sigma must be non-negative", name));
    }
    if (!(d.max_hours >= d.median_hours) || !std::isfinite(d.max_hours)) {
        throw ValidationError(fmt::format("{}.max_hours must be at least the median", name));
    }
}

double draw(const DurationDistribution& d, Rng& rng) {
    return std::min(d.median_hours * std::exp(d.sigma * rng.normal()), d.max_hours);
}

DurationDistribution distribution_from_json(const io::Json& j, DurationDistribution d) {
    d.median_hours = j.value("median_hours", d.median_hours);
    d.sigma = j.value("sigma", d.sigma);
    d.max_hours = j.value("max_hours", d.max_hours);
    return d;
}

io::Json distribution_to_json(const DurationDistribution& d) {
    return {{"median_hours", d.median_hours}, {"sigma", d.sigma}, {"max_hours", d.max_hours}};
}

struct Partial {
    std::uint64_t missed = 0;
    double wait = 0.0;
    double expense = 0.0;
    std::vector<double> expenses;
};

} // namespace

void TravelDomain::validate() const {
    validate_distribution(transit_delay, "transit_delay");
    validate_distribution(security, "security");
    if (!(boarding_cutoff_hours >= 0.0) || !std::isfinite(boarding_cutoff_hours)) {
        throw ValidationError("boarding_cutoff_hours must be non-negative");
    }
    if (!(ticket_price >= 0.0) || !std::isfinite(ticket_price)) {
        throw ValidationError("ticket_price must be non-negative");
    }
    if (!(rebooking_fee >= 0.0) || !std::isfinite(rebooking_fee)) {
        throw ValidationError("rebooking_fee must be non-negative");
    }
}

TravelDomain travel_domain_from_json(const io::Json& j) {
    if (!j.is_object()) {
        throw ValidationError("travel domain config must be a JSON object");
    }
    TravelDomain d;
    try {
        if (j.contains("transit_delay")) {
            d.transit_delay = distribution_from_json(j.at("transit_delay"), d.transit_delay);
        }
        if (j.contains("security_time")) {
            d.security = distribution_from_json(j.at("security_time"), d.security);
        }
        d.boarding_cutoff_hours = j.value("boarding_cutoff_hours", d.boarding_cutoff_hours);
        d.ticket_price = j.value("ticket_price", d.ticket_price);
        d.rebooking_fee = j.value("rebooking_fee", d.rebooking_fee);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(fmt::format("travel domain config: {}", e.what()));
    }
    d.validate();
    return d;
}

io::Json travel_domain_to_json(const TravelDomain& d) {
    return {{"transit_delay", distribution_to_json(d.transit_delay)},
            {"security_time", distribution_to_json(d.security)},
            {"boarding_cutoff_hours", d.boarding_cutoff_hours},
            {"ticket_price", d.ticket_price},
            {"rebooking_fee", d.rebooking_fee}};
}

TravelDomain load_travel_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw StorageError(fmt::format("cannot read travel domain config {}", path));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return travel_domain_from_json(io::parse_json(buffer.str(), path));
}

std::vector<TravelPolicy> class_travel_policies() {
    std::vector<TravelPolicy> out;
    for (const auto& c : elicitation::risk_classes()) {
        out.push_back({std::string(elicitation::to_string(c.category)), airport_policy(c.category)});
    }
    return out;
}

Episode simulate_episode(const TravelPolicy& policy, const TravelDomain& domain, std::uint64_t seed,
                         std::uint64_t index) {
    Rng rng(derive_seed(seed, index));
    const double delay = draw(domain.transit_delay, rng);
    const double security = draw(domain.security, rng);
    const double on_site = std::max(policy.lead_time_hours - delay, 0.0);
    Episode e;
    e.missed = on_site < security + domain.boarding_cutoff_hours;
    e.wait_hours = on_site;
    e.expense = domain.ticket_price + (e.missed ? domain.rebooking_fee : 0.0);
    return e;
}

TrackRecord run_track_record(const TravelPolicy& policy, const TravelDomain& domain,
                             std::uint64_t episodes, std::uint64_t seed) {
    if (episodes < 1) {
        throw ValidationError("track record needs at least one episode");
    }
    if (!(policy.lead_time_hours >= 0.0) || !std::isfinite(policy.lead_time_hours)) {
        throw ValidationError(fmt::format("lead time must be non-negative, got {}", policy.lead_time_hours));
    }
    domain.validate();

    const std::uint64_t per_chunk = (episodes + kChunks - 1) / kChunks;
    std::vector<std::future<Partial>> jobs;
    for (std::uint64_t c = 0; c < kChunks; ++c) {
        const std::uint64_t begin = c * per_chunk;
        const std::uint64_t end = std::min(episodes, begin + per_chunk);
        if (begin >= end) {
            break;
        }
        jobs.push_back(std::async(std::launch::async, [&, begin, end] {
            Partial p;
            p.expenses.reserve(end - begin);
            for (std::uint64_t i = begin; i < end; ++i) {
                const Episode e = simulate_episode(policy, domain, seed, i);
                p.missed += e.missed ? 1 : 0;
                p.wait += e.wait_hours;
                p.expense += e.expense;
                p.expenses.push_back(e.expense);
            }
            return p;
        }));
    }
    Partial total;
    total.expenses.reserve(episodes);
    for (auto& job : jobs) {
        Partial p = job.get();
        total.missed += p.missed;
        total.wait += p.wait;
        total.expense += p.expense;
        total.expenses.insert(total.expenses.end(), p.expenses.begin(), p.expenses.end());
    }
    const auto n = static_cast<double>(episodes);
    TrackRecord r;
    r.policy = policy.name;
    r.lead_time_hours = policy.lead_time_hours;
    r.episodes = episodes;
    r.miss_rate = static_cast<double>(total.missed) / n;
    r.mean_wait_hours = total.wait / n;
    r.mean_expense = total.expense / n;
    for (const double q : kExpenseQuantiles) {
        r.expense_quantiles.emplace_back(q, sample_quantile(total.expenses, q));
    }
    return r;
}

io::Json track_record_to_json(const TrackRecord& r) {
    io::Json quantiles = io::Json::array();
    for (const auto& [q, v] : r.expense_quantiles) {
        quantiles.push_back({{"q", q}, {"expense", v}});
    }
    return {{"policy", r.policy},
            {"lead_time_hours", r.lead_time_hours},
            {"episodes", r.episodes},
            {"miss_rate", r.miss_rate},
            {"mean_wait_hours", r.mean_wait_hours},
            {"mean_expense", r.mean_expense},
            {"expense_quantiles", quantiles}};
}

TrackRecord track_record_from_json(const io::Json& j) {
    try {
        TrackRecord r;
        r.policy = j.at("policy").get<std::string>();
        r.lead_time_hours = j.at("lead_time_hours").get<double>();
        r.episodes = j.at("episodes").get<std::uint64_t>();
        r.miss_rate = j.at("miss_rate").get<double>();
        r.mean_wait_hours = j.at("mean_wait_hours").get<double>();
        r.mean_expense = j.at("mean_expense").get<double>();
        for (const auto& q : j.at("expense_quantiles")) {
            r.expense_quantiles.emplace_back(q.at("q").get<double>(), q.at("expense").get<double>());
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(fmt::format("track record: {}", e.what()));
    }
}

std::string track_record_table(const std::vector<TrackRecord>& records) {
    std::string out = fmt::format("{:<20} {:>8} {:>9} {:>9} {:>10} {:>9} {:>9} {:>9}\n", "policy",
                                  "lead(h)", "episodes", "missed", "wait(h)", "cost p50", "cost p95",
                                  "cost avg");
    for (const auto& r : records) {
        const auto quantile = [&r](double q) {
            for (const auto& [level, v] : r.expense_quantiles) {
                if (level == q) {
                    return v;
                }
            }
            return std::nan("");
        };
        out += fmt::format("{:<20} {:>8.1f} {:>9} {:>8.2f}% {:>10.2f} {:>9.2f} {:>9.2f} {:>9.2f}\n",
                           r.policy, r.lead_time_hours, r.episodes, 100.0 * r.miss_rate,
                           r.mean_wait_hours, quantile(0.5), quantile(0.95), r.mean_expense);
    }
    return out;
}

} // namespace riskkit::policy
