#pragma once

#include "riskkit/lottery.hpp"
#include "riskkit/models/model_spec.hpp"

#include <nlohmann/json.hpp>

namespace riskkit::io {

using Json = nlohmann::json;

/// Wire format: array of [probability, outcome] pairs.
Json lottery_to_json(const Lottery& lottery);
Lottery lottery_from_json(const Json& j);

/// {"family": "REU", "parameters": {"alpha": 1, "k": 2}, ...} plus the fixed
/// components (reference_point for PT, weight for WLU).
Json model_to_json(const models::ModelSpec& model);
models::ModelSpec model_from_json(const Json& j);

Json weight_to_json(const models::OutcomeWeightFunction& w);
models::OutcomeWeightFunction weight_from_json(const Json& j);

/// Parses text as JSON, converting parse failures to ValidationError.
Json parse_json(std::string_view text, std::string_view what);

} // namespace riskkit::io

namespace nlohmann {

template <>
struct adl_serializer<riskkit::Lottery> {
    static void to_json(json& j, const riskkit::Lottery& l) { j = riskkit::io::lottery_to_json(l); }
    static riskkit::Lottery from_json(const json& j) { return riskkit::io::lottery_from_json(j); }
};

template <>
struct adl_serializer<riskkit::models::ModelSpec> {
    static void to_json(json& j, const riskkit::models::ModelSpec& m) {
        j = riskkit::io::model_to_json(m);
    }
    static riskkit::models::ModelSpec from_json(const json& j) {
        return riskkit::io::model_from_json(j);
    }
};

} // namespace nlohmann
