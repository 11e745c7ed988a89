#include "riskkit/io/json.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

namespace riskkit::io {

Json lottery_to_json(const Lottery& lottery) {
    Json arr = Json::array();
    for (const auto& b : lottery.branches()) {
        arr.push_back(Json::array({b.probability, b.outcome}));
    }
    return arr;
}

Lottery lottery_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ValidationError("lottery must be a JSON array of [probability, outcome] pairs");
    }
    std::vector<Branch> branches;
    branches.reserve(j.size());
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ValidationError(fmt::format("malformed lottery branch {}", pair.dump()));
        }
        branches.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return Lottery(std::move(branches));
}

Json weight_to_json(const models::OutcomeWeightFunction& w) {
    using W = models::OutcomeWeightFunction;
    return std::visit(
        [](const auto& f) -> Json {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, W::Constant>) {
                return {{"type", "constant"}, {"value", f.value}};
            } else if constexpr (std::is_same_v<T, W::QuarticRootDamping>) {
                return {{"type", "quartic_root_damping"}};
            } else {
                return {{"type", "table"}, {"outcomes", f.outcomes}, {"weights", f.weights}};
            }
        },
        w.family());
}

models::OutcomeWeightFunction weight_from_json(const Json& j) {
    const auto type = j.value("type", std::string("quartic_root_damping"));
    if (type == "constant") {
        return models::OutcomeWeightFunction::constant(j.at("value").get<double>());
    }
    if (type == "quartic_root_damping") {
        return models::OutcomeWeightFunction::quartic_root_damping();
    }
    if (type == "table") {
        return models::OutcomeWeightFunction::table(j.at("outcomes").get<std::vector<double>>(),
                                                    j.at("weights").get<std::vector<double>>());
    }
    throw ValidationError(fmt::format("unknown outcome weight type '{}'", type));
}

Json model_to_json(const models::ModelSpec& model) {
    Json j;
    j["family"] = std::string(models::to_string(model.family()));
    Json params = Json::object();
    for (const auto& [name, value] : model.named_parameters()) {
        params[name] = value;
    }
    j["parameters"] = std::move(params);
    if (model.family() == models::Family::PT) {
        j["reference_point"] = model.reference_point();
    }
    if (model.family() == models::Family::WLU) {
        j["weight"] = weight_to_json(model.weight());
    }
    return j;
}

models::ModelSpec model_from_json(const Json& j) {
    try {
        const auto family = models::parse_family(j.at("family").get<std::string>());
        std::map<std::string, double> named;
        if (j.contains("parameters")) {
            for (const auto& [name, value] : j.at("parameters").items()) {
                named[name] = value.get<double>();
            }
        }
        auto model = models::ModelSpec::from_named(family, named);
        if (j.contains("reference_point")) {
            model = model.with_reference_point(j.at("reference_point").get<double>());
        }
        if (j.contains("weight")) {
            model = model.with_weight(weight_from_json(j.at("weight")));
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(fmt::format("malformed model JSON: {}", e.what()));
    }
}

Json parse_json(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(fmt::format("{} is not valid JSON: {}", what, e.what()));
    }
}

} // namespace riskkit::io
