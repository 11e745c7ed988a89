#include "riskkit/io/serialize.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

namespace riskkit::io {
namespace {

template <typename T, typename F>
Json optional_json(const std::optional<T>& value, F&& convert) {
    return value ? convert(*value) : Json(nullptr);
}

template <typename F>
auto guarded(std::string_view what, F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(fmt::format("{}: {}", what, e.what()));
    }
}

} // namespace

Json fit_to_json(const calibration::FitResult& f) {
    const auto& d = f.diagnostics;
    return {{"model", model_to_json(f.model)},
            {"choice_sharpness", f.choice_sharpness},
            {"log_likelihood", f.log_likelihood},
            {"aic", f.aic},
            {"bic", f.bic},
            {"n_observations", f.n_observations},
            {"n_parameters", f.n_parameters},
            {"diagnostics",
             {{"grid_evaluations", d.grid_evaluations},
              {"iterations", d.iterations},
              {"evaluations", d.evaluations},
              {"final_simplex_size", d.final_simplex_size},
              {"converged", d.converged},
              {"pinned", d.pinned},
              {"warnings", d.warnings}}}};
}

calibration::FitResult fit_from_json(const Json& j) {
    return guarded("fit result", [&] {
        calibration::FitResult f{model_from_json(j.at("model")), 1.0, 0.0, 0.0, 0.0, 0, 0, {}};
        f.choice_sharpness = j.at("choice_sharpness").get<double>();
        f.log_likelihood = j.at("log_likelihood").get<double>();
        f.aic = j.at("aic").get<double>();
        f.bic = j.at("bic").get<double>();
        f.n_observations = j.at("n_observations").get<int>();
        f.n_parameters = j.at("n_parameters").get<int>();
        const auto& d = j.at("diagnostics");
        f.diagnostics.grid_evaluations = d.at("grid_evaluations").get<int>();
        f.diagnostics.iterations = d.at("iterations").get<int>();
        f.diagnostics.evaluations = d.at("evaluations").get<int>();
        f.diagnostics.final_simplex_size = d.at("final_simplex_size").get<double>();
        f.diagnostics.converged = d.at("converged").get<bool>();
        f.diagnostics.pinned = d.at("pinned").get<std::vector<std::string>>();
        f.diagnostics.warnings = d.at("warnings").get<std::vector<std::string>>();
        return f;
    });
}

Json risk_class_to_json(const elicitation::RiskClass& c) {
    return {{"category", elicitation::to_string(c.category)},
            {"score_min", c.score_min},
            {"score_max", c.score_max}};
}

elicitation::RiskClass risk_class_from_json(const Json& j) {
    return guarded("risk class", [&] {
        return elicitation::risk_class(
            elicitation::parse_risk_category(j.at("category").get<std::string>()));
    });
}

Json question_to_json(const elicitation::Question& q) {
    Json options = Json::array();
    for (const auto& o : q.options) {
        options.push_back({{"label", o.label}, {"lottery", lottery_to_json(o.lottery)}});
    }
    Json j{{"id", q.id}, {"kind", elicitation::to_string(q.kind)}, {"prompt", q.prompt},
           {"options", options}};
    if (q.kind == elicitation::Question::Kind::Scale) {
        j["scale_min"] = q.scale_min;
        j["scale_max"] = q.scale_max;
    }
    if (q.row > 0) {
        j["row"] = q.row;
    }
    return j;
}

elicitation::Question question_from_json(const Json& j) {
    return guarded("question", [&] {
        elicitation::Question q;
        q.id = j.at("id").get<std::string>();
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "binary") {
            q.kind = elicitation::Question::Kind::Binary;
        } else if (kind == "menu") {
            q.kind = elicitation::Question::Kind::Menu;
        } else if (kind == "scale") {
            q.kind = elicitation::Question::Kind::Scale;
        } else {
            throw ValidationError(fmt::format("unknown question kind '{}'", kind));
        }
        q.prompt = j.at("prompt").get<std::string>();
        for (const auto& o : j.at("options")) {
            q.options.push_back({o.at("label").get<std::string>(), lottery_from_json(o.at("lottery"))});
        }
        q.scale_min = j.value("scale_min", q.scale_min);
        q.scale_max = j.value("scale_max", q.scale_max);
        q.row = j.value("row", 0);
        return q;
    });
}

Json session_options_to_json(const elicitation::SessionOptions& o) {
    return {{"seed", o.seed},
            {"budget", o.budget},
            {"scale", o.scale},
            {"menu", o.menu == elicitation::MenuKind::Investment ? "investment" : "abstract"}};
}

elicitation::SessionOptions session_options_from_json(const Json& j) {
    return guarded("session options", [&] {
        elicitation::SessionOptions o;
        if (!j.is_object()) {
            throw ValidationError("session options must be a JSON object");
        }
        o.seed = j.value("seed", o.seed);
        o.budget = j.value("budget", o.budget);
        o.scale = j.value("scale", o.scale);
        if (j.contains("menu")) {
            o.menu = elicitation::parse_menu_kind(j.at("menu").get<std::string>());
        }
        return o;
    });
}

Json session_state_to_json(const elicitation::SessionState& s) {
    Json asked = Json::array();
    for (const auto& q : s.asked) {
        asked.push_back(question_to_json(q));
    }
    Json answers = Json::array();
    for (const auto& a : s.answers) {
        answers.push_back(
            {{"question_id", a.question_id}, {"response", a.response}, {"timestamp", a.timestamp}});
    }
    return {{"id", s.id},
            {"protocol", elicitation::to_string(s.protocol)},
            {"options", session_options_to_json(s.options)},
            {"asked", asked},
            {"answers", answers},
            {"bracket", {{"low", s.bracket_low}, {"high", s.bracket_high}}},
            {"current_fit", optional_json(s.current_fit, fit_to_json)},
            {"status", elicitation::to_string(s.status)}};
}

elicitation::SessionState session_state_from_json(const Json& j) {
    return guarded("session state", [&] {
        elicitation::SessionState s;
        s.id = j.at("id").get<std::string>();
        s.protocol = elicitation::parse_protocol(j.at("protocol").get<std::string>());
        s.options = session_options_from_json(j.at("options"));
        for (const auto& q : j.at("asked")) {
            s.asked.push_back(question_from_json(q));
        }
        for (const auto& a : j.at("answers")) {
            s.answers.push_back({a.at("question_id").get<std::string>(),
                                 a.at("response").get<std::string>(),
                                 a.at("timestamp").get<std::string>()});
        }
        s.bracket_low = j.at("bracket").at("low").get<int>();
        s.bracket_high = j.at("bracket").at("high").get<int>();
        if (!j.at("current_fit").is_null()) {
            s.current_fit = fit_from_json(j.at("current_fit"));
        }
        s.status = elicitation::parse_session_status(j.at("status").get<std::string>());
        return s;
    });
}

Json results_to_json(const elicitation::SessionResults& r) {
    Json switch_point = nullptr;
    if (r.switch_point) {
        switch_point = {{"switch_row", r.switch_point->switch_row ? Json(*r.switch_point->switch_row)
                                                                  : Json(nullptr)},
                        {"crossovers", r.switch_point->crossovers},
                        {"attitude", elicitation::to_string(r.switch_point->attitude)}};
    }
    Json allais = nullptr;
    if (r.allais) {
        allais = {{"eu_consistent", r.allais->eu_consistent}, {"pattern", r.allais->pattern}};
    }
    return {{"switch_point", switch_point},
            {"general_risk_score", r.general_risk_score ? Json(*r.general_risk_score) : Json(nullptr)},
            {"menu_choice", r.menu_choice ? Json(*r.menu_choice) : Json(nullptr)},
            {"risk_class", optional_json(r.risk_class, risk_class_to_json)},
            {"allais", allais},
            {"fit", optional_json(r.fit, fit_to_json)}};
}

} // namespace riskkit::io
