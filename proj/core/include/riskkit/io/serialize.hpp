#pragma once

#include "riskkit/calibration/fit.hpp"
#include "riskkit/elicitation/session.hpp"
#include "riskkit/io/json.hpp"

namespace riskkit::io {

Json fit_to_json(const calibration::FitResult& fit);
calibration::FitResult fit_from_json(const Json& j);

Json risk_class_to_json(const elicitation::RiskClass& c);
elicitation::RiskClass risk_class_from_json(const Json& j);

Json question_to_json(const elicitation::Question& q);
elicitation::Question question_from_json(const Json& j);

Json session_options_to_json(const elicitation::SessionOptions& o);
elicitation::SessionOptions session_options_from_json(const Json& j);

Json session_state_to_json(const elicitation::SessionState& s);
elicitation::SessionState session_state_from_json(const Json& j);

Json results_to_json(const elicitation::SessionResults& r);

} // namespace riskkit::io
