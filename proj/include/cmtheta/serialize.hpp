#pragma once

#include <json.hpp>

#include "cmtheta/genus5.hpp"
#include "cmtheta/jacobian.hpp"
#include "cmtheta/prym.hpp"
#include "cmtheta/series.hpp"

namespace cmtheta {

using Json = nlohmann::json;

// Rationals travel as exact strings, "num/den" in lowest terms with a
// positive denominator, plain "num" for integers.
Json to_json(const ThetaClass& c);
Json to_json(const BiThetaClass& c);
Json to_json(const ThetaSeries& s);
Json to_json(const PrymLocus& locus);
Json to_json(const ChiVerdict& chi);
Json to_json(const CriterionVerdict& verdict);
Json to_json(const ExclusionReport& report);

ThetaClass theta_class_from_json(const Json& j);
BiThetaClass bitheta_class_from_json(const Json& j);
ThetaSeries theta_series_from_json(const Json& j);

} // namespace cmtheta
