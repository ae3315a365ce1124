#pragma once

#include "dzv/coaction.hpp"
#include "dzv/galois.hpp"

#include <nlohmann/json.hpp>

namespace dzv {

nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IndexData& ix);
IndexData index_data_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GaloisPresentation& p);
GaloisPresentation presentation_from_json(const nlohmann::json& j);

}  // namespace dzv
