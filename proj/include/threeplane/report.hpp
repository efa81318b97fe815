#pragma once

#include "json.hpp"
#include "threeplane/census.hpp"
#include "threeplane/certificate.hpp"
#include "threeplane/constraints.hpp"
#include "threeplane/drawing.hpp"

namespace threeplane {

// Numbers are written as decimal strings ("p" or "p/q").
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const CensusCounts& census);
nlohmann::json to_json(const ConstraintReport& report);
nlohmann::json to_json(const NumericResult& result);
nlohmann::json to_json(Target target, const SymbolicResult& result);

}  // namespace threeplane
