#include "threeplane/report.hpp"

namespace threeplane {

using nlohmann::json;

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

json row_json(const RowResult& r) {
  return {{"id", r.id},
          {"relation", std::string(symbol(r.relation))},
          {"lhs", to_string(r.lhs)},
          {"rhs", to_string(r.rhs)},
          {"slack", to_string(r.slack)},
          {"pass", r.pass},
          {"scope", std::string(name(r.scope))},
          {"applicable", r.applicable}};
}

}  // namespace

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return {{"valid", report.valid()}, {"checks", std::move(checks)}};
}

json to_json(const CensusCounts& census) {
  json out = json::object();
  for (const auto& [name, value] : census.variables()) out[name] = num(value);
  out["cells"] = num(census.cell_count);
  out["saturated_xpents"] = num(census.saturated_xpents);
  out["configurations"] = census.configurations_exact ? "exact" : "advisory";
  return out;
}

json to_json(const ConstraintReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(row_json(r));
  for (const auto& r : report.sanity) rows.push_back(row_json(r));
  return rows;
}

json to_json(const NumericResult& result) {
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"id", r.id},
                    {"coeff", to_string(r.coefficient)},
                    {"slack", to_string(r.slack)},
                    {"contribution", to_string(r.contribution)}});
  }
  return {{"target", std::string(name(result.target))},
          {"bound", to_string(result.bound)},
          {"value", to_string(result.value)},
          {"total_slack", to_string(result.total_slack)},
          {"rows", std::move(rows)},
          {"residual_contribution", to_string(result.residual_contribution)},
          {"decomposition_holds", result.decomposition_holds}};
}

json to_json(Target target, const SymbolicResult& result) {
  json residual = json::object();
  for (const auto& [v, c] : result.residual.terms()) residual[v] = to_string(c);
  return {{"target", std::string(name(target))},
          {"residual", std::move(residual)},
          {"exact", result.exact()},
          {"dominated", result.dominated()}};
}

}  // namespace threeplane
