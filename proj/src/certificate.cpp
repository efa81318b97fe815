#include "threeplane/certificate.hpp"

#include "threeplane/errors.hpp"
#include "threeplane/saturate.hpp"

namespace threeplane {

std::string_view name(Target target) { return target == Target::edges ? "edges" : "crossings"; }

Target parse_target(std::string_view text) {
  if (text == "edges") return Target::edges;
  if (text == "crossings") return Target::crossings;
  throw std::invalid_argument("unknown target '" + std::string(text) + "'");
}

Certificate builtin_certificate(Target target) {
  auto q = [](long p, long d) { return Rational(p, d); };
  Certificate c{target, {}};
  if (target == Target::edges) {
    c.coefficients = {{"2.A", q(-5, 16)}, {"2.B", q(5, 16)},  {"2.C", q(-11, 24)}, {"2.D", q(1, 8)},
                      {"3.A", q(7, 48)},  {"3.B", q(0, 1)},   {"3.C", q(3, 16)},   {"3.D", q(3, 16)},
                      {"3.E", q(0, 1)},   {"4.A", q(3, 16)},  {"4.B", q(3, 16)},   {"5.A", q(11, 60)},
                      {"5.B", q(11, 60)}, {"6", q(13, 80)},   {"7", q(11, 40)},    {"8.A", q(-11, 20)},
                      {"8.B", q(11, 20)}, {"8.C", q(0, 1)},   {"9.A", q(1, 10)},   {"9.B", q(1, 20)},
                      {"9.C", q(3, 16)}};
  } else {
    c.coefficients = {{"2.A", q(-7, 16)}, {"2.B", q(5, 16)},  {"2.C", q(-11, 24)}, {"2.D", q(-3, 8)},
                      {"3.A", q(1, 48)},  {"3.B", q(1, 16)},  {"3.C", q(7, 48)},   {"3.D", q(5, 16)},
                      {"3.E", q(1, 16)},  {"4.A", q(13, 16)}, {"4.B", q(5, 16)},   {"5.A", q(11, 60)},
                      {"5.B", q(11, 60)}, {"6", q(3, 80)},    {"7", q(11, 40)},    {"8.A", q(19, 20)},
                      {"8.B", q(1, 20)},  {"8.C", q(1, 4)},   {"9.A", q(11, 10)},  {"9.B", q(11, 20)},
                      {"9.C", q(5, 16)}};
  }
  return c;
}

std::map<std::string, RowForm> row_forms() {
  std::map<std::string, RowForm> out;
  for (const auto& row : constraint_rows()) out[row.id] = {row.lhs - row.rhs, row.relation};
  return out;
}

LinearForm target_form(Target target) {
  LinearForm f(target == Target::edges ? var::kE : var::kX);
  f.add(var::kVminus2, Rational(-11, 2));
  return f;
}

bool SymbolicResult::dominated() const {
  for (const auto& [v, c] : residual.terms()) {
    if (c < 0) return false;
  }
  return true;
}

SymbolicResult verify_symbolic(const Certificate& certificate) {
  auto forms = row_forms();
  for (const auto& [id, coeff] : certificate.coefficients) {
    auto it = forms.find(id);
    if (it == forms.end()) throw InvalidCertificate("unknown row '" + id + "'");
    if (it->second.relation == Relation::at_most && coeff < 0) {
      throw InvalidCertificate("row " + id + " is an inequality but has negative multiplier " + to_string(coeff));
    }
  }
  SymbolicResult out;
  for (const auto& [id, coeff] : certificate.coefficients) out.combination += coeff * forms.at(id).form;
  out.residual = out.combination - target_form(certificate.target);
  return out;
}

NumericResult verify_numeric(const CensusCounts& census, Target target) {
  if (!census.saturated) throw PreconditionError("certify needs a 3-saturated drawing; rerun with --saturate");
  Certificate cert = builtin_certificate(target);
  SymbolicResult symbolic = verify_symbolic(cert);
  auto values = census.variables();

  NumericResult out;
  out.target = target;
  out.value = target == Target::edges ? census.stats.edges : census.stats.crossings;
  out.bound = Rational(11, 2) * Rational(static_cast<long>(census.stats.n - 2));
  out.total_slack = out.bound - out.value;
  Rational sum = 0;
  for (const auto& row : constraint_rows()) {
    NumericRow r;
    r.id = row.id;
    r.coefficient = cert.coefficients.at(row.id);
    r.slack = row.rhs.evaluate(values) - row.lhs.evaluate(values);
    r.contribution = r.coefficient * r.slack;
    sum += r.contribution;
    out.rows.push_back(std::move(r));
  }
  out.residual_contribution = symbolic.residual.evaluate(values);
  out.decomposition_holds = out.total_slack == sum + out.residual_contribution;
  return out;
}

NumericResult verify_numeric(const Drawing& drawing, Target target) {
  if (!is_3saturated(drawing)) throw PreconditionError("certify needs a 3-saturated drawing; rerun with --saturate");
  return verify_numeric(census(drawing), target);
}

}  // namespace threeplane
