#include "threeplane/constraints.hpp"

#include <algorithm>
#include <stdexcept>

#include "threeplane/errors.hpp"

namespace threeplane {

std::string_view symbol(Relation relation) { return relation == Relation::equal ? "=" : "<="; }

std::string_view name(Scope scope) { return scope == Scope::any ? "any" : "3-saturated"; }

namespace {

using C = CellType;

LinearForm T(C a, C b, Rational k = 1) { return LinearForm(var::trail(a, b), k); }
LinearForm N(C t, Rational k = 1) { return LinearForm(var::cells(t), k); }
LinearForm G(ConfigType t, Rational k = 1) { return LinearForm(var::config(t), k); }
LinearForm V(const std::string& name, Rational k = 1) { return LinearForm(name, k); }

LinearForm large_trails() {
  return T(C::vtri, C::large) + T(C::vquad, C::large) + T(C::xtri, C::large) + T(C::xpent, C::large);
}

std::vector<ConstraintRow> build_rows() {
  const Relation eq = Relation::equal;
  const Relation le = Relation::at_most;
  const Scope sat = Scope::saturated;
  const Scope any = Scope::any;
  using CT = ConfigType;
  return {
      {"2.A", eq, T(C::vtri, C::vquad) + T(C::vtri, C::xpent) + T(C::vtri, C::large), N(C::vtri), sat},
      {"2.B", eq,
       T(C::vtri, C::vquad) + T(C::vquad, C::vquad, 2) + T(C::vquad, C::xtri) + T(C::vquad, C::xpent) +
           T(C::vquad, C::large),
       N(C::vquad, 2), sat},
      {"2.C", eq, T(C::xtri, C::vquad) + T(C::xtri, C::xpent) + T(C::xtri, C::large), N(C::xtri, 3), sat},
      {"2.D", eq,
       T(C::xtri, C::xpent) + T(C::xpent, C::vtri) + T(C::xpent, C::vquad) + T(C::xpent, C::xpent, 2) +
           T(C::xpent, C::large),
       N(C::xpent, 5), sat},
      {"3.A", le, T(C::xtri, C::xpent), G(CT::cfg9), sat},
      {"3.B", le, T(C::xpent, C::vquad), G(CT::cfg10), sat},
      {"3.C", le, T(C::xtri, C::vquad), G(CT::cfg12), sat},
      {"3.D", le, N(C::vtri), G(CT::cfg13) + G(CT::cfg14), sat},
      {"3.E", le, T(C::vtri, C::vquad, 2), V(var::kE1) + G(CT::cfg18, 2), sat},
      {"4.A", le, T(C::xpent, C::xpent, 2) + T(C::vtri, C::xpent) + T(C::xtri, C::xpent) - N(C::xpent, 4),
       G(CT::cfg15), sat},
      {"4.B", le, G(CT::cfg15), G(CT::cfg14), sat},
      {"5.A", le, large_trails() + N(C::kite, 5), V(var::kLargeSizeSum), sat},
      {"5.B", le,
       V(var::kLargeSizeSum) + V(var::kE, 6) + V(var::kX, 6) - N(C::xtri, 12) - N(C::xquad, 6) - N(C::vtri, 6),
       V(var::kVminus2, 30), sat},
      {"6", le, N(C::vtri, 2) + N(C::vquad, 2) + N(C::vvtri, 2) + N(C::kite, 2), V(var::kEx, 4), any},
      {"7", le,
       large_trails() + N(C::xtri, 3) + N(C::vtri) + N(C::xquad, 4) + N(C::vquad, 2) + N(C::xpent, 5),
       V(var::kE2, 2) + V(var::kE3, 4), any},
      {"8.A", eq, V(var::kE1) + V(var::kE2) + V(var::kE3), V(var::kEx), any},
      {"8.B", eq, V(var::kE1) + V(var::kE2, 2) + V(var::kE3, 3), V(var::kX, 2), any},
      {"8.C", le, G(CT::cfg18) + G(CT::cfg15, 2), V(var::kE2, 2), any},
      {"9.A", eq, V(var::kEx) + V(var::kE0), V(var::kE), any},
      {"9.B", le, N(C::vvtri) + N(C::kite), V(var::kE0, 2), any},
      {"9.C", le, G(CT::cfg10) + G(CT::cfg9) + G(CT::cfg12) + G(CT::cfg13) + G(CT::cfg14, 2), N(C::vvtri, 2),
       any},
  };
}

std::vector<ConstraintRow> build_sanity() {
  const Rational sixth(1, 6);
  return {
      {"5.B-prose", Relation::at_most,
       V(var::kE) + V(var::kX) + V(var::kLargeSizeSum, sixth) - N(C::xtri, 2) - N(C::xquad) - N(C::vtri),
       V(var::kV, 5), Scope::saturated},
      {"large-excess", Relation::at_most, V(var::kLargeSizeSum, sixth), V(var::kLargeSizeSum) - N(C::large, 5),
       Scope::saturated},
  };
}

}  // namespace

const std::vector<ConstraintRow>& constraint_rows() {
  static const std::vector<ConstraintRow> rows = build_rows();
  return rows;
}

const ConstraintRow& constraint_row(const std::string& id) {
  for (const auto& r : constraint_rows()) {
    if (r.id == id) return r;
  }
  throw std::out_of_range("no constraint row '" + id + "'");
}

const std::vector<ConstraintRow>& sanity_rows() {
  static const std::vector<ConstraintRow> rows = build_sanity();
  return rows;
}

bool ConstraintReport::all_applicable_pass() const {
  auto ok = [](const RowResult& r) { return !r.applicable || r.pass; };
  return std::all_of(rows.begin(), rows.end(), ok) && std::all_of(sanity.begin(), sanity.end(), ok);
}

const RowResult& ConstraintReport::row(const std::string& id) const {
  for (const auto& r : rows) {
    if (r.id == id) return r;
  }
  throw std::out_of_range("no constraint row '" + id + "'");
}

RowResult evaluate_row(const ConstraintRow& row, const std::map<std::string, std::int64_t>& values, bool applicable) {
  RowResult r;
  r.id = row.id;
  r.relation = row.relation;
  r.scope = row.scope;
  r.applicable = applicable;
  r.lhs = row.lhs.evaluate(values);
  r.rhs = row.rhs.evaluate(values);
  r.slack = r.rhs - r.lhs;
  r.pass = row.relation == Relation::equal ? r.slack == 0 : r.slack >= 0;
  return r;
}

ConstraintReport evaluate_constraints(const CensusCounts& census, bool saturated) {
  auto values = census.variables();
  ConstraintReport report;
  for (const auto& row : constraint_rows()) {
    bool applicable = row.scope == Scope::any || (saturated && census.stats.n >= 3);
    report.rows.push_back(evaluate_row(row, values, applicable));
  }
  for (const auto& row : sanity_rows()) {
    report.sanity.push_back(evaluate_row(row, values, saturated && census.stats.n >= 3));
  }
  return report;
}

Rational density_residual(const Drawing& drawing, const Rational& t) {
  if (drawing.edges.empty()) throw PreconditionError("density_residual: drawing has no edges");
  Arrangement a(drawing);
  DrawingStats s = stats(a.drawing());
  Rational cell_sum = 0;
  for (const auto& c : a.cells()) cell_sum += (t - 1) / 4 * c.size - t;
  Rational formula = t * (s.n - 2) - cell_sum - s.crossings;
  return Rational(static_cast<long>(s.edges)) - formula;
}

}  // namespace threeplane
