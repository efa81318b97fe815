#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "threeplane/census.hpp"
#include "threeplane/drawing.hpp"
#include "threeplane/linear_form.hpp"
#include "threeplane/rational.hpp"

namespace threeplane {

enum class Relation { equal, at_most };
enum class Scope { any, saturated };

std::string_view symbol(Relation relation);
std::string_view name(Scope scope);

struct ConstraintRow {
  std::string id;
  Relation relation = Relation::at_most;
  LinearForm lhs;
  LinearForm rhs;
  Scope scope = Scope::any;
};

// The 21 rows 2.A .. 9.C in report order.
const std::vector<ConstraintRow>& constraint_rows();
const ConstraintRow& constraint_row(const std::string& id);

// Two extra rows checked on saturated drawings only: the 5|V| form of 5.B and
// the bound (1/6) large_size_sum <= sum over large cells of (size - 5).
const std::vector<ConstraintRow>& sanity_rows();

struct RowResult {
  std::string id;
  Relation relation = Relation::at_most;
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs
  bool pass = false;
  Scope scope = Scope::any;
  bool applicable = true;
};

struct ConstraintReport {
  std::vector<RowResult> rows;
  std::vector<RowResult> sanity;
  bool all_applicable_pass() const;
  const RowResult& row(const std::string& id) const;
};

RowResult evaluate_row(const ConstraintRow& row, const std::map<std::string, std::int64_t>& values, bool applicable);
ConstraintReport evaluate_constraints(const CensusCounts& census, bool saturated);

// |E| - [t(|V|-2) - sum_c ((t-1)/4 |c| - t) - |X|]; zero on connected drawings.
Rational density_residual(const Drawing& drawing, const Rational& t);

}  // namespace threeplane
