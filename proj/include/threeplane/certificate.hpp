#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "threeplane/census.hpp"
#include "threeplane/constraints.hpp"
#include "threeplane/linear_form.hpp"

namespace threeplane {

enum class Target { edges, crossings };

std::string_view name(Target target);
Target parse_target(std::string_view text);

struct Certificate {
  Target target = Target::edges;
  std::map<std::string, Rational> coefficients;  // row id -> multiplier
};

Certificate builtin_certificate(Target target);

struct RowForm {
  LinearForm form;  // lhs - rhs
  Relation relation = Relation::at_most;
};

std::map<std::string, RowForm> row_forms();

// |E| or |X| minus 11/2 (|V|-2).
LinearForm target_form(Target target);

struct SymbolicResult {
  LinearForm combination;  // sum of coefficient * row form
  LinearForm residual;     // combination - target form
  // Every variable cancels.
  bool exact() const { return residual.is_zero(); }
  // All residual coefficients are positive; since every census variable is
  // nonnegative this still yields target <= 11/2 (|V|-2).
  bool dominated() const;
};

// Throws InvalidCertificate when an inequality row has a negative multiplier
// or a row id is unknown.
SymbolicResult verify_symbolic(const Certificate& certificate);

struct NumericRow {
  std::string id;
  Rational coefficient;
  Rational slack;         // rhs - lhs of the row
  Rational contribution;  // coefficient * slack
};

struct NumericResult {
  Target target = Target::edges;
  Rational value;
  Rational bound;
  Rational total_slack;  // bound - value
  std::vector<NumericRow> rows;
  Rational residual_contribution;  // residual form evaluated on the census
  bool decomposition_holds = false;  // total_slack == sum of contributions + residual_contribution
  bool within_bound() const { return value <= bound; }
};

NumericResult verify_numeric(const CensusCounts& census, Target target);
// Precondition: the drawing is 3-saturated.
NumericResult verify_numeric(const Drawing& drawing, Target target);

}  // namespace threeplane
