#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "threeplane/rational.hpp"

namespace threeplane {

// Sparse rational combination of named variables; zero terms are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(const std::string& variable, const Rational& coefficient = 1);

  const std::map<std::string, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::string& variable) const;
  bool is_zero() const { return terms_.empty(); }

  LinearForm& add(const std::string& variable, const Rational& coefficient);
  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& factor);

  // Throws std::out_of_range when a variable has no value.
  Rational evaluate(const std::map<std::string, Rational>& values) const;
  Rational evaluate(const std::map<std::string, std::int64_t>& values) const;

  bool operator==(const LinearForm& other) const { return terms_ == other.terms_; }

 private:
  std::map<std::string, Rational> terms_;
};

LinearForm operator+(LinearForm a, const LinearForm& b);
LinearForm operator-(LinearForm a, const LinearForm& b);
LinearForm operator*(const Rational& factor, LinearForm form);

std::string to_string(const LinearForm& form);

}  // namespace threeplane
