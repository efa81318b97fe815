#include "threeplane/linear_form.hpp"

#include <stdexcept>

namespace threeplane {

LinearForm::LinearForm(const std::string& variable, const Rational& coefficient) { add(variable, coefficient); }

Rational LinearForm::coefficient(const std::string& variable) const {
  auto it = terms_.find(variable);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinearForm& LinearForm::add(const std::string& variable, const Rational& coefficient) {
  Rational sum = this->coefficient(variable) + coefficient;
  if (sum == 0) {
    terms_.erase(variable);
  } else {
    terms_[variable] = sum;
  }
  return *this;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (const auto& [v, c] : other.terms_) add(v, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (const auto& [v, c] : other.terms_) add(v, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [v, c] : terms_) c *= factor;
  return *this;
}

Rational LinearForm::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [v, c] : terms_) {
    auto it = values.find(v);
    if (it == values.end()) throw std::out_of_range("no value for variable '" + v + "'");
    total += c * it->second;
  }
  return total;
}

Rational LinearForm::evaluate(const std::map<std::string, std::int64_t>& values) const {
  Rational total = 0;
  for (const auto& [v, c] : terms_) {
    auto it = values.find(v);
    if (it == values.end()) throw std::out_of_range("no value for variable '" + v + "'");
    total += c * Rational(static_cast<long>(it->second));
  }
  return total;
}

LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
LinearForm operator*(const Rational& factor, LinearForm form) { return form *= factor; }

std::string to_string(const LinearForm& form) {
  if (form.is_zero()) return "0";
  std::string out;
  for (const auto& [v, c] : form.terms()) {
    std::string coeff = to_string(c < 0 ? Rational(-c) : c);
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += (coeff == "1" ? "" : coeff + "*") + v;
  }
  return out;
}

}  // namespace threeplane
