#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace threeplane {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p" or "p/q" with an optional leading minus; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace threeplane
