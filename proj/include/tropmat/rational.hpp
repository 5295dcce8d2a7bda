#pragma once

#include <gmpxx.h>

#include <string>

namespace tropmat {

using Rational = mpq_class;

/// "3", "-1/2", "0.25", "-1.5". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace tropmat
