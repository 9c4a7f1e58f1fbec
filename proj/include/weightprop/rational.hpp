#pragma once

#include <gmpxx.h>

#include <string>

namespace weightprop {

using Rational = mpq_class;

// "3", "-2/5"
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace weightprop
