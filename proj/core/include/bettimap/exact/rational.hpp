#pragma once

#include <gmpxx.h>

#include <string>

namespace bettimap::exact {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: reduced, positive denominator

// Height H(a/b) = max(|a|, |b|) of a reduced fraction.
Integer rational_height_H(const Rational& q);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

}  // namespace bettimap::exact
