#pragma once

#include <string>

#include "bettimap/exact/bivar.hpp"

namespace bettimap::exact {

// Whitespace-insensitive parsers for the polynomial text format
// "c0 + c1*t + c2*t^2". Coefficients may be written p/q; products,
// parentheses and integer powers are accepted. The parameter variable may be
// spelled t, l, L or lambda; BivarPoly additionally uses x.
RatPoly parse_ratpoly(const std::string& s);
RatFunc parse_ratfunc(const std::string& s);
BivarPoly parse_bivar(const std::string& s);

}  // namespace bettimap::exact
