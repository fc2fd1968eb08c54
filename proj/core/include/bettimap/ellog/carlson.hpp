#pragma once

#include "bettimap/mp/complex.hpp"

namespace bettimap::ellog {

// Carlson's symmetric integrals for complex arguments off the negative real
// axis (at most one of them zero), by the duplication algorithm.
mp::Complex carlson_rf(const mp::Complex& x, const mp::Complex& y, const mp::Complex& z);
mp::Complex carlson_rd(const mp::Complex& x, const mp::Complex& y, const mp::Complex& z);

}  // namespace bettimap::ellog
