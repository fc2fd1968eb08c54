#pragma once

// Integer polynomial helpers shared by the gcd and factorisation code.

#include <gmpxx.h>

#include <vector>

namespace bettimap::exact::detail {

using ZPoly = std::vector<mpz_class>;  // ascending, top coefficient nonzero

void ztrim(ZPoly& p);
inline int zdeg(const ZPoly& p) { return int(p.size()) - 1; }
mpz_class zcontent(const ZPoly& p);
ZPoly zprimitive(const ZPoly& p);  // positive leading coefficient
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zprem(const ZPoly& a, const ZPoly& b);
// Exact quotient a / b over Z if it exists.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q);
ZPoly zgcd(ZPoly a, ZPoly b);  // primitive gcd, positive leading coefficient

}  // namespace bettimap::exact::detail
