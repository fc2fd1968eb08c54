#include "bettimap/ellog/carlson.hpp"

#include "bettimap/error.hpp"

namespace bettimap::ellog {

using mp::Complex;
using mp::Real;

Complex carlson_rf(const Complex& x0, const Complex& y0, const Complex& z0) {
  int zeros = int(x0.is_zero()) + int(y0.is_zero()) + int(z0.is_zero());
  if (zeros > 1) throw DomainError("carlson_rf: more than one argument is zero");
  Complex x = x0, y = y0, z = z0;
  // Series through degree 7: stop once the relative spread is below 2^-(bits/8).
  Real tol = mp::two_pow(-(mp::precision() + 10) / 8);
  Complex A;
  for (int it = 0; it < 200; ++it) {
    A = (x + y + z) / 3;
    Real a = mp::abs(A);
    Real spread = mp::max(mp::abs(A - x), mp::max(mp::abs(A - y), mp::abs(A - z)));
    if (spread <= tol * a) break;
    Complex sx = mp::sqrt(x), sy = mp::sqrt(y), sz = mp::sqrt(z);
    Complex lam = sx * sy + sx * sz + sy * sz;
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
  }
  A = (x + y + z) / 3;
  Complex X = (A - x) / A, Y = (A - y) / A;
  Complex Z = -(X + Y);
  Complex E2 = X * Y - Z * Z, E3 = X * Y * Z;
  Complex E22 = E2 * E2;
  Complex s = 1 - E2 / 10 + E3 / 14 + E22 / 24 - 3 * E2 * E3 / 44 - 5 * E22 * E2 / 208 + 3 * E3 * E3 / 104 +
              E22 * E3 / 16;
  return s / mp::sqrt(A);
}

Complex carlson_rd(const Complex& x0, const Complex& y0, const Complex& z0) {
  if (z0.is_zero() || (x0.is_zero() && y0.is_zero())) throw DomainError("carlson_rd: invalid arguments");
  Complex x = x0, y = y0, z = z0;
  Real tol = mp::two_pow(-(mp::precision() + 10) / 6);
  Complex sum;
  Real fac(1);
  Complex A;
  for (int it = 0; it < 300; ++it) {
    A = (x + y + 3 * z) / 5;
    Real a = mp::abs(A);
    Real spread = mp::max(mp::abs(A - x), mp::max(mp::abs(A - y), mp::abs(A - z)));
    if (spread <= tol * a) break;
    Complex sx = mp::sqrt(x), sy = mp::sqrt(y), sz = mp::sqrt(z);
    Complex lam = sx * sy + sx * sz + sy * sz;
    sum += Complex(fac) / (sz * (z + lam));
    fac /= 4;
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
  }
  A = (x + y + 3 * z) / 5;
  Complex X = (A - x) / A, Y = (A - y) / A;
  Complex Z = -(X + Y) / 3;
  Complex XY = X * Y, Z2 = Z * Z;
  Complex E2 = XY - 6 * Z2;
  Complex E3 = (3 * XY - 8 * Z2) * Z;
  Complex E4 = 3 * (XY - Z2) * Z2;
  Complex E5 = XY * Z2 * Z;
  Complex s = 1 - 3 * E2 / 14 + E3 / 6 + 9 * E2 * E2 / 88 - 3 * E4 / 22 - 9 * E2 * E3 / 52 + 3 * E5 / 26;
  return fac * s / (A * mp::sqrt(A)) + 3 * sum;
}

}  // namespace bettimap::ellog
