#include "bettimap/disc.hpp"

#include <cmath>
#include <sstream>

namespace bettimap {

bool Disc::contains(const mp::Complex& lambda, double slack) const {
  mp::Real d = mp::abs(lambda - center());
  return d <= mp::Real(radius * (1.0 + slack));
}

double Disc::singular_distance() const { return std::min(std::hypot(re, im), std::hypot(re - 1.0, im)); }

std::string Disc::validate() const {
  if (!std::isfinite(re) || !std::isfinite(im) || !std::isfinite(radius)) return "disc: coordinates must be finite";
  if (!(radius > 0)) return "disc.radius must be positive";
  if (std::hypot(re, im) <= radius) return "disc must not contain lambda = 0";
  if (std::hypot(re - 1.0, im) <= radius) return "disc must not contain lambda = 1";
  return {};
}

std::string Disc::describe() const {
  std::ostringstream os;
  os << "disc(" << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i, " << radius << ")";
  return os.str();
}

}  // namespace bettimap
