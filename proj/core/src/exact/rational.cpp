#include "bettimap/exact/rational.hpp"

#include <algorithm>

#include "bettimap/error.hpp"

namespace bettimap::exact {

Integer rational_height_H(const Rational& q) {
  Integer a = abs(q.get_num());
  Integer b = q.get_den();
  return a > b ? a : b;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw DomainError("empty rational");
  Rational q;
  if (q.set_str(t, 10) != 0) throw DomainError("cannot parse rational: " + s);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace bettimap::exact
