#include "bettimap/exact/text.hpp"

#include <cctype>

#include "bettimap/error.hpp"

namespace bettimap::exact {

namespace {

enum class Var { Param, X };

struct PolyTraits {
  using V = RatPoly;
  static V constant(const Rational& c) { return V(c); }
  static V variable(Var v) {
    if (v == Var::X) throw DomainError("unexpected variable x in univariate polynomial");
    return RatPoly::variable();
  }
  static V divide(const V& a, const V& b) {
    if (b.degree() != 0) throw DomainError("division by a non-constant in a polynomial");
    return a * (1 / b.leading());
  }
  static V power(const V& a, long e) { return pow(a, int(e)); }
};

struct FuncTraits {
  using V = RatFunc;
  static V constant(const Rational& c) { return V(c); }
  static V variable(Var v) {
    if (v == Var::X) throw DomainError("unexpected variable x in rational function");
    return RatFunc(RatPoly::variable());
  }
  static V divide(const V& a, const V& b) {
    if (b.is_zero()) throw DomainError("division by zero in rational function");
    return a / b;
  }
  static V power(const V& a, long e) { return pow(a, int(e)); }
};

struct BivarTraits {
  using V = BivarPoly;
  static V constant(const Rational& c) { return V(RatPoly(c)); }
  static V variable(Var v) { return v == Var::X ? BivarPoly::x() : BivarPoly::t(); }
  static V divide(const V& a, const V& b) {
    if (b.degree_x() != 0 || b.coeff(0).degree() != 0) throw DomainError("division by a non-constant in a polynomial");
    Rational inv = 1 / b.coeff(0).leading();
    return a * BivarPoly(RatPoly(inv));
  }
  static V power(const V& a, long e) { return pow(a, int(e)); }
};

template <class T>
class Parser {
 public:
  using V = typename T::V;
  explicit Parser(const std::string& s) : s_(s) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isdigit(c) || std::isalpha(c) || c == '(' || c == 0xCE;
  }

  V expr() {
    V acc;
    bool neg = false;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  V term() {
    V acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        acc = T::divide(acc, power());
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  V power() {
    if (peek('-')) {
      ++pos_;
      return -power();
    }
    V base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(s_.substr(start, pos_ - start));
      return T::power(base, e);
    }
    return base;
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return T::constant(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (c == 0xCE && pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_ + 1]) == 0xBB) {
      pos_ += 2;
      return T::variable(Var::Param);
    }
    if (std::isalpha(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "x" || name == "X") return T::variable(Var::X);
      if (name == "t" || name == "l" || name == "L" || name == "lambda") return T::variable(Var::Param);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

RatPoly parse_ratpoly(const std::string& s) { return Parser<PolyTraits>(s).parse(); }
RatFunc parse_ratfunc(const std::string& s) { return Parser<FuncTraits>(s).parse(); }
BivarPoly parse_bivar(const std::string& s) { return Parser<BivarTraits>(s).parse(); }

}  // namespace bettimap::exact
