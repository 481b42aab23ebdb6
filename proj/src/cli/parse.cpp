#include "hayman/parse.hpp"

#include <cctype>

#include "hayman/symbolic.hpp"

namespace hayman {
namespace {

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFunc run() {
    RatFunc f = expr();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc f = term();
    for (;;) {
      if (eat('+')) f = f + term();
      else if (eat('-')) f = f - term();
      else return f;
    }
  }

  RatFunc term() {
    RatFunc f = unary();
    for (;;) {
      if (eat('*')) {
        f = f * unary();
      } else if (eat('/')) {
        const std::size_t at = i_;
        RatFunc g = unary();
        if (g.is_zero()) throw ParseError(at, "division by zero");
        f = f / g;
      } else {
        return f;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    const std::size_t at = i_;
    RatFunc e = unary();
    auto v = constant_value(e);
    if (!v || !is_integer(*v)) throw ParseError(at, "exponent must be an integer constant");
    if (abs(*v) > kMaxExponent) throw ParseError(at, "exponent too large");
    const int k = static_cast<int>(v->convert_to<long>());
    if (k < 0 && base.is_zero()) throw ParseError(at, "division by zero");
    return pow(base, k);
  }

  RatFunc atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '.') fail("decimal literals are not accepted; write a fraction");
      return RatFunc(Rational(s_.substr(start, i_ - start).c_str()));
    }
    if (c == '(') {
      ++i_;
      RatFunc f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(start, i_ - start);
      if (name == "z") return RatFunc::z();
      throw ParseError(start, "unknown identifier '" + name + "' (only z and rational constants are allowed)");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).run(); }

}  // namespace hayman
