#include "resval/poly_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "resval/errors.hpp"

namespace resval {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' digits)?
// primary := digits | 'x' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    Polynomial result = peek() == '[' ? coefficient_list() : expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E') fail("non-integer coefficient");
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer signed_integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    Integer value(digits());
    return negative ? Integer(-value) : value;
  }

  Polynomial coefficient_list() {
    expect('[');
    std::vector<Integer> coeffs;
    if (!accept(']')) {
      do {
        coeffs.push_back(signed_integer());
      } while (accept(','));
      expect(']');
    }
    return Polynomial(std::move(coeffs));
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const std::string exponent = digits();
    if (exponent.size() > 4) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(std::stoul(exponent)));
  }

  Polynomial primary() {
    skip_space();
    const char c = peek();
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Polynomial::x();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(Integer(digits()));
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace resval
