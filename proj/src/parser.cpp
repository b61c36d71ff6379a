#include "jetspace/parser.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    skip_blanks();
    if (!at_digit()) fail("expected digits");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      const std::size_t at = pos_;
      const std::string e = digits();
      unsigned long k = 0;
      try {
        k = std::stoul(e);
      } catch (const std::out_of_range&) {
        throw ParseError("exponent too large", at);
      }
      if (k > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial atom() {
    skip_blanks();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      mpz_class n(num, 10);
      mpz_class d(1);
      if (accept('/')) {
        const std::size_t at = pos_;
        d = mpz_class(digits(), 10);
        if (d == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial::constant(ring_, Rational(n, d));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_.index_of(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

}  // namespace jetspace
