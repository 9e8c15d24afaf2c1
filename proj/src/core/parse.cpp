#include "tropcm/parse.hpp"

#include <cctype>

namespace tropcm {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring, std::size_t line)
      : text_(text.substr(0, text.find('#'))), ring_(ring), line_(line) {}

  Polynomial run() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const auto start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      mpz_class num(read_digits());
      mpz_class den(1);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::string d = read_digits();
        if (d.empty()) fail("expected a denominator after '/'");
        den = mpz_class(d);
        if (sgn(den) == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      try {
        return Polynomial::constant(ring_, ring_->field().from_rational(num, den));
      } catch (const std::domain_error& e) {
        pos_ = start;
        fail(std::string("coefficient not in field: ") + e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      const auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string text_;
  RingPtr ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, std::size_t line) {
  return Parser(text, ring, line).run();
}

}  // namespace tropcm
