#include <cctype>

#include "polyzeta/polynomial.hpp"

namespace polyzeta {

namespace {

constexpr unsigned kMaxPower = 1000;

// expr    := sign? term (('+'|'-') term)*
// term    := factor ('*'? factor)*
// factor  := sign? primary ('^' uint)?
// primary := int ('/' uint)? | 'i' | 'x' uint | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty input", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip_space();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'i' || c == '(';
  }

  mpz_class unsigned_integer(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial sum(dim_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Polynomial t = term();
    sum += negative ? -t : t;
    while (true) {
      if (accept('+'))
        sum += term();
      else if (accept('-'))
        sum -= term();
      else
        break;
    }
    return sum;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      if (accept('*')) {
        p *= factor();
      } else if (starts_factor()) {
        p *= factor();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial factor() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Polynomial base = primary();
    if (accept('^')) {
      std::size_t at = pos_;
      mpz_class e = unsigned_integer("exponent");
      if (e > kMaxPower) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return negative ? -base : base;
  }

  Polynomial primary() {
    skip_space();
    std::size_t start = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = unsigned_integer("integer");
      Rational q(num);
      if (accept('/')) {
        std::size_t at = pos_;
        mpz_class den = unsigned_integer("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
        q = Rational(num, den);
        q.canonicalize();
      }
      return Polynomial::constant(dim_, GaussianRational(q));
    }
    if (c == 'i') {
      ++pos_;
      return Polynomial::constant(dim_, GaussianRational(0, 1));
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      mpz_class idx = unsigned_integer("variable index");
      if (idx < 1 || idx > dim_)
        throw ParseError("variable x" + idx.get_str() + " outside x1..x" + std::to_string(dim_), at);
      return Polynomial::variable(dim_, idx.get_ui() - 1);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", start);
    throw ParseError(std::string("unexpected '") + c + "'", start);
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t dim) {
  if (dim == 0) throw DomainError("dimension must be positive");
  return Parser(text, dim).run();
}

}  // namespace polyzeta
