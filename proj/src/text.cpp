#include "dcf/text.hpp"

#include <cctype>

namespace dcf {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const TowerField& field, std::string var)
      : s_(normalize(text)), field_(field), var_(std::move(var)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  // Maps the unicode minus sign to '-'.
  static std::string normalize(const std::string& in) {
    std::string out;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 && static_cast<unsigned char>(in[i + 1]) == 0x88 &&
          static_cast<unsigned char>(in[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += in[i];
      }
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "cannot parse \"" + s_ + "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        const Polynomial d = unary();
        if (d.is_zero()) throw Error(ErrorKind::ZeroDivision, "division by zero in \"" + s_ + "\"");
        if (*d.degree() != 0) fail("division by a non-constant");
        acc = acc * Polynomial(field_, {field_.inv(d.coeffs()[0])});
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (eat('-')) return Polynomial(field_) - unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!eat('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer");
    const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    Polynomial r(field_, {field_.one()});
    Polynomial b = base;
    unsigned long k = e;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const mpz_class n(s_.substr(start, pos_ - start));
      return Polynomial(field_, {field_.from_scalar(field_.base().from_mpz(n))});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (!var_.empty() && id == var_) return Polynomial::x(field_);
      if (const std::size_t level = field_.find_generator(id); level > 0)
        return Polynomial(field_, {field_.generator_element(level)});
      if (id == "t" && field_.base().kind() == BaseField::Kind::RationalFunctions)
        return Polynomial(field_, {field_.from_scalar(field_.base().t())});
      fail("unknown symbol '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  TowerField field_;
  std::string var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const TowerField& field, const std::string& var) {
  return Parser(text, field, var).parse();
}

TowerElement parse_element(const std::string& text, const TowerField& field) {
  const Polynomial p = Parser(text, field, "").parse();
  if (p.is_zero()) return {field, field.zero()};
  return p.coeff(0);
}

}  // namespace dcf
