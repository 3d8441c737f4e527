#include "pcclosure/parse.hpp"

#include <cctype>

namespace pcc {

namespace {

// One recursive-descent parser covers both entry points: elements are the
// X-free case. Values are carried as polynomials in X over K so that 'X'
// needs no special casing until a division or exponent inspects them.
class Parser {
 public:
  Parser(const std::string& text, int rank, bool allow_x)
      : text_(text), rank_(rank), allow_x_(allow_x) {}

  FieldPoly parse() {
    FieldPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  FieldPoly expr() {
    FieldPoly v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  FieldPoly term() {
    FieldPoly v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        FieldPoly d = factor();
        if (d.degree() > 0) fail("division by a polynomial in X");
        if (d.is_zero()) fail("division by zero");
        v = d.coeff(0).inverse() * v;
      } else {
        return v;
      }
    }
  }

  FieldPoly factor() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    FieldPoly v = atom();
    if (eat('^')) {
      long long e = read_small_int();
      if (v.degree() > 0) {
        if (e < 0) fail("negative power of a polynomial in X");
        FieldPoly r = FieldPoly::constant(FieldElement::one(rank_));
        for (long long i = 0; i < e; ++i) r = r * v;
        v = r;
      } else {
        if (v.is_zero() && e < 0) fail("negative power of zero");
        v = FieldPoly::constant(v.coeff(0).pow(e));
      }
    }
    if (neg) v = FieldPoly::constant(FieldElement::from_rat(rank_, -1)) * v;
    return v;
  }

  FieldPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return FieldPoly::constant(FieldElement::from_rat(rank_, Rat(read_int())));
    }
    if (c == 't') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected variable index after 't'");
      long long idx = read_small_int();
      if (idx < 1 || idx > rank_) fail("variable index out of rank");
      return FieldPoly::constant(FieldElement::var(rank_, static_cast<int>(idx)));
    }
    if (c == 'X') {
      if (!allow_x_) fail("'X' is not allowed in this context");
      ++pos_;
      return FieldPoly::variable(rank_);
    }
    fail("unexpected character");
  }

  Int read_int() {
    skip_ws();
    size_t begin = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = begin;
      fail("expected integer");
    }
    return Int(text_.substr(begin, pos_ - begin));
  }

  long long read_small_int() {
    Int v = read_int();
    if (v > 1000000 || v < -1000000) fail("exponent too large");
    return v.convert_to<long long>();
  }

  const std::string& text_;
  int rank_;
  bool allow_x_;
  size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(const std::string& text, int rank) {
  Parser p(text, rank, false);
  FieldPoly v = p.parse();
  return v.coeff(0);
}

FieldPoly parse_poly(const std::string& text, int rank) {
  Parser p(text, rank, true);
  return p.parse();
}

}  // namespace pcc
