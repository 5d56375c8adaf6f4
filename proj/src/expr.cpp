#include "acell/expr.hpp"

#include <cctype>
#include <vector>

#include "acell/error.hpp"
#include "acell/symfunc.hpp"

namespace acell {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const BlockShape& shape, const ParseOptions& options)
      : text_(text), shape_(shape), options_(options) {}

  LaurentPoly parse() {
    LaurentPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 0, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!peek_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    bool negative = accept('-');
    std::string d = digits();
    if (d.size() > 9) fail("integer too large");
    int v = std::stoi(d);
    return negative ? -v : v;
  }

  LaurentPoly expr() {
    LaurentPoly r(shape_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    LaurentPoly t = term();
    r = negative ? -t : t;
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  LaurentPoly term() {
    LaurentPoly r = factor();
    while (true) {
      if (accept('*')) {
        r = r * factor();
      } else if (peek('/')) {
        std::size_t at = pos_;
        ++pos_;
        LaurentPoly d = factor();
        if (d.size() != 1) {
          pos_ = at;
          fail("division is only defined by a single nonzero term");
        }
        r = r * d.term_inverse();
      } else {
        break;
      }
    }
    return r;
  }

  LaurentPoly factor() {
    if (accept('-')) return -factor();
    std::size_t at = pos_;
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    int num = 0;
    int den = 1;
    char close = 0;
    if (accept('{')) {
      close = '}';
    } else if (accept('(')) {
      close = ')';
    }
    num = small_int();
    if (close) {
      if (accept('/')) den = small_int();
      expect(close);
    }
    if (den != 1 && den != 2) fail("exponent denominator must be 1 or 2");
    if (den == 2 && num % 2 == 0) {
      num /= 2;
      den = 1;
    }
    if (den == 2) {
      if (base.size() != 1 || !base.is_z_free() || base.terms().begin()->second != 1) {
        pos_ = at;
        fail("half-integer exponents apply only to powers of q");
      }
      int q2 = base.terms().begin()->first.q2;
      if ((q2 * num) % 2 != 0) fail("exponent leaves half-integer powers of q");
      return LaurentPoly::q_power(shape_, q2 * num / 2);
    }
    if (num >= 0) return base.pow(num);
    if (base.size() != 1) {
      pos_ = at;
      fail("negative powers are only defined for single terms");
    }
    return base.term_inverse().pow(-num);
  }

  LaurentPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      LaurentPoly r = expr();
      expect(')');
      return r;
    }
    if (peek_digit()) {
      Rational c(digits());
      return LaurentPoly::constant(shape_, c);
    }
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (auto it = options_.aliases.find(name); it != options_.aliases.end()) {
      return variable(it->second.block, it->second.mu, start);
    }
    if (name == "q") return LaurentPoly::q_power(shape_, 2);
    if (name == "z") return z_atom(start);
    if (name == "s") return schur_atom(start);
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  LaurentPoly variable(int block, int mu, std::size_t at) {
    try {
      return LaurentPoly::variable(shape_, block, mu);
    } catch (const AlgebraError& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  int sole_block(std::size_t at) {
    if (shape_.num_blocks() != 1) {
      pos_ = at;
      fail("short variable names need a one-block shape; use z[i][mu] or s[i](...)");
    }
    return shape_.blocks()[0].id;
  }

  LaurentPoly z_atom(std::size_t at) {
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      int block = small_int();
      expect(']');
      expect('[');
      int mu = small_int();
      expect(']');
      return variable(block, mu, at);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int block = sole_block(at);
      int mu = small_int();
      return variable(block, mu, at);
    }
    if (shape_.num_vars() != 1) {
      pos_ = at;
      fail("bare 'z' needs a shape with exactly one variable");
    }
    for (const auto& b : shape_.blocks()) {
      if (b.size == 1) return variable(b.id, 1, at);
    }
    fail("no variable");
  }

  LaurentPoly schur_atom(std::size_t at) {
    int block = 0;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      block = small_int();
      expect(']');
    } else {
      block = sole_block(at);
    }
    expect('(');
    std::vector<int> parts;
    if (!accept(')')) {
      do {
        parts.push_back(small_int());
      } while (accept(','));
      expect(')');
    }
    try {
      return schur(shape_, block, GLWeight(std::move(parts)));
    } catch (const AlgebraError& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  std::string_view text_;
  const BlockShape& shape_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const BlockShape& shape,
                       const ParseOptions& options) {
  return Parser(text, shape, options).parse();
}

}  // namespace acell
