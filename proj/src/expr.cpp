#include "bgsys/expr.hpp"

#include <cctype>

namespace bgsys {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const LieRepData& rep) : text_(text), rep_(rep) {}

  FockState parse() {
    FockState s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool keyword(const std::string& kw) {
    skip_ws();
    if (text_.compare(pos_, kw.size(), kw) == 0) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  FockState expr() {
    bool neg = false;
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    FockState s = term();
    if (neg) s *= Rational(-1);
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        s += term();
      } else if (c == '-') {
        ++pos_;
        s -= term();
      } else {
        break;
      }
    }
    return s;
  }

  FockState term() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Rational c = rational_literal();
      FockState s = factor();
      s *= c;
      return s;
    }
    return factor();
  }

  Rational rational_literal() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::string num = text_.substr(start, pos_ - start);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected a denominator");
      num += "/" + text_.substr(dstart, pos_ - dstart);
    }
    return Rational(num);
  }

  std::string name_token() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '*' || text_[pos_] == '#'))
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    if (start == pos_) fail("expected a basis label");
    return text_.substr(start, pos_ - start);
  }

  long nat_token() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  FockState generator(ModeKind kind) {
    expect('(');
    size_t name_pos = pos_;
    std::string name = name_token();
    expect(',');
    long k = nat_token();
    expect(')');

    int index = -1;
    if (kind == ModeKind::gamma) {
      if (name.empty() || name.back() != '\'') {
        pos_ = name_pos;
        fail("gamma labels are primed module labels like e'");
      }
      std::string base = name.substr(0, name.size() - 1);
      try {
        index = rep_.v_basis_index(base);
      } catch (const error&) {
        pos_ = name_pos;
        fail("unknown module basis label '" + base + "'");
      }
    } else {
      try {
        index = rep_.v_basis_index(name);
      } catch (const error&) {
        pos_ = name_pos;
        fail("unknown module basis label '" + name + "'");
      }
    }
    // beta(x,k) denotes the k-th derivative field: the state k! G(-k-1)|0>
    FockState s = FockState::single(kind, index, static_cast<int>(-k - 1));
    s *= factorial(static_cast<unsigned>(k));
    return s;
  }

  FockState factor() {
    skip_ws();
    if (keyword("beta")) return generator(ModeKind::beta);
    if (keyword("gamma")) return generator(ModeKind::gamma);
    if (keyword("D")) {
      expect('(');
      FockState inner = expr();
      expect(')');
      return derivative(inner);
    }
    if (eat(':')) {
      FockState a = factor();
      FockState b = factor();
      expect(':');
      return wick(a, b);
    }
    if (eat('(')) {
      FockState inner = expr();
      expect(')');
      return inner;
    }
    fail("expected beta(...), gamma(...), D(...), ':' or '('");
  }

  const std::string& text_;
  const LieRepData& rep_;
  size_t pos_ = 0;
};

}  // namespace

FockState parse_operator_expr(const std::string& text, const LieRepData& rep) {
  Parser p(text, rep);
  return p.parse();
}

}  // namespace bgsys
