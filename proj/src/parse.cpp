#include "gencliff/parse.hpp"

#include <cctype>
#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

namespace {

// A scalar part plus the coefficients of the formal linear symbols.
struct Value {
  ScalarField scalar;
  std::vector<ScalarField> lin;  // empty when no symbol has appeared

  bool has_lin() const { return !lin.empty(); }
};

constexpr unsigned kMaxExponent = 255;

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart, const std::vector<std::string>& symbols)
      : text_(text), chart_(chart), symbols_(symbols) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

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

  Value expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Value acc = term();
    if (negate) acc = neg(acc);
    while (true) {
      if (accept('+')) {
        acc = add(acc, term());
      } else if (accept('-')) {
        acc = add(acc, neg(term()));
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*')) {
        acc = mul(acc, factor(), at);
      } else if (accept('/')) {
        std::size_t rhs_at = pos_;
        Value rhs = factor();
        acc = div(acc, rhs, rhs_at);
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    skip_ws();
    std::size_t at = pos_;
    Value b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t exp_at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected an unsigned integer exponent");
      if (digits.size() > 3 || std::stoul(digits) > kMaxExponent)
        fail_at("exponent exceeds " + std::to_string(kMaxExponent), exp_at);
      unsigned e = static_cast<unsigned>(std::stoul(digits));
      if (b.has_lin() && e != 1) fail_at("frame symbol raised to a power", at);
      if (!b.has_lin()) b.scalar = power(b.scalar, e);
    }
    return b;
  }

  Value base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = read_digits();
      return Value{ScalarField(GaussianRational(Rational(digits))), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name = read_ident();
      for (std::size_t k = 0; k < symbols_.size(); ++k) {
        if (symbols_[k] == name) {
          Value v;
          v.lin.assign(symbols_.size(), ScalarField());
          v.lin[k] = ScalarField(1);
          return v;
        }
      }
      if (name == "i") return Value{ScalarField(GaussianRational::i()), {}};
      if (auto idx = chart_.index_of(name)) return Value{ScalarField(Poly::variable(*idx)), {}};
      fail_at("unknown identifier '" + name + "'", at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static ScalarField power(ScalarField b, unsigned e) {
    ScalarField r(1);
    while (e != 0) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e != 0) b *= b;
    }
    return r;
  }

  static Value neg(Value v) {
    v.scalar = -v.scalar;
    for (auto& c : v.lin) c = -c;
    return v;
  }

  static Value add(Value a, const Value& b) {
    a.scalar += b.scalar;
    if (b.has_lin()) {
      if (!a.has_lin()) a.lin.assign(b.lin.size(), ScalarField());
      for (std::size_t k = 0; k < b.lin.size(); ++k) a.lin[k] += b.lin[k];
    }
    return a;
  }

  Value mul(const Value& a, const Value& b, std::size_t at) const {
    if (a.has_lin() && b.has_lin()) fail_at("product of two frame symbols", at);
    const Value& lin = a.has_lin() ? a : b;
    const Value& sc = a.has_lin() ? b : a;
    Value r;
    r.scalar = a.scalar * b.scalar;
    for (const auto& c : lin.lin) r.lin.push_back(c * sc.scalar);
    return r;
  }

  Value div(Value a, const Value& b, std::size_t at) const {
    if (b.has_lin()) fail_at("frame symbol in a denominator", at);
    if (b.scalar.is_zero())
      throw std::domain_error("division by the zero polynomial at position " + std::to_string(at));
    a.scalar /= b.scalar;
    for (auto& c : a.lin) c /= b.scalar;
    return a;
  }

  std::string_view text_;
  const Chart& chart_;
  const std::vector<std::string>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarField parse_expr(std::string_view text, const Chart& chart) {
  static const std::vector<std::string> kNoSymbols;
  return Parser(text, chart, kNoSymbols).parse().scalar;
}

std::vector<ScalarField> parse_linear(std::string_view text, const Chart& chart,
                                      const std::vector<std::string>& symbols) {
  Value v = Parser(text, chart, symbols).parse();
  if (!v.scalar.is_zero()) throw ParseError("term without a frame symbol", 0);
  if (!v.has_lin()) v.lin.assign(symbols.size(), ScalarField());
  return v.lin;
}

}  // namespace gencliff
