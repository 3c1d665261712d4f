#include "qweyl/parser.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

using Value = std::variant<Scalar, AlgebraElement, HopfElement>;

class Parser {
 public:
  Parser(std::string_view text, std::optional<AlgebraDescriptor> d, bool hopf)
      : text_(text), desc_(d), hopf_(hopf) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail(pos_, {"+", "-", "*", "/", "^", "'", "end of input"}, "unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected, const std::string& what) const {
    std::string msg = what + " at " + std::to_string(at) + ", expected one of:";
    for (const auto& e : expected) msg += " " + e;
    throw SyntaxError(at, std::move(expected), msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_, {std::string(1, c)}, "missing token");
  }

  Value expr() {
    Value v = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        v = add(v, term(), at, false);
      } else if (accept('-')) {
        v = add(v, term(), at, true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = mul(v, unary(), at);
      } else if (accept('/')) {
        Value r = unary();
        const Scalar* s = std::get_if<Scalar>(&r);
        if (s == nullptr) fail(at, {"scalar divisor"}, "division by a non-scalar");
        if (s->is_zero()) fail(at, {"nonzero divisor"}, "division by zero");
        v = mul(v, Value(s->inverse()), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) return mul(Value(Scalar(-1)), unary(), at);
    return postfix();
  }

  Value postfix() {
    Value v = primary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('^')) {
        const bool neg = accept('-');
        skip();
        const std::size_t num_at = pos_;
        const long k = integer();
        if (k > 1000) fail(num_at, {"exponent <= 1000"}, "exponent too large");
        v = power_of(v, neg ? -static_cast<int>(k) : static_cast<int>(k), at);
      } else if (accept('\'')) {
        v = star_of(v);
      } else {
        return v;
      }
    }
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_, {"integer"}, "missing integer");
    if (pos_ - start > 9) fail(start, {"integer below 10^9"}, "integer literal too long");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<std::string> primary_expected() const {
    std::vector<std::string> e{"integer", "(", "-", "i", "q0", "q", "lambda"};
    if (desc_) e.insert(e.end(), {"y<k>", "x<k>", "R<k>", "Q<k>"});
    if (hopf_) e.insert(e.end(), {"K<k>", "E<k>", "F<k>", "S("});
    e.push_back("eps(");
    return e;
  }

  Value primary() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail(at, primary_expected(), "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Value(Scalar(integer()));
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(at, primary_expected(), "unexpected character");
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string name(text_.substr(pos_, end - pos_));
    std::size_t dend = end;
    while (dend < text_.size() && std::isdigit(static_cast<unsigned char>(text_[dend]))) ++dend;
    const std::string digits(text_.substr(end, dend - end));
    pos_ = dend;

    if (digits.empty()) {
      if (name == "i") return Value(Scalar::i());
      if (name == "q") return Value(Scalar::q());
      if (name == "lambda") return Value(Scalar::lambda());
      if (name == "eps" || name == "S") {
        expect('(');
        Value v = expr();
        expect(')');
        return name == "eps" ? counit_of(v, at) : antipode_of(v, at);
      }
      fail(at, primary_expected(), "unknown identifier '" + name + "'");
    }
    if (name == "q" && digits == "0") return Value(Scalar::q0());
    if (digits.size() > 6) fail(end, {"index below 10^6"}, "index too long");
    const int k = std::stoi(digits);
    if (name.size() == 1) {
      switch (name[0]) {
        case 'y':
        case 'x':
        case 'R':
        case 'Q':
          if (!desc_) break;
          if (name[0] == 'y') return Value(gen_y(*desc_, k));
          if (name[0] == 'x') return Value(gen_x(*desc_, k));
          if (name[0] == 'R') return Value(gen_r(*desc_, k));
          return Value(q_elem(*desc_, k));
        case 'K':
        case 'E':
        case 'F':
          if (!hopf_) break;
          if (k < 1) throw IndexOutOfRange("generator index " + digits + " below 1");
          if (name[0] == 'K') return Value(HopfElement::K(k));
          if (name[0] == 'E') return Value(HopfElement::E(k));
          return Value(HopfElement::F(k));
        default:
          break;
      }
    }
    fail(at, primary_expected(), "unknown identifier '" + name + digits + "'");
  }

  // ---- value arithmetic ----

  AlgebraElement as_algebra(const Value& v) const {
    if (const auto* s = std::get_if<Scalar>(&v)) return AlgebraElement::scalar(*desc_, *s);
    return std::get<AlgebraElement>(v);
  }

  static HopfElement as_hopf(const Value& v) {
    if (const auto* s = std::get_if<Scalar>(&v)) return HopfElement::scalar(*s);
    return std::get<HopfElement>(v);
  }

  void check_mix(const Value& a, const Value& b, std::size_t at) const {
    if ((std::holds_alternative<AlgebraElement>(a) && std::holds_alternative<HopfElement>(b)) ||
        (std::holds_alternative<HopfElement>(a) && std::holds_alternative<AlgebraElement>(b)))
      fail(at, {"term of the same kind"}, "algebra and Hopf terms mixed");
  }

  Value add(const Value& a, const Value& b, std::size_t at, bool minus) const {
    check_mix(a, b, at);
    if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
      const Scalar& x = std::get<Scalar>(a);
      const Scalar& y = std::get<Scalar>(b);
      return Value(minus ? x - y : x + y);
    }
    if (std::holds_alternative<HopfElement>(a) || std::holds_alternative<HopfElement>(b))
      return Value(minus ? as_hopf(a) - as_hopf(b) : as_hopf(a) + as_hopf(b));
    return Value(minus ? as_algebra(a) - as_algebra(b) : as_algebra(a) + as_algebra(b));
  }

  Value mul(const Value& a, const Value& b, std::size_t at) const {
    check_mix(a, b, at);
    if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
      return Value(std::get<Scalar>(a) * std::get<Scalar>(b));
    if (std::holds_alternative<HopfElement>(a) || std::holds_alternative<HopfElement>(b))
      return Value(as_hopf(a) * as_hopf(b));
    return Value(as_algebra(a) * as_algebra(b));
  }

  Value power_of(const Value& v, int k, std::size_t at) const {
    if (const auto* s = std::get_if<Scalar>(&v)) {
      if (k < 0 && s->is_zero()) fail(at, {"nonzero base"}, "negative power of zero");
      return Value(s->pow(k));
    }
    if (const auto* a = std::get_if<AlgebraElement>(&v)) {
      try {
        return Value(power(*a, k));
      } catch (const std::domain_error&) {
        fail(at, {"nonnegative exponent"}, "negative power of a non-R element");
      }
    }
    const auto& h = std::get<HopfElement>(v);
    HopfElement base = h;
    if (k < 0) {
      const auto& t = h.terms();
      if (t.size() != 1 || t.begin()->first.size() != 1 || !t.begin()->second.is_one() ||
          (t.begin()->first[0].kind != HopfKind::K && t.begin()->first[0].kind != HopfKind::Kinv))
        fail(at, {"nonnegative exponent"}, "negative power of a non-K element");
      HopfGenerator g = t.begin()->first[0];
      g.kind = g.kind == HopfKind::K ? HopfKind::Kinv : HopfKind::K;
      base = HopfElement::generator(g);
      k = -k;
    }
    HopfElement out = HopfElement::one();
    for (int j = 0; j < k; ++j) out = out * base;
    return Value(out);
  }

  static Value star_of(const Value& v) {
    if (const auto* s = std::get_if<Scalar>(&v)) return Value(s->star());
    if (const auto* a = std::get_if<AlgebraElement>(&v)) return Value(star(*a));
    return Value(star(std::get<HopfElement>(v)));
  }

  Value counit_of(const Value& v, std::size_t at) const {
    if (std::holds_alternative<AlgebraElement>(v)) fail(at, {"Hopf expression"}, "eps of an algebra element");
    if (const auto* s = std::get_if<Scalar>(&v)) return Value(*s);
    return Value(counit(std::get<HopfElement>(v)));
  }

  Value antipode_of(const Value& v, std::size_t at) const {
    if (std::holds_alternative<AlgebraElement>(v)) fail(at, {"Hopf expression"}, "S of an algebra element");
    if (!hopf_) fail(at, {"eps("}, "S(...) is not a scalar");
    return Value(antipode(as_hopf(v)));
  }

  std::string_view text_;
  std::optional<AlgebraDescriptor> desc_;
  bool hopf_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Value v = Parser(text, std::nullopt, true).parse();
  if (const auto* s = std::get_if<Scalar>(&v)) return *s;
  throw SyntaxError(0, {"scalar expression"}, "expression is not a scalar");
}

AlgebraElement parse_algebra(std::string_view text, AlgebraDescriptor d) {
  Value v = Parser(text, d, false).parse();
  if (const auto* s = std::get_if<Scalar>(&v)) return AlgebraElement::scalar(d, *s);
  return std::get<AlgebraElement>(v);
}

HopfElement parse_hopf(std::string_view text) {
  Value v = Parser(text, std::nullopt, true).parse();
  if (const auto* s = std::get_if<Scalar>(&v)) return HopfElement::scalar(*s);
  return std::get<HopfElement>(v);
}

ParsedExpression parse_expression(std::string_view text, AlgebraDescriptor d) {
  Value v = Parser(text, d, true).parse();
  if (const auto* s = std::get_if<Scalar>(&v)) return AlgebraElement::scalar(d, *s);
  if (const auto* h = std::get_if<HopfElement>(&v)) return *h;
  return std::get<AlgebraElement>(v);
}

}  // namespace qweyl
