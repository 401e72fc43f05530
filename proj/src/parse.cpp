#include "diffops/parse.hpp"

#include <cctype>
#include <string>

#include "diffops/errors.hpp"

namespace diffops {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_alpha() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t exponent() {
    const std::size_t start = pos();
    const std::string d = digits();
    if (d.size() > 6) throw ParseError("exponent too large", start);
    const auto e = static_cast<std::uint32_t>(std::stoul(d));
    if (peek() == '/') fail("division token inside exponent");
    return e;
  }

  // Anything but an operator or ')' after a complete factor is juxtaposition.
  void check_no_juxtaposition() {
    const char c = peek();
    if (c == '\0' || c == '+' || c == '-' || c == '*' || c == ')') return;
    if (c == '/') fail("unexpected '/' (only rational literals may contain '/')");
    fail(std::string("unexpected '") + c + "' (implicit multiplication is not allowed)");
  }

  [[noreturn]] void fail(const std::string& msg) {
    skip_ws();
    throw ParseError(msg, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Recursive descent shared by polynomials and operators; Value supplies the ring.
template <typename Builder>
class Parser {
 public:
  using Value = typename Builder::Value;

  Parser(std::string_view text, const Builder& b) : cur_(text), b_(b) {}

  Value parse() {
    if (cur_.at_end()) cur_.fail("empty expression");
    Value v = expr();
    if (!cur_.at_end()) cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
    return v;
  }

 private:
  Value expr() {
    Value acc = term();
    while (true) {
      if (cur_.accept('+')) {
        acc = acc + term();
      } else if (cur_.accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    while (cur_.accept('*')) acc = acc * factor();
    return acc;
  }

  Value factor() {
    if (cur_.accept('-')) return -factor();
    Value v = atom();
    cur_.check_no_juxtaposition();
    return v;
  }

  Value atom() {
    if (cur_.accept('(')) {
      Value v = expr();
      cur_.expect(')');
      return v;
    }
    if (cur_.at_digit()) {
      const std::size_t start = cur_.pos();
      mpz_class num(cur_.digits());
      mpz_class den = 1;
      if (cur_.accept('/')) {
        den = mpz_class(cur_.digits());
        if (den == 0) throw ParseError("zero denominator", start);
      }
      return b_.number(num, den, start);
    }
    if (cur_.at_alpha()) {
      const std::size_t start = cur_.pos();
      const std::string name = cur_.identifier();
      return b_.symbol(name, cur_, start);
    }
    if (cur_.at_end()) cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
  }

  Cursor cur_;
  const Builder& b_;
};

struct PolyBuilder {
  using Value = MultiPoly;
  RingPtr ring;

  Value number(const mpz_class& num, const mpz_class& den, std::size_t at) const {
    try {
      return MultiPoly::constant(ring, Scalar::from_fraction(num, den, ring->characteristic));
    } catch (const InputError& e) {
      throw ParseError(e.what(), at);
    }
  }

  Value symbol(const std::string& name, Cursor& cur, std::size_t at) const {
    const auto& vars = ring->vars;
    std::size_t idx = vars.size();
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (vars[k] == name) idx = k;
    }
    if (idx == vars.size()) throw ParseError("unknown variable '" + name + "'", at);
    Monomial m(vars.size());
    m.exps[idx] = cur.accept('^') ? cur.exponent() : 1;
    return MultiPoly::term(ring, m, Scalar::from_int(1, ring->characteristic));
  }
};

struct OpBuilder {
  using Value = GradedOp;

  Value number(const mpz_class& num, const mpz_class& den, std::size_t) const {
    return GradedOp::scalar(mpq_class(num, den));
  }

  Value symbol(const std::string& name, Cursor& cur, std::size_t at) const {
    if (name == "h") {
      const std::uint32_t e = cur.accept('^') ? cur.exponent() : 1;
      std::vector<mpq_class> c(e + 1, 0);
      c[e] = 1;
      return GradedOp::homogeneous(0, UniPoly(std::move(c)));
    }
    if (name == "x") {
      std::int64_t e = 1;
      if (cur.accept('^')) {
        const bool neg = cur.accept('-');
        e = cur.exponent();
        if (neg) e = -e;
      }
      return GradedOp::x_power(e);
    }
    throw ParseError("unknown operator symbol '" + name + "' (expected h or x)", at);
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) {
  PolyBuilder b{ring};
  return Parser<PolyBuilder>(text, b).parse();
}

std::vector<MultiPoly> parse_poly_list(std::string_view text, const RingPtr& ring) {
  std::vector<MultiPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\n\r") != std::string_view::npos) {
      try {
        out.push_back(parse_poly(piece, ring));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

GradedOp parse_op(std::string_view text) {
  OpBuilder b;
  return Parser<OpBuilder>(text, b).parse();
}

}  // namespace diffops
