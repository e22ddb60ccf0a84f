#include "fpure/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "fpure/errors.hpp"

namespace fpure {
namespace {

constexpr int kMaxNesting = 256;

enum class Tok { integer, ident, plus, minus, star, caret, lparen, rparen, comma, semicolon, equals, slash, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
  std::uint64_t value = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t base) : text_(text), base_(base) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t pos) const { throw ParseError(msg, pos); }
  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what, cur_.pos);
    return take();
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t start = i_;
    std::size_t pos = base_ + start;
    if (i_ >= text_.size()) {
      cur_ = {Tok::end, pos, {}};
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        unsigned d = static_cast<unsigned>(text_[i_] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
          fail("integer literal exceeds 64 bits", pos);
        }
        v = v * 10 + d;
        ++i_;
      }
      cur_ = {Tok::integer, pos, text_.substr(start, i_ - start), v};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
        ++i_;
      }
      cur_ = {Tok::ident, pos, text_.substr(start, i_ - start)};
      return;
    }
    ++i_;
    switch (c) {
      case '+': cur_ = {Tok::plus, pos, {}}; return;
      case '-': cur_ = {Tok::minus, pos, {}}; return;
      case '*': cur_ = {Tok::star, pos, {}}; return;
      case '^': cur_ = {Tok::caret, pos, {}}; return;
      case '(': cur_ = {Tok::lparen, pos, {}}; return;
      case ')': cur_ = {Tok::rparen, pos, {}}; return;
      case ',': cur_ = {Tok::comma, pos, {}}; return;
      case ';': cur_ = {Tok::semicolon, pos, {}}; return;
      case '=': cur_ = {Tok::equals, pos, {}}; return;
      case '/': cur_ = {Tok::slash, pos, {}}; return;
      default: break;
    }
    if (c == '.') fail("decimal numbers are not accepted; write a fraction a/b", pos);
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t i_ = 0;
  Token cur_{Tok::end, 0, {}};
};

bool valid_variable_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

class PolyParser {
 public:
  PolyParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

  SparsePolynomial expr() {
    if (++depth_ > kMaxNesting) lex_.fail("expression nested too deeply", lex_.peek().pos);
    SparsePolynomial acc(ring_);
    bool negate = false;
    if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      negate = lex_.take().kind == Tok::minus;
    }
    acc = product();
    if (negate) acc = -acc;
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool minus = lex_.take().kind == Tok::minus;
      SparsePolynomial rhs = product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    --depth_;
    return acc;
  }

 private:
  SparsePolynomial product() {
    SparsePolynomial acc = power();
    while (lex_.peek().kind == Tok::star) {
      Token star = lex_.take();
      SparsePolynomial rhs = power();
      acc = guarded(star.pos, [&] { return poly_mul(acc, rhs); });
    }
    return acc;
  }

  SparsePolynomial power() {
    SparsePolynomial base = atom();
    if (lex_.peek().kind != Tok::caret) return base;
    Token caret = lex_.take();
    if (lex_.peek().kind == Tok::minus) lex_.fail("negative exponent", lex_.peek().pos);
    if (lex_.peek().kind != Tok::integer) lex_.fail("expected non-negative integer exponent", lex_.peek().pos);
    Token e = lex_.take();
    if (lex_.peek().kind == Tok::caret) lex_.fail("chained exponents need parentheses", lex_.peek().pos);
    return guarded(caret.pos, [&] { return poly_pow(base, e.value); });
  }

  SparsePolynomial atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::integer: {
        Token n = lex_.take();
        return SparsePolynomial::constant(ring_, static_cast<std::int64_t>(n.value % ring_->characteristic()));
      }
      case Tok::ident: {
        Token id = lex_.take();
        const auto& vars = ring_->variables();
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (vars[i] == id.text) return SparsePolynomial::variable(ring_, i);
        }
        lex_.fail("unknown variable '" + std::string(id.text) + "'", id.pos);
      }
      case Tok::lparen: {
        lex_.take();
        SparsePolynomial inner = expr();
        lex_.expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::end:
        lex_.fail("unexpected end of input", t.pos);
      default:
        lex_.fail("expected a number, variable or '('", t.pos);
    }
  }

  template <class F>
  SparsePolynomial guarded(std::size_t pos, F&& f) {
    try {
      return f();
    } catch (const ResourceCapError& e) {
      throw ParseError(std::string("cannot evaluate: ") + e.what(), pos);
    }
  }

  Lexer& lex_;
  const RingPtr& ring_;
  int depth_ = 0;
};

std::vector<SparsePolynomial> parse_list_at(std::string_view text, std::size_t base, const RingPtr& ring) {
  Lexer lex(text, base);
  std::vector<SparsePolynomial> out;
  if (lex.peek().kind == Tok::end) return out;
  PolyParser parser(lex, ring);
  for (;;) {
    SparsePolynomial f = parser.expr();
    if (!f.is_zero()) out.push_back(std::move(f));
    if (lex.peek().kind == Tok::end) break;
    lex.expect(Tok::comma, "',' or end of input");
  }
  return out;
}

}  // namespace

RingSpec parse_ring(std::string_view text) {
  Lexer lex(text, 0);
  Token kp = lex.expect(Tok::ident, "'p'");
  if (kp.text != "p") lex.fail("expected 'p'", kp.pos);
  lex.expect(Tok::equals, "'='");
  Token pt = lex.expect(Tok::integer, "prime characteristic");
  if (pt.value >= (std::uint64_t{1} << 31)) lex.fail("characteristic must be below 2^31", pt.pos);
  if (!is_prime(pt.value)) lex.fail(std::to_string(pt.value) + " is not prime", pt.pos);
  lex.expect(Tok::semicolon, "';'");
  Token kv = lex.expect(Tok::ident, "'vars'");
  if (kv.text != "vars") lex.fail("expected 'vars'", kv.pos);
  lex.expect(Tok::equals, "'='");
  std::vector<std::string> vars;
  std::set<std::string, std::less<>> seen;
  for (;;) {
    Token v = lex.expect(Tok::ident, "variable name");
    if (!valid_variable_name(v.text)) lex.fail("invalid variable name '" + std::string(v.text) + "'", v.pos);
    if (!seen.insert(std::string(v.text)).second) {
      lex.fail("duplicate variable '" + std::string(v.text) + "'", v.pos);
    }
    vars.emplace_back(v.text);
    if (lex.peek().kind == Tok::end) break;
    lex.expect(Tok::comma, "',' or end of input");
  }
  return make_ring(static_cast<std::uint32_t>(pt.value), std::move(vars));
}

SparsePolynomial parse_poly(std::string_view text, const RingPtr& ring) {
  Lexer lex(text, 0);
  PolyParser parser(lex, ring);
  SparsePolynomial f = parser.expr();
  if (lex.peek().kind != Tok::end) lex.fail("unexpected trailing input", lex.peek().pos);
  return f;
}

std::vector<SparsePolynomial> parse_poly_list(std::string_view text, const RingPtr& ring) {
  return parse_list_at(text, 0, ring);
}

std::vector<SparsePolynomial> parse_poly_file(std::string_view text, const RingPtr& ring) {
  std::vector<SparsePolynomial> out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Lexer lex(line, line_start);
    if (lex.peek().kind != Tok::end) {
      PolyParser parser(lex, ring);
      SparsePolynomial f = parser.expr();
      if (lex.peek().kind != Tok::end) lex.fail("one polynomial per line", lex.peek().pos);
      if (!f.is_zero()) out.push_back(std::move(f));
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  return out;
}

ExactRational parse_rational(std::string_view text, bool require_positive) {
  Lexer lex(text, 0);
  bool negative = false;
  if (lex.peek().kind == Tok::minus) {
    negative = true;
    lex.take();
  }
  Token n = lex.expect(Tok::integer, "integer");
  BigInt num(n.value);
  BigInt den(1);
  if (lex.peek().kind == Tok::slash) {
    lex.take();
    Token d = lex.expect(Tok::integer, "denominator");
    if (d.value == 0) lex.fail("zero denominator", d.pos);
    den = BigInt(d.value);
  }
  if (lex.peek().kind != Tok::end) lex.fail("unexpected trailing input", lex.peek().pos);
  if (negative) num = -num;
  ExactRational r(num, den);
  if (require_positive && r.sign() <= 0) lex.fail("exponent must be > 0", 0);
  if (!require_positive && r.sign() < 0) lex.fail("value must be >= 0", 0);
  return r;
}

}  // namespace fpure
