#include "dgcd/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "json.hpp"

namespace dgcd {

namespace {

std::string kind_label(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Lexical: return "lexical error";
    case ParseError::Kind::Syntax: return "syntax error";
    case ParseError::Kind::UnknownIdentifier: return "unknown identifier";
    case ParseError::Kind::BadExponent: return "bad exponent";
    case ParseError::Kind::ArityMismatch: return "arity mismatch";
  }
  return "error";
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind_label(kind) +
            ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(message)) {}

namespace {

constexpr unsigned kMaxExponent = 1U << 16;

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      char c = text_[pos_];
      std::size_t line = line_, col = col_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          digits += text_[pos_];
          advance();
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
          throw ParseError(ParseError::Kind::Lexical, line_, col_,
                           "decimal literals are not supported; write p/q");
        }
        out.push_back({Tok::Integer, digits, line, col});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string id;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          id += text_[pos_];
          advance();
        }
        out.push_back({Tok::Ident, id, line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          throw ParseError(ParseError::Kind::Lexical, line, col,
                           std::string("unexpected character '") + c + "'");
      }
      advance();
      out.push_back({kind, std::string(1, c), line, col});
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, RingPtr ring) : toks_(std::move(tokens)), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail(ParseError::Kind::Syntax, peek(), describe(peek()) + " where an operator was expected");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] static void fail(ParseError::Kind kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, at.line, at.column, msg);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Integer: return "number '" + t.text + "'";
      case Tok::Ident: return "identifier '" + t.text + "'";
      default: return "'" + t.text + "'";
    }
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Polynomial rhs = term();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == Tok::Star) {
      take();
      acc *= unary();
    }
    if (peek().kind == Tok::Slash) {
      fail(ParseError::Kind::Syntax, peek(), "division is only allowed inside a rational literal p/q");
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != Tok::Caret) return base;
    take();
    const Token& e = peek();
    if (e.kind == Tok::Minus) fail(ParseError::Kind::BadExponent, e, "negative exponent");
    if (e.kind != Tok::Integer) {
      fail(ParseError::Kind::BadExponent, e, "exponent must be a non-negative integer literal, got " + describe(e));
    }
    take();
    if (peek().kind == Tok::Slash) fail(ParseError::Kind::BadExponent, peek(), "non-integer exponent");
    if (peek().kind == Tok::Caret) fail(ParseError::Kind::Syntax, peek(), "chained '^' is ambiguous; use parentheses");
    BigInteger value(e.text);
    if (value > kMaxExponent) {
      fail(ParseError::Kind::BadExponent, e, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    return base.pow(static_cast<unsigned>(value.get_ui()));
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer: {
        take();
        BigInteger num(t.text);
        BigInteger den = 1;
        if (peek().kind == Tok::Slash) {
          take();
          const Token& d = peek();
          if (d.kind != Tok::Integer) fail(ParseError::Kind::Syntax, d, "expected denominator after '/', got " + describe(d));
          take();
          den = BigInteger(d.text);
          if (den == 0) fail(ParseError::Kind::Syntax, d, "zero denominator");
        }
        if (peek().kind == Tok::Ident || peek().kind == Tok::LParen) {
          fail(ParseError::Kind::Syntax, peek(), "implicit multiplication is not allowed; insert '*'");
        }
        return Polynomial::constant(ring_, make_rational(num, den));
      }
      case Tok::Ident: {
        take();
        auto idx = ring_->index_of(t.text);
        if (!idx) fail(ParseError::Kind::UnknownIdentifier, t, "'" + t.text + "' is not a declared variable");
        if (peek().kind == Tok::LParen || peek().kind == Tok::Ident || peek().kind == Tok::Integer) {
          fail(ParseError::Kind::Syntax, peek(), "implicit multiplication is not allowed; insert '*'");
        }
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::LParen: {
        take();
        Polynomial inner = expr();
        if (peek().kind != Tok::RParen) fail(ParseError::Kind::Syntax, peek(), "expected ')', got " + describe(peek()));
        take();
        if (peek().kind == Tok::LParen || peek().kind == Tok::Ident || peek().kind == Tok::Integer) {
          fail(ParseError::Kind::Syntax, peek(), "implicit multiplication is not allowed; insert '*'");
        }
        return inner;
      }
      default:
        fail(ParseError::Kind::Syntax, t, "expected a number, variable or '(', got " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!ring) throw Error("parse_polynomial: no ring");
  Parser parser(Lexer(text).run(), ring);
  return parser.parse();
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.ring()->variable_names();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool one = t.monomial.is_one();
    std::string body;
    if (c != 1 || one) body = c.get_str();
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += names[i];
      if (e > 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

PolySource parse_poly_source(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // byte offset only; report it as a column on line 1
    throw ParseError(ParseError::Kind::Lexical, 1, e.byte, std::string("invalid JSON: ") + e.what());
  }
  auto string_list = [&](const char* key) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
      throw ParseError(ParseError::Kind::Syntax, 1, 1, std::string("missing array field \"") + key + "\"");
    }
    std::vector<std::string> out;
    for (const auto& item : doc[key]) {
      if (!item.is_string()) {
        throw ParseError(ParseError::Kind::Syntax, 1, 1, std::string("field \"") + key + "\" must hold strings");
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  };
  return {string_list("variables"), string_list("polynomials")};
}

ParsedSystem parse_system(const PolySource& source, MonomialOrder order) {
  for (const auto& v : source.variables) {
    if (!is_valid_identifier(v)) {
      throw ParseError(ParseError::Kind::Lexical, 1, 1, "invalid variable name '" + v + "'");
    }
  }
  if (source.variables.empty()) throw ParseError(ParseError::Kind::ArityMismatch, 1, 1, "no variables declared");
  if (source.expressions.empty()) throw ParseError(ParseError::Kind::ArityMismatch, 1, 1, "no polynomials given");
  if (source.expressions.size() > source.variables.size()) {
    throw ParseError(ParseError::Kind::ArityMismatch, 1, 1,
                     std::to_string(source.expressions.size()) + " polynomials in " +
                         std::to_string(source.variables.size()) + " variables (need m <= n)");
  }
  ParsedSystem out;
  try {
    out.ring = make_ring(source.variables, order);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ParseError::Kind::Lexical, 1, 1, e.what());
  }
  for (const auto& text : source.expressions) out.polynomials.push_back(parse_polynomial(text, out.ring));
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t\n");
    std::size_t e = cur.find_last_not_of(" \t\n");
    out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace dgcd
