#include "gcl/expr/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace gcl::expr {

namespace {

enum class TokKind {
  number,   // "3" or "3/4"
  blade,    // "e12" or "e{1,10}"
  frame,    // "E2"
  ident,    // keyword or call name
  plus,
  minus,
  graf,      // <>
  wedge,     // ^
  triangle,  // /\ (backslash escaped)
  contract,  // _|
  lparen,
  rparen,
  comma,
  end,
};

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int line = line_, col = col_;
      if (at_end()) {
        out.push_back({TokKind::end, "", line, col});
        return out;
      }
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({TokKind::number, lex_number(), line, col});
      } else if (c == 'e' && (isdigit_at(1) || char_at(1) == '{')) {
        out.push_back({TokKind::blade, lex_blade(), line, col});
      } else if (c == 'E' && isdigit_at(1)) {
        advance();
        out.push_back({TokKind::frame, lex_digits(), line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back({TokKind::ident, lex_ident(), line, col});
      } else {
        out.push_back(lex_operator(line, col));
      }
    }
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char char_at(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }
  bool isdigit_at(std::size_t off) const {
    return std::isdigit(static_cast<unsigned char>(char_at(off))) != 0;
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::string lex_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  std::string lex_number() {
    std::string out = lex_digits();
    if (!at_end() && peek() == '/' && isdigit_at(1)) {
      out += '/';
      advance();
      out += lex_digits();
    }
    return out;
  }

  std::string lex_blade() {
    std::string out = "e";
    advance();
    if (!at_end() && peek() == '{') {
      do {
        out += peek();
        advance();
      } while (!at_end() && out.back() != '}');
    } else {
      out += lex_digits();
    }
    return out;
  }

  std::string lex_ident() {
    std::string out;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  Token lex_operator(int line, int col) {
    char c = peek();
    advance();
    switch (c) {
      case '+': return {TokKind::plus, "+", line, col};
      case '-': return {TokKind::minus, "-", line, col};
      case '^': return {TokKind::wedge, "^", line, col};
      case '(': return {TokKind::lparen, "(", line, col};
      case ')': return {TokKind::rparen, ")", line, col};
      case ',': return {TokKind::comma, ",", line, col};
      case '<':
        if (!at_end() && peek() == '>') {
          advance();
          return {TokKind::graf, "<>", line, col};
        }
        break;
      case '/':
        if (!at_end() && peek() == '\\') {
          advance();
          return {TokKind::triangle, "/\\", line, col};
        }
        break;
      case '_':
        if (!at_end() && peek() == '|') {
          advance();
          return {TokKind::contract, "_|", line, col};
        }
        break;
      default: break;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    expect(TokKind::end, "end of input");
    return e;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at(TokKind k) const { return cur().kind == k; }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, cur().line, cur().column);
  }

  Token expect(TokKind k, const std::string& what) {
    if (!at(k)) fail("expected " + what + ", got '" + (at(TokKind::end) ? "<end>" : cur().text) + "'");
    return next();
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_prod();
    while (at(TokKind::plus) || at(TokKind::minus)) {
      BinaryOp op = at(TokKind::plus) ? BinaryOp::add : BinaryOp::sub;
      next();
      lhs = make_binary(op, std::move(lhs), parse_prod());
    }
    return lhs;
  }

  static std::optional<BinaryOp> product_op(TokKind k) {
    switch (k) {
      case TokKind::graf: return BinaryOp::graf;
      case TokKind::wedge: return BinaryOp::wedge;
      case TokKind::triangle: return BinaryOp::triangle;
      case TokKind::contract: return BinaryOp::contract;
      default: return std::nullopt;
    }
  }

  ExprPtr parse_prod() {
    ExprPtr lhs = parse_unary();
    std::optional<TokKind> chain;
    while (auto op = product_op(cur().kind)) {
      // No precedence is defined among the products, so a chain must stick
      // to one operator; mixing requires parentheses.
      if (chain && *chain != cur().kind)
        fail("mixing '" + cur().text + "' with a different product needs parentheses");
      chain = cur().kind;
      if (*op == BinaryOp::contract && !std::holds_alternative<FrameVec>(lhs->node))
        fail("left operand of '_|' must be a frame vector E<k>");
      next();
      ExprPtr rhs = parse_unary();
      lhs = make_binary(*op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(TokKind::ident) && tokens_[pos_ + 1].kind == TokKind::lparen) return parse_call();
    return parse_atom();
  }

  ExprPtr parse_call() {
    Token name = next();
    expect(TokKind::lparen, "'('");

    auto unary = [&](UnaryOp op) {
      ExprPtr arg = parse_sum();
      expect(TokKind::rparen, "')'");
      return make_unary(op, std::move(arg));
    };
    auto binary = [&](BinaryOp op) {
      ExprPtr lhs = parse_sum();
      expect(TokKind::comma, "','");
      ExprPtr rhs = parse_sum();
      expect(TokKind::rparen, "')'");
      return make_binary(op, std::move(lhs), std::move(rhs));
    };
    auto indexed = [&](IndexedOp op) {
      Token order = expect(TokKind::number, "contraction order");
      if (order.text.find('/') != std::string::npos)
        throw parse_error("contraction order must be an integer", order.line, order.column);
      expect(TokKind::comma, "','");
      ExprPtr lhs = parse_sum();
      expect(TokKind::comma, "','");
      ExprPtr rhs = parse_sum();
      expect(TokKind::rparen, "')'");
      return make_indexed(op, std::stoi(order.text), std::move(lhs), std::move(rhs));
    };

    if (name.text == "hodge") return unary(UnaryOp::hodge);
    if (name.text == "rev") return unary(UnaryOp::reversion);
    if (name.text == "inv") return unary(UnaryOp::involution);
    if (name.text == "projp") return unary(UnaryOp::project_plus);
    if (name.text == "projm") return unary(UnaryOp::project_minus);
    if (name.text == "truncL") return unary(UnaryOp::trunc_lower);
    if (name.text == "truncU") return unary(UnaryOp::trunc_upper);
    if (name.text == "tgp") return binary(BinaryOp::truncated_plus);
    if (name.text == "tgm") return binary(BinaryOp::truncated_minus);
    if (name.text == "cw") return indexed(IndexedOp::contracted_wedge);
    if (name.text == "cg") return indexed(IndexedOp::contracted_graf);
    throw parse_error("unknown function '" + name.text + "'", name.line, name.column);
  }

  ExprPtr parse_atom() {
    switch (cur().kind) {
      case TokKind::number: {
        Token tok = next();
        return make_scalar(parse_rational(tok.text));
      }
      case TokKind::blade: {
        Token tok = next();
        try {
          return make_blade(parse_blade_text(tok.text));
        } catch (const usage_error& err) {
          throw parse_error(err.what(), tok.line, tok.column);
        }
      }
      case TokKind::frame: {
        Token tok = next();
        return make_frame(std::stoi(tok.text));
      }
      case TokKind::ident: {
        Token tok = next();
        if (tok.text == "one") return make_constant(ConstantKind::one);
        if (tok.text == "vol") return make_constant(ConstantKind::vol);
        if (tok.text == "pplus") return make_constant(ConstantKind::pplus);
        if (tok.text == "pminus") return make_constant(ConstantKind::pminus);
        throw parse_error("unknown name '" + tok.text + "'", tok.line, tok.column);
      }
      case TokKind::lparen: {
        next();
        ExprPtr inner = parse_sum();
        expect(TokKind::rparen, "')'");
        return inner;
      }
      default:
        fail("expected an atom, got '" + (at(TokKind::end) ? "<end>" : cur().text) + "'");
    }
  }

  // "e12" -> {1,2}; "e{1,10}" -> {1,10}. Ordering is validated by make_blade.
  static std::vector<int> parse_blade_text(const std::string& text) {
    std::vector<int> idx;
    if (text.size() >= 2 && text[1] == '{') {
      if (text.back() != '}') throw usage_error("unterminated blade literal");
      std::size_t pos = 2;
      while (pos < text.size() - 1) {
        std::size_t start = pos;
        while (pos < text.size() - 1 && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw usage_error("malformed blade literal '" + text + "'");
        idx.push_back(std::stoi(text.substr(start, pos - start)));
        if (pos < text.size() - 1) {
          if (text[pos] != ',') throw usage_error("malformed blade literal '" + text + "'");
          ++pos;
        }
      }
      if (idx.empty()) throw usage_error("malformed blade literal '" + text + "'");
    } else {
      for (std::size_t k = 1; k < text.size(); ++k) idx.push_back(text[k] - '0');
    }
    return idx;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

}  // namespace gcl::expr
