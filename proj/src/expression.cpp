#include "multibasis/expression.hpp"

#include <cctype>
#include <climits>

namespace multibasis {

namespace {

std::string where(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string describe(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  return out;
}

struct Token {
  enum class Kind { Number, Name, HatName, Symbol, End } kind;
  std::string text;
  int line, column;
};

std::string show(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Number: return "number " + t.text;
    case Token::Kind::Name:
    case Token::Kind::HatName: return "name '" + t.text + "'";
    case Token::Kind::Symbol: return "'" + t.text + "'";
  }
  return t.text;
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    int l = line, col = column;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, s.substr(i, j - i), l, col});
    } else if (name_start(c)) {
      while (j < s.size() && name_char(s[j])) ++j;
      out.push_back({Token::Kind::Name, s.substr(i, j - i), l, col});
    } else if (c == '^' && i + 1 < s.size() && name_start(s[i + 1])) {
      ++j;
      while (j < s.size() && name_char(s[j])) ++j;
      out.push_back({Token::Kind::HatName, s.substr(i, j - i), l, col});
    } else if (std::string("+-*/^()[],").find(c) != std::string::npos) {
      j = i + 1;
      out.push_back({Token::Kind::Symbol, std::string(1, c), l, col});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at " + where(l, col), l, col,
                       {"number", "name", "basis element", "operator"});
    }
    advance(j - i);
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const char* sym) const { return peek().kind == Token::Kind::Symbol && peek().text == sym; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what = "") const {
    const Token& t = peek();
    std::string msg = (what.empty() ? "unexpected " + show(t) : what) + " at " + where(t.line, t.column) +
                      "; expected " + describe(expected);
    throw ParseError(msg, t.line, t.column, std::move(expected));
  }

  std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (is("+") || is("-")) {
      Token op = toks_[pos_++];
      auto e = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op);
      e->lhs = left;
      e->rhs = term();
      left = e;
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (is("*") || is("/")) {
      Token op = toks_[pos_++];
      auto e = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op);
      e->lhs = left;
      e->rhs = factor();
      left = e;
    }
    return left;
  }

  ExprPtr factor() {
    if (is("-")) {
      auto e = node(Expr::Kind::Neg, toks_[pos_++]);
      e->lhs = factor();
      return e;
    }
    ExprPtr base = atom();
    if (!is("^")) return base;
    Token op = toks_[pos_++];
    if (peek().kind != Token::Kind::Number) fail({"natural number"});
    int k = small_number(kMaxExponent, "exponent");
    auto e = node(Expr::Kind::Pow, op);
    e->lhs = base;
    e->exponent = k;
    return e;
  }

  int small_number(long limit, const char* what) {
    const Token& t = peek();
    if (t.text.size() > 10 || std::stol(t.text) > limit)
      fail({std::string(what) + " at most " + std::to_string(limit)}, std::string(what) + " " + t.text + " is too large");
    ++pos_;
    return static_cast<int>(std::stol(t.text));
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (is("(")) {
      ++pos_;
      ExprPtr inner = expr();
      if (!is(")")) fail({"')'", "'+'", "'-'", "'*'", "'/'"});
      ++pos_;
      return inner;
    }
    if (t.kind == Token::Kind::Number) {
      auto e = node(Expr::Kind::Number, t);
      e->number = Rational::parse(t.text);
      ++pos_;
      return e;
    }
    if (t.kind == Token::Kind::Name || t.kind == Token::Kind::HatName) {
      Token name = toks_[pos_++];
      if (!is("[")) {
        if (name.kind == Token::Kind::HatName) fail({"'['"});
        auto e = node(Expr::Kind::Param, name);
        e->name = name.text;
        return e;
      }
      ++pos_;
      auto e = node(Expr::Kind::Element, name);
      e->name = name.text;
      for (;;) {
        bool neg = false;
        if (is("-")) {
          neg = true;
          ++pos_;
        }
        if (peek().kind != Token::Kind::Number) fail(neg ? std::vector<std::string>{"number"} : std::vector<std::string>{"number", "'-'"});
        int k = small_number(INT_MAX / 4, "vector entry");
        e->vector.push_back(neg ? -k : k);
        if (is(",")) {
          ++pos_;
          continue;
        }
        if (is("]")) {
          ++pos_;
          break;
        }
        fail({"','", "']'"});
      }
      return e;
    }
    fail({"number", "name", "basis element", "'('", "'-'"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrapped(const Expr& e, bool wrap) {
  std::string s = print_expression(e);
  return wrap ? "(" + s + ")" : s;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column, std::vector<std::string> expected)
    : std::runtime_error(message), line_(line), column_(column), expected_(std::move(expected)) {}

ExprPtr parse_expression(const std::string& text) { return Parser(text).run(); }

std::string print_expression(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number.to_string();
    case Expr::Kind::Param: return e.name;
    case Expr::Kind::Element: {
      std::string out = e.name + "[";
      for (std::size_t i = 0; i < e.vector.size(); ++i) out += (i ? "," : "") + std::to_string(e.vector[i]);
      return out + "]";
    }
    case Expr::Kind::Neg: return "-" + wrapped(*e.lhs, precedence(*e.lhs) < 3);
    case Expr::Kind::Pow: return wrapped(*e.lhs, precedence(*e.lhs) < 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      int p = precedence(e);
      const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : e.kind == Expr::Kind::Mul ? "*" : "/";
      return wrapped(*e.lhs, precedence(*e.lhs) < p) + op + wrapped(*e.rhs, precedence(*e.rhs) <= p);
    }
  }
  return "";
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Param: return a.name == b.name;
    case Expr::Kind::Element: return a.name == b.name && a.vector == b.vector;
    case Expr::Kind::Neg: return same_tree(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

std::size_t max_vector_length(const Expr& e) {
  std::size_t n = e.kind == Expr::Kind::Element ? e.vector.size() : 0;
  if (e.lhs) n = std::max(n, max_vector_length(*e.lhs));
  if (e.rhs) n = std::max(n, max_vector_length(*e.rhs));
  return n;
}

}  // namespace multibasis
