#include "gca/cli/expression.hpp"

#include <cctype>

#include "gca/errors.hpp"

namespace gca::cli {

namespace {

enum class Tok {
  Letter,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Bang,
  Plus,
  Minus,
  Times,
  Caret,
  At,
  Hash,
  FuncD,  // "d("
  FuncO,  // "o("
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  char letter = 0;
  Scalar value;
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& msg) {
  throw UsageError("syntax error at position " + std::to_string(pos + 1) + ": " + msg);
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [&](std::size_t k) {
    return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]));
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if ((c == 'd' || c == 'o') && i + 1 < s.size() && s[i + 1] == '(') {
        out.push_back({c == 'd' ? Tok::FuncD : Tok::FuncO, pos, 0, Scalar()});
        i += 2;
      } else {
        out.push_back({Tok::Letter, pos, c, Scalar()});
        ++i;
      }
      continue;
    }
    if (is_digit(i)) {
      std::size_t j = i;
      while (is_digit(j)) ++j;
      if (j < s.size() && s[j] == '/') {
        if (!is_digit(j + 1)) syntax_error(j, "expected a denominator after '/'");
        ++j;
        while (is_digit(j)) ++j;
      }
      auto q = Scalar::parse(s.substr(i, j - i));
      if (!q) syntax_error(pos, "malformed number");
      out.push_back({Tok::Number, pos, 0, *q});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '!': kind = Tok::Bang; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Times; break;
      case '^': kind = Tok::Caret; break;
      case '@': kind = Tok::At; break;
      case '#': kind = Tok::Hash; break;
      default: syntax_error(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, pos, 0, Scalar()});
    ++i;
  }
  out.push_back({Tok::End, s.size(), 0, Scalar()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ExprPtr parse() {
    ExprPtr e = tensor();
    if (peek().kind != Tok::End) syntax_error(peek().pos, "unexpected token");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token next() { return tokens_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) syntax_error(peek().pos, std::string("expected ") + what);
  }

  ExprPtr tensor() {
    std::vector<ExprPtr> items = {sum()};
    while (accept(Tok::Hash)) items.push_back(sum());
    return items.size() == 1 ? items.front() : make_node(Op::Tensor, std::move(items));
  }

  ExprPtr sum() {
    ExprPtr left = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Op op = next().kind == Tok::Plus ? Op::Add : Op::Subtract;
      left = make_node(op, {left, product()});
    }
    return left;
  }

  ExprPtr product() {
    ExprPtr left = unary();
    while (accept(Tok::Times)) left = make_node(Op::Multiply, {left, unary()});
    return left;
  }

  ExprPtr unary() {
    if (accept(Tok::Minus)) return make_node(Op::Negate, {unary()});
    return geometric();
  }

  ExprPtr geometric() {
    ExprPtr left = meet();
    while (accept(Tok::At)) left = make_node(Op::Geometric, {left, meet()});
    return left;
  }

  ExprPtr meet() {
    ExprPtr left = join();
    while (accept(Tok::Caret)) left = make_node(Op::Meet, {left, join()});
    return left;
  }

  static bool starts_primary(Tok k) {
    switch (k) {
      case Tok::Letter:
      case Tok::Number:
      case Tok::LParen:
      case Tok::LBracket:
      case Tok::Bang:
      case Tok::FuncD:
      case Tok::FuncO:
        return true;
      default:
        return false;
    }
  }

  ExprPtr join() {
    std::vector<ExprPtr> items = {primary()};
    while (starts_primary(peek().kind)) items.push_back(primary());
    return items.size() == 1 ? items.front() : make_node(Op::Join, std::move(items));
  }

  ExprPtr primary() {
    const Token t = next();
    switch (t.kind) {
      case Tok::Letter:
        return make_letter(t.letter);
      case Tok::Number:
        return make_number(t.value);
      case Tok::LParen: {
        ExprPtr e = tensor();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        ExprPtr e = tensor();
        expect(Tok::RBracket, "']'");
        return make_node(Op::Bracket, {e});
      }
      case Tok::Bang:
        return make_node(Op::Star, {primary()});
      case Tok::FuncD: {
        ExprPtr e = tensor();
        expect(Tok::RParen, "')'");
        return make_node(Op::Boundary, {e});
      }
      case Tok::FuncO: {
        ExprPtr a = tensor();
        expect(Tok::Comma, "','");
        ExprPtr b = tensor();
        expect(Tok::RParen, "')'");
        return make_node(Op::Regressive, {a, b});
      }
      case Tok::End:
        syntax_error(t.pos, "unexpected end of expression");
      default:
        syntax_error(t.pos, "expected an operand");
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

int precedence(const Expr& e) {
  switch (e.op) {
    case Op::Join: return 6;
    case Op::Meet: return 5;
    case Op::Geometric: return 4;
    case Op::Negate: return 3;
    case Op::Multiply: return 2;
    case Op::Add:
    case Op::Subtract: return 1;
    case Op::Tensor: return 0;
    default: return 7;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print_expression(e);
  return parens ? "(" + s + ")" : s;
}

const char* infix(Op op) {
  switch (op) {
    case Op::Meet: return " ^ ";
    case Op::Geometric: return " @ ";
    case Op::Multiply: return " * ";
    case Op::Add: return " + ";
    case Op::Subtract: return " - ";
    default: return "";
  }
}

}  // namespace

ExprPtr make_letter(char c) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Letter;
  e->letter = c;
  return e;
}

ExprPtr make_number(const Scalar& q) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Number;
  e->number = q;
  return e;
}

ExprPtr make_node(Op op, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->args = std::move(args);
  return e;
}

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
  switch (e.op) {
    case Op::Letter:
      return std::string(1, e.letter);
    case Op::Number:
      return e.number.str();
    case Op::Join: {
      std::string out;
      const Expr* prev = nullptr;
      for (const auto& a : e.args) {
        const bool glue = prev && prev->op == Op::Letter && a->op == Op::Letter;
        if (prev && !glue) out += " ";
        out += wrap(*a, precedence(*a) <= 6);
        prev = a.get();
      }
      return out;
    }
    case Op::Meet:
    case Op::Geometric:
    case Op::Multiply:
    case Op::Add:
    case Op::Subtract: {
      const int p = precedence(e);
      return wrap(*e.args[0], precedence(*e.args[0]) < p) + infix(e.op) +
             wrap(*e.args[1], precedence(*e.args[1]) <= p);
    }
    case Op::Negate:
      return "-" + wrap(*e.args[0], precedence(*e.args[0]) < 3);
    case Op::Tensor: {
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += " # ";
        out += wrap(*e.args[i], precedence(*e.args[i]) <= 0);
      }
      return out;
    }
    case Op::Boundary:
      return "d(" + print_expression(*e.args[0]) + ")";
    case Op::Bracket:
      return "[" + print_expression(*e.args[0]) + "]";
    case Op::Star:
      return "!" + wrap(*e.args[0], precedence(*e.args[0]) < 7);
    case Op::Regressive:
      return "o(" + print_expression(*e.args[0]) + ", " + print_expression(*e.args[1]) + ")";
  }
  return "";
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.letter != b.letter || a.number != b.number) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_structure(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

std::string word_of(const Expr& e) {
  if (e.op == Op::Letter) return std::string(1, e.letter);
  if (e.op != Op::Join) return "";
  std::string out;
  for (const auto& a : e.args) {
    if (a->op != Op::Letter) return "";
    out += a->letter;
  }
  return out;
}

}  // namespace gca::cli
