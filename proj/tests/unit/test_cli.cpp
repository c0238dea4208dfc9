#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "gca/cli/commands.hpp"
#include "gca/cli/config_file.hpp"
#include "gca/cli/expression.hpp"
#include "gca/errors.hpp"

using namespace gca;
using namespace gca::cli;

namespace {

const char* kRank4 =
    "rank 4\n"
    "a = -2 3 0 1\n"
    "b = 2 2 1 1\n"
    "c = 8 5 0 1\n"
    "d = 9 7 -1 1\n"
    "e = 6 1 2 1\n"
    "f = 11 2 2 1\n";

const char* kConcurrent =
    "rank 3\n"
    "a = 1 0 0\nb = 3 2 2\nc = 0 1 0\nd = 2 3 2\ne = 0 0 1\nf = 2 2 3\n";

std::string error_line(std::string_view text) {
  try {
    parse_config(text);
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

bool is_letters(const Expr& e, std::string_view w) { return word_of(e) == w; }

// Random trees in the shapes the parser produces: joins and tensors have at
// least two children and numbers are non-negative.
class TreeGen {
 public:
  explicit TreeGen(unsigned seed) : rng_(seed) {}

  ExprPtr tree(int depth) {
    if (depth == 0 || pick(4) == 0) return leaf();
    switch (pick(12)) {
      case 0: return make_node(Op::Join, children(depth, 2 + pick(3)));
      case 1: return make_node(Op::Meet, children(depth, 2));
      case 2: return make_node(Op::Geometric, children(depth, 2));
      case 3: return make_node(Op::Negate, children(depth, 1));
      case 4: return make_node(Op::Multiply, children(depth, 2));
      case 5: return make_node(Op::Add, children(depth, 2));
      case 6: return make_node(Op::Subtract, children(depth, 2));
      case 7: return make_node(Op::Tensor, children(depth, 2 + pick(2)));
      case 8: return make_node(Op::Boundary, children(depth, 1));
      case 9: return make_node(Op::Bracket, children(depth, 1));
      case 10: return make_node(Op::Star, children(depth, 1));
      default: return make_node(Op::Regressive, children(depth, 2));
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  ExprPtr leaf() {
    if (pick(3) == 0) {
      const long p = pick(30);
      const long q = 1 + pick(5);
      return make_number(Scalar(p) / Scalar(q));
    }
    // 'd' and 'o' are included on purpose; they must not turn into calls.
    static const std::string letters = "abcdefgho";
    return make_letter(letters[static_cast<std::size_t>(pick(static_cast<int>(letters.size())))]);
  }

  std::vector<ExprPtr> children(int depth, int n) {
    std::vector<ExprPtr> out;
    for (int i = 0; i < n; ++i) out.push_back(tree(depth - 1));
    return out;
  }

  std::mt19937 rng_;
};

}  // namespace

TEST_CASE("config files bind rows in declaration order") {
  Configuration c = parse_config("rank 4\na = -2 3 0 1\nb = 2 2 1 1");
  CHECK(c.ambient() == 4);
  REQUIRE(c.size() == 2);
  CHECK(c.labels()[0] == "a");
  CHECK(c.row_of("b")[2] == Scalar(1));

  Configuration one = parse_config("rank 3\na = 1 2 1");
  CHECK(one.size() == 1);

  Configuration q = parse_config("# comment\n\nrank 2\nx = -3/6 7 # trailing\n");
  CHECK(q.row_of("x")[0] == Scalar(-1) / Scalar(2));
}

TEST_CASE("config errors carry line numbers") {
  CHECK(error_line("a = 1 2").rfind("line 1:", 0) == 0);
  CHECK(error_line("rank 3\na = 1 2").rfind("line 2:", 0) == 0);
  CHECK(error_line("rank 2\na = 1 2\n\na = 3 4").rfind("line 4:", 0) == 0);
  CHECK(error_line("rank 2\na = 1 2/0").rfind("line 2:", 0) == 0);
  CHECK(error_line("rank 2\na = 1 x").rfind("line 2:", 0) == 0);
  CHECK(error_line("rank 0").rfind("line 1:", 0) == 0);
  CHECK(error_line("rank 2\nrank 2").rfind("line 2:", 0) == 0);
  CHECK(error_line("") != "");
}

TEST_CASE("meet of a join with a join") {
  ExprPtr e = parse_expression("ab ^ cde");
  REQUIRE(e->op == Op::Meet);
  CHECK(is_letters(*e->args[0], "ab"));
  CHECK(is_letters(*e->args[1], "cde"));
  CHECK(e->args[1]->op == Op::Join);
}

TEST_CASE("boundary and regressive forms") {
  ExprPtr d = parse_expression("d(abc)");
  REQUIRE(d->op == Op::Boundary);
  CHECK(is_letters(*d->args[0], "abc"));

  // Without a parenthesis `d` is an ordinary letter.
  CHECK(is_letters(*parse_expression("dab"), "dab"));
  ExprPtr o = parse_expression("o(ab, cd)");
  REQUIRE(o->op == Op::Regressive);
  CHECK(is_letters(*o->args[1], "cd"));
}

TEST_CASE("five-term relation parses as an alternating sum of bracket multiples") {
  ExprPtr e = parse_expression("[abcd] e - [abce] d + [abde] c - [acde] b + [bcde] a");
  const std::vector<std::pair<std::string, char>> terms = {
      {"bcde", 'a'}, {"acde", 'b'}, {"abde", 'c'}, {"abce", 'd'}, {"abcd", 'e'}};
  const std::vector<Op> ops = {Op::Add, Op::Subtract, Op::Add, Op::Subtract};
  const Expr* node = e.get();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Expr* term = node;
    if (i + 1 < terms.size()) {
      REQUIRE(node->op == ops[i]);
      term = node->args[1].get();
      node = node->args[0].get();
    }
    REQUIRE(term->op == Op::Join);
    REQUIRE(term->args.size() == 2);
    REQUIRE(term->args[0]->op == Op::Bracket);
    CHECK(is_letters(*term->args[0]->args[0], terms[i].first));
    CHECK(term->args[1]->letter == terms[i].second);
  }

  Session s(parse_config(kRank4));
  CHECK(s.run("eval [abcd] e - [abce] d + [abde] c - [acde] b + [bcde] a") ==
        "{1}: 0\n{2}: 0\n{3}: 0\n{4}: 0\n");
}

TEST_CASE("precedence and associativity") {
  ExprPtr e = parse_expression("a - b - c");
  REQUIRE(e->op == Op::Subtract);
  CHECK(e->args[0]->op == Op::Subtract);

  ExprPtr m = parse_expression("2 * ab ^ cd + ef # gh");
  REQUIRE(m->op == Op::Tensor);
  REQUIRE(m->args[0]->op == Op::Add);
  const Expr& prod = *m->args[0]->args[0];
  REQUIRE(prod.op == Op::Multiply);
  CHECK(prod.args[1]->op == Op::Meet);

  ExprPtr n = parse_expression("-ab @ cd");
  REQUIRE(n->op == Op::Negate);
  CHECK(n->args[0]->op == Op::Geometric);

  ExprPtr s = parse_expression("!ab");
  REQUIRE(s->op == Op::Join);
  CHECK(s->args[0]->op == Op::Star);
}

TEST_CASE("syntax errors report a position") {
  for (const char* bad : {"ab ^", "(ab", "[ab", "ab)", "o(ab)", "a $ b", "1/", "d(a", ""}) {
    CAPTURE(bad);
    try {
      parse_expression(bad);
      FAIL("accepted");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).rfind("syntax error at position ", 0) == 0);
    }
  }
}

TEST_CASE("printer and parser round trip on 1000 random trees") {
  TreeGen gen(20261018);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    ExprPtr e = gen.tree(5);
    const std::string text = print_expression(*e);
    CAPTURE(text);
    ExprPtr back = parse_expression(text);
    CHECK(same_structure(*e, *back));
    CHECK(print_expression(*back) == text);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("session reproduces the rank-4 tables") {
  Session s(parse_config(kRank4));
  CHECK(s.run("eval ab") == "{12}: -10\n{13}: -2\n{23}: 3\n{14}: -4\n{24}: 1\n{34}: -1\n");
  CHECK(s.run("eval cd") == "{12}: 11\n{13}: -8\n{23}: -5\n{14}: -1\n{24}: -2\n{34}: 1\n");
  CHECK(s.run("eval ab + cd") == "{12}: 1\n{13}: -10\n{23}: -2\n{14}: -5\n{24}: -1\n{34}: 0\n");
  CHECK(s.run("eval ef") == s.run("eval ab + cd"));
  CHECK(s.run("eval [abcd]") == "0\n");
  CHECK(s.run("eval 1/2 * [abef]") == "0\n");
  CHECK(s.run("") == "");
  CHECK(s.run("# comment") == "");
}

TEST_CASE("session formats tensors, flags and screws") {
  Session s(parse_config(kRank4));
  CHECK(s.run("eval a # b") == s.run("eval a # b"));
  CHECK(s.run("eval a # a - a # a") == "0\n");
  CHECK(s.run("eval a # b").find("{1}{1}: -4\n") != std::string::npos);
  const std::string flag = s.run("flag ab, bc");
  CHECK(flag.rfind("level 1: step ", 0) == 0);
  const std::string screw = s.run("screw ab + ef");
  CHECK(screw.rfind("L:\n", 0) == 0);
  CHECK(screw.find("C:\n") != std::string::npos);
}

TEST_CASE("concurrency and derived ranks through the session") {
  Session s(parse_config(kConcurrent));
  CHECK(s.run("concurrent ab cd ef") == "true\n");
  CHECK(s.run("drank abcd abef cdef") == "2\n");
  CHECK(s.run("resolve 1 2 3 abcd abef cdef") == "0\n");
  CHECK(s.run("rank") == "3\n");
}

TEST_CASE("error classes") {
  Session s(parse_config(kRank4));
  CHECK_THROWS_AS(s.run("eval ax"), UsageError);
  CHECK_THROWS_AS(s.run("frobnicate"), UsageError);
  CHECK_THROWS_AS(s.run("eval ab +"), UsageError);
  CHECK_THROWS_AS(s.run("eval"), UsageError);
  CHECK_THROWS_AS(s.run("eval [ab]"), MathError);
  CHECK_THROWS_AS(s.run("eval ab + abc"), MathError);

  Session empty;
  CHECK_THROWS_AS(empty.run("eval a"), UsageError);
}
