#pragma once

// Expression language. From tightest to loosest binding:
//   primaries    letter, p/q, (e), [e] bracket, !x Hodge star,
//                d(e) boundary, o(e, e) regressive product
//   juxtaposition  join; a run of letters such as "abc" is a join
//   ^            meet
//   @            geometric product of letter words
//   unary -
//   *            scalar multiple
//   + -
//   #            tensor separator
// Binary operators associate to the left. `d` and `o` are letters unless
// immediately followed by '('.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gca/scalar.hpp"

namespace gca::cli {

enum class Op {
  Letter,
  Number,
  Join,
  Meet,
  Geometric,
  Negate,
  Multiply,
  Add,
  Subtract,
  Tensor,
  Boundary,
  Bracket,
  Star,
  Regressive,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Op op;
  char letter = 0;      // Letter
  Scalar number;        // Number, non-negative
  std::vector<ExprPtr> args;
};

ExprPtr make_letter(char c);
ExprPtr make_number(const Scalar& q);
ExprPtr make_node(Op op, std::vector<ExprPtr> args);

// Throws UsageError with the character position on a syntax error.
ExprPtr parse_expression(std::string_view text);

// Minimal parenthesisation; parse_expression(print_expression(e)) equals e.
std::string print_expression(const Expr& e);

bool same_structure(const Expr& a, const Expr& b);

// Letters of a word node (a letter or a join of letters), or empty.
std::string word_of(const Expr& e);

}  // namespace gca::cli
