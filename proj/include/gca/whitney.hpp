#pragma once

// Letter-level algebra: words over single-character letters, formal tensor
// combinations of words, and their evaluation in the tensor algebra of a
// represented configuration.
//
// Words are canonicalised by sorting letters (character order) and absorbing
// the sign of the sort; a repeated letter makes the word zero. Identities are
// certified semantically by evaluation, not by symbolic normal forms.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gca/configuration.hpp"
#include "gca/exalg.hpp"

namespace gca::whitney {

using Word = std::string;
using TensorWord = std::vector<Word>;

// Sorted word and the sign of the sort; sign 0 for a repeated letter.
std::pair<int, Word> canonical_word(std::string_view word);

class WhitneyElement {
 public:
  using Terms = std::map<TensorWord, Scalar>;

  WhitneyElement() = default;
  static WhitneyElement term(const TensorWord& words, const Scalar& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WhitneyElement& operator+=(const WhitneyElement& o);
  WhitneyElement& operator-=(const WhitneyElement& o);
  friend WhitneyElement operator+(WhitneyElement a, const WhitneyElement& b) { return a += b; }
  friend WhitneyElement operator-(WhitneyElement a, const WhitneyElement& b) { return a -= b; }
  friend WhitneyElement operator*(const Scalar& s, const WhitneyElement& e);

  friend bool operator==(const WhitneyElement&, const WhitneyElement&) = default;

  // "ab#cd - ac#bd"; an empty word prints as 1, the zero element as 0.
  std::string str() const;

 private:
  void accumulate(const TensorWord& words, const Scalar& coefficient);

  Terms terms_;
};

// Position-wise concatenation: (x1#x2) tensor (y1) = x1#x2#y1.
WhitneyElement tensor(const WhitneyElement& a, const WhitneyElement& b);

// Sum over (i, j) splits of `word` of sign * (W1 # W2), both subwords in the
// order induced from `word`. Throws MathError unless i + j == |word|.
WhitneyElement coproduct_slice(std::string_view word, int i, int j);

struct Cell {
  int row;
  int position;
};

// Sum over permutations of the letters in `dotted` cells of sign * tableau.
// Permutations that only reorder dotted letters within one row give the same
// tableau, so each distinct tableau is counted once.
WhitneyElement dotted_expansion(const std::vector<Word>& rows, const std::vector<Cell>& dotted);

// A coordinate tensor indexed by one PlaceSet per tensor position.
class TensorValue {
 public:
  using Key = std::vector<PlaceSet>;
  using Coords = std::map<Key, Scalar>;

  TensorValue() = default;
  explicit TensorValue(int ambient) : ambient_(ambient) {}

  static TensorValue outer(const std::vector<Extensor>& factors);
  // Positions of a followed by positions of b.
  static TensorValue outer(const TensorValue& a, const TensorValue& b);

  int ambient() const { return ambient_; }
  bool is_zero() const { return coords_.empty(); }
  const Coords& coords() const { return coords_; }
  Scalar coord(const Key& key) const;

  TensorValue& operator+=(const TensorValue& o);
  TensorValue& operator-=(const TensorValue& o);
  friend TensorValue operator+(TensorValue a, const TensorValue& b) { return a += b; }
  friend TensorValue operator-(TensorValue a, const TensorValue& b) { return a -= b; }
  friend TensorValue operator*(const Scalar& s, const TensorValue& t);

  friend bool operator==(const TensorValue&, const TensorValue&) = default;

 private:
  void add_to(const Key& key, const Scalar& v);

  int ambient_ = 0;
  Coords coords_;
};

// Words map to from_points of their letters, tensor words to outer products.
// Throws UsageError naming an unbound letter.
TensorValue evaluate(const WhitneyElement& e, const Configuration& c);

bool is_zero_mod_dependencies(const WhitneyElement& e, const Configuration& c);

using RankOracle = std::function<int(std::string_view letters)>;

// u <> v = sum over (r-k, k) splits of u of sign * (u1 v # u2), with
// k = r + s - rank(uv).
WhitneyElement geometric_product(std::string_view u, std::string_view v, const RankOracle& rank);
// Sum over (k, s-k) splits of v of sign * (u v2 # v1).
WhitneyElement geometric_product_alt(std::string_view u, std::string_view v,
                                     const RankOracle& rank);

RankOracle rank_oracle(const Configuration& c);

}  // namespace gca::whitney
