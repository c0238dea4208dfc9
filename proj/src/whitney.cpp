#include "gca/whitney.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gca/errors.hpp"

namespace gca::whitney {

namespace {

// Letters of `word` at the positions in `which` (1-based), in order.
Word pick(std::string_view word, PlaceSet which) {
  Word out;
  for (int p : which.places()) out += word[static_cast<std::size_t>(p - 1)];
  return out;
}

PlaceSet all_positions(std::size_t length) {
  return length == 0 ? PlaceSet() : PlaceSet::full(static_cast<int>(length));
}

PlaceSet rest_of(PlaceSet all, PlaceSet part) { return PlaceSet(all.mask() & ~part.mask()); }

void check_word(std::string_view w) {
  if (w.size() > static_cast<std::size_t>(kMaxAmbient)) throw MathError("word too long");
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::pair<int, Word> canonical_word(std::string_view word) {
  std::vector<int> codes(word.begin(), word.end());
  int sign = permutation_sign(codes);
  Word sorted(word);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) sign = 0;
  return {sign, sorted};
}

WhitneyElement WhitneyElement::term(const TensorWord& words, const Scalar& coefficient) {
  WhitneyElement e;
  e.accumulate(words, coefficient);
  return e;
}

void WhitneyElement::accumulate(const TensorWord& words, const Scalar& coefficient) {
  Scalar c = coefficient;
  TensorWord canonical;
  canonical.reserve(words.size());
  for (const auto& w : words) {
    auto [sign, sorted] = canonical_word(w);
    if (sign == 0) return;
    if (sign < 0) c = -c;
    canonical.push_back(std::move(sorted));
  }
  if (c.is_zero()) return;
  auto it = terms_.find(canonical);
  if (it == terms_.end()) {
    terms_.emplace(std::move(canonical), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WhitneyElement& WhitneyElement::operator+=(const WhitneyElement& o) {
  for (const auto& [words, c] : o.terms_) accumulate(words, c);
  return *this;
}

WhitneyElement& WhitneyElement::operator-=(const WhitneyElement& o) {
  for (const auto& [words, c] : o.terms_) accumulate(words, -c);
  return *this;
}

WhitneyElement operator*(const Scalar& s, const WhitneyElement& e) {
  WhitneyElement out;
  for (const auto& [words, c] : e.terms_) out.accumulate(words, s * c);
  return out;
}

std::string WhitneyElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [words, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.str() + " ";
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i > 0) out += "#";
      out += words[i].empty() ? "1" : words[i];
    }
  }
  return out;
}

WhitneyElement tensor(const WhitneyElement& a, const WhitneyElement& b) {
  WhitneyElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      TensorWord words = wa;
      words.insert(words.end(), wb.begin(), wb.end());
      out += WhitneyElement::term(words, ca * cb);
    }
  }
  return out;
}

WhitneyElement coproduct_slice(std::string_view word, int i, int j) {
  check_word(word);
  if (i < 0 || j < 0 || static_cast<std::size_t>(i + j) != word.size()) {
    throw MathError("coproduct slice lengths must sum to the word length");
  }
  WhitneyElement out;
  if (canonical_word(word).first == 0) return out;
  const PlaceSet all = all_positions(word.size());
  for (PlaceSet first : subsets_of_size(static_cast<int>(word.size()), i)) {
    PlaceSet second = rest_of(all, first);
    out += WhitneyElement::term({pick(word, first), pick(word, second)},
                                Scalar(merge_sign(first, second)));
  }
  return out;
}

WhitneyElement dotted_expansion(const std::vector<Word>& rows, const std::vector<Cell>& dotted) {
  std::vector<char> letters;
  std::set<char> seen;
  std::map<int, int> per_row;
  for (const Cell& cell : dotted) {
    if (cell.row < 0 || static_cast<std::size_t>(cell.row) >= rows.size() || cell.position < 0 ||
        static_cast<std::size_t>(cell.position) >= rows[cell.row].size()) {
      throw MathError("dotted cell outside the tableau");
    }
    char letter = rows[cell.row][cell.position];
    if (!seen.insert(letter).second) throw MathError("dotted letters must be distinct");
    letters.push_back(letter);
    ++per_row[cell.row];
  }

  std::vector<int> perm(letters.size());
  std::iota(perm.begin(), perm.end(), 0);
  WhitneyElement sum;
  do {
    TensorWord tableau = rows;
    for (std::size_t c = 0; c < dotted.size(); ++c) {
      tableau[dotted[c].row][dotted[c].position] = letters[perm[c]];
    }
    sum += WhitneyElement::term(tableau, Scalar(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));

  Scalar multiplicity = 1;
  for (const auto& [row, count] : per_row) {
    for (int f = 2; f <= count; ++f) multiplicity *= f;
  }
  return (Scalar(1) / multiplicity) * sum;
}

TensorValue TensorValue::outer(const std::vector<Extensor>& factors) {
  if (factors.empty()) throw MathError("outer product of no factors");
  TensorValue out(factors.front().ambient());
  std::map<Key, Scalar> acc = {{Key{}, Scalar(1)}};
  for (const auto& f : factors) {
    if (f.ambient() != out.ambient_) throw MathError("ambient rank mismatch");
    std::map<Key, Scalar> next;
    for (const auto& [key, v] : acc) {
      for (const auto& [s, w] : f.coords()) {
        Key k = key;
        k.push_back(s);
        next.emplace(std::move(k), v * w);
      }
    }
    acc = std::move(next);
  }
  out.coords_ = std::move(acc);
  return out;
}

TensorValue TensorValue::outer(const TensorValue& a, const TensorValue& b) {
  if (a.ambient_ != b.ambient_) throw MathError("ambient rank mismatch");
  TensorValue out(a.ambient_);
  for (const auto& [ka, va] : a.coords_) {
    for (const auto& [kb, vb] : b.coords_) {
      Key key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.coords_.emplace(std::move(key), va * vb);
    }
  }
  return out;
}

Scalar TensorValue::coord(const Key& key) const {
  auto it = coords_.find(key);
  return it == coords_.end() ? Scalar(0) : it->second;
}

void TensorValue::add_to(const Key& key, const Scalar& v) {
  auto it = coords_.find(key);
  if (it == coords_.end()) {
    if (!v.is_zero()) coords_.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) coords_.erase(it);
}

TensorValue& TensorValue::operator+=(const TensorValue& o) {
  if (ambient_ == 0) ambient_ = o.ambient_;
  if (o.ambient_ != 0 && o.ambient_ != ambient_) throw MathError("ambient rank mismatch");
  for (const auto& [key, v] : o.coords_) add_to(key, v);
  return *this;
}

TensorValue& TensorValue::operator-=(const TensorValue& o) {
  return *this += Scalar(-1) * o;
}

TensorValue operator*(const Scalar& s, const TensorValue& t) {
  TensorValue out(t.ambient_);
  if (s.is_zero()) return out;
  for (const auto& [key, v] : t.coords_) out.coords_.emplace(key, s * v);
  return out;
}

TensorValue evaluate(const WhitneyElement& e, const Configuration& c) {
  TensorValue out(c.ambient());
  for (const auto& [words, coefficient] : e.terms()) {
    std::vector<Extensor> factors;
    factors.reserve(words.size());
    for (const auto& w : words) {
      Matrix rows = c.rows_of_letters(w);
      if (static_cast<int>(rows.size()) > c.ambient()) {
        factors.emplace_back(c.ambient(), c.ambient());
      } else {
        factors.push_back(from_points(rows, c.ambient()));
      }
    }
    out += coefficient * TensorValue::outer(factors);
  }
  return out;
}

bool is_zero_mod_dependencies(const WhitneyElement& e, const Configuration& c) {
  return evaluate(e, c).is_zero();
}

namespace {

struct ProductShape {
  int r;
  int s;
  int k;
};

ProductShape product_shape(std::string_view u, std::string_view v, const RankOracle& rank) {
  check_word(u);
  check_word(v);
  if (u.empty() || v.empty()) throw MathError("geometric product of an empty word");
  if (canonical_word(u).first == 0 || canonical_word(v).first == 0) {
    throw MathError("geometric product of a zero word");
  }
  for (char ch : u) {
    if (v.find(ch) != std::string_view::npos) {
      throw MathError("geometric product requires disjoint words");
    }
  }
  const int r = static_cast<int>(u.size());
  const int s = static_cast<int>(v.size());
  std::string uv(u);
  uv += v;
  const int k = r + s - rank(uv);
  if (k < 0 || k > std::min(r, s)) {
    throw MathError("geometric product requires independent words");
  }
  return {r, s, k};
}

}  // namespace

WhitneyElement geometric_product(std::string_view u, std::string_view v, const RankOracle& rank) {
  auto [r, s, k] = product_shape(u, v, rank);
  (void)s;
  WhitneyElement out;
  const PlaceSet all = all_positions(u.size());
  for (PlaceSet first : subsets_of_size(r, r - k)) {
    PlaceSet second = rest_of(all, first);
    out += WhitneyElement::term({pick(u, first) + std::string(v), pick(u, second)},
                                Scalar(merge_sign(first, second)));
  }
  return out;
}

WhitneyElement geometric_product_alt(std::string_view u, std::string_view v,
                                     const RankOracle& rank) {
  auto [r, s, k] = product_shape(u, v, rank);
  (void)r;
  WhitneyElement out;
  const PlaceSet all = all_positions(v.size());
  for (PlaceSet first : subsets_of_size(s, k)) {
    PlaceSet second = rest_of(all, first);
    out += WhitneyElement::term({std::string(u) + pick(v, second), pick(v, first)},
                                Scalar(merge_sign(first, second)));
  }
  return out;
}

RankOracle rank_oracle(const Configuration& c) {
  return [&c](std::string_view letters) { return c.rank_of_letters(letters); };
}

}  // namespace gca::whitney
