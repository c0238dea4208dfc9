#include "gca/matroids.hpp"

#include <algorithm>

#include "gca/errors.hpp"
#include "gca/exalg.hpp"

namespace gca::matroids {

namespace {

Matrix rows_of(const Matroid& m, const Subset& s) {
  Matrix out;
  for (std::size_t i : s) out.push_back(m.configuration().row(i));
  return out;
}

std::size_t ambient_of(const Matroid& m) {
  return static_cast<std::size_t>(m.configuration().ambient());
}

Matrix columns_of(const Matrix& rows, const std::vector<std::size_t>& cols) {
  Matrix out;
  for (const auto& r : rows) {
    Row x;
    for (std::size_t c : cols) x.push_back(r[c]);
    out.push_back(std::move(x));
  }
  return out;
}

bool contains_all(const Subset& outer, const Subset& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Calls f on each k-subset of {0..n-1} in lexicographic order.
template <typename F>
void each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  Subset s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

Row primitive(Row v) {
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    den = lcm(den, x.denominator());
    num = gcd(num, x.numerator());
  }
  if (num == 0) return v;
  Scalar factor(mpq_class(den, num));
  auto first = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (first->sign() < 0) factor = -factor;
  for (auto& x : v) x *= factor;
  return v;
}

PlaceSet places_of(const std::vector<int>& cols) {
  std::uint32_t mask = 0;
  for (int c : cols) mask |= 1u << (c - 1);
  return PlaceSet(mask);
}

}  // namespace

int Matroid::rank() const {
  return static_cast<int>(gca::rank(config_.rows(), static_cast<std::size_t>(config_.ambient())));
}

int Matroid::rank_of(const Subset& s) const {
  for (std::size_t i : s) {
    if (i >= size()) throw UsageError("element index out of range");
  }
  return static_cast<int>(gca::rank(rows_of(*this, s), ambient_of(*this)));
}

int Matroid::rank_of(std::string_view letters) const { return rank_of(subset_of(letters)); }

Subset Matroid::subset_of(std::string_view letters) const {
  Subset s;
  for (char c : letters) {
    auto i = config_.find(std::string_view(&c, 1));
    if (!i) throw UsageError("unbound letter '" + std::string(1, c) + "'");
    s.push_back(*i);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw UsageError("repeated letter");
  return s;
}

bool is_circuit(const Matroid& m, const Subset& s) {
  if (s.empty() || m.rank_of(s) != static_cast<int>(s.size()) - 1) return false;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Subset t = s;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
    if (m.rank_of(t) != static_cast<int>(t.size())) return false;
  }
  return true;
}

std::vector<Circuit> circuits(const Matroid& m) {
  if (m.size() > kMaxGround) {
    throw MathError("circuit enumeration is limited to " + std::to_string(kMaxGround) +
                    " elements");
  }
  std::vector<Circuit> found;
  const std::size_t max_size = std::min(m.size(), static_cast<std::size_t>(m.rank()) + 1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    const std::size_t before = found.size();
    each_subset(m.size(), k, [&](const Subset& s) {
      for (std::size_t i = 0; i < before; ++i) {
        if (contains_all(s, found[i].elements)) return;
      }
      if (m.rank_of(s) == static_cast<int>(k) - 1) {
        found.push_back({s, circuit_coefficients(m, s)});
      }
    });
  }
  return found;
}

Row raw_circuit_coefficients(const Matroid& m, const Subset& s) {
  if (!is_circuit(m, s)) throw MathError("not a circuit: " + circuit_label(m, s));
  const Matrix rows = rows_of(m, s);
  const std::size_t k = s.size() - 1;
  Row out(m.size(), Scalar(0));
  if (k == 0) {
    out[s[0]] = 1;  // a loop
    return out;
  }
  // The first column set (lexicographically) on which the circuit's rows
  // have full rank; all complementary minors are taken there.
  std::vector<std::size_t> cols;
  each_subset(ambient_of(m), k, [&](const Subset& c) {
    if (cols.empty() && gca::rank(columns_of(rows, c), k) == k) cols = c;
  });
  const Matrix restricted = columns_of(rows, cols);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Matrix others;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) others.push_back(restricted[j]);
    }
    Scalar minor = determinant(others);
    out[s[i]] = i % 2 == 0 ? minor : -minor;
  }
  return out;
}

Row circuit_coefficients(const Matroid& m, const Subset& s) {
  return primitive(raw_circuit_coefficients(m, s));
}

std::string circuit_label(const Matroid& m, const Subset& s) {
  std::string out;
  for (std::size_t i : s) {
    const std::string& l = m.labels().at(i);
    out += l.size() == 1 ? l : "(" + l + ")";
  }
  return out;
}

Matroid derived(const Matroid& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return m;
  Configuration c(n);
  for (const auto& circuit : circuits(m)) {
    c.bind(circuit_label(m, circuit.elements), circuit.coefficients);
  }
  return Matroid(std::move(c));
}

Matroid derive_iterate(const Matroid& m, int k) {
  if (k < 0) throw MathError("derivation count must be non-negative");
  Matroid current = m;
  for (int i = 0; i < k && current.size() > 0; ++i) current = derived(current);
  return current;
}

std::vector<std::vector<int>> admissible_columns(const Matrix& s, const Matrix& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<int>> out;
  each_subset(n, s.size(), [&](const Subset& x) {
    std::vector<int> cols;
    for (std::size_t i : x) cols.push_back(static_cast<int>(i) + 1);
    Matrix rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::binary_search(x.begin(), x.end(), i)) rest.push_back(t[i]);
    }
    if (rest.empty() || !determinant(rest).is_zero()) out.push_back(cols);
  });
  return out;
}

Scalar resolving_bracket(const Matrix& s, const Matrix& t, const std::vector<int>& columns) {
  const std::size_t n = t.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxAmbient)) {
    throw MathError("resolving bracket needs between 1 and 32 points");
  }
  const std::size_t k = t.front().size();
  for (const auto& r : s) {
    if (r.size() != n) throw MathError("derived rows must have one entry per point");
  }
  if (s.size() + k != n) throw MathError("derived rows must number points minus rank");
  if (columns.size() != s.size()) throw MathError("column set size must match the derived rows");
  std::vector<std::size_t> cols;
  for (int c : columns) {
    if (c < 1 || static_cast<std::size_t>(c) > n) throw MathError("column out of range");
    cols.push_back(static_cast<std::size_t>(c - 1));
  }
  std::vector<int> sorted = columns;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw MathError("repeated column");
  }

  const PlaceSet x = places_of(sorted);
  const PlaceSet rest = x.complement(static_cast<int>(n));
  Matrix t_rest;
  for (int p : rest.places()) t_rest.push_back(t[static_cast<std::size_t>(p - 1)]);
  const Scalar denominator =
      rest.empty() ? Scalar(1) : Scalar(merge_sign(rest, x)) * determinant(t_rest);
  if (denominator.is_zero()) throw MathError("degenerate column choice");
  std::vector<std::size_t> ordered;
  for (int p : x.places()) ordered.push_back(static_cast<std::size_t>(p - 1));
  const Scalar numerator = s.empty() ? Scalar(1) : determinant(columns_of(s, ordered));
  return numerator / denominator;
}

bool three_lines_concurrent(const Configuration& c, const std::array<std::string, 3>& lines) {
  if (c.ambient() != 3) throw MathError("concurrency test requires a rank-3 configuration");
  std::vector<Matrix> rows;
  for (const auto& l : lines) {
    if (l.size() != 2) throw MathError("a line is named by two letters");
    Matrix r = c.rows_of_letters(l);
    if (from_points(r, 3).is_zero()) throw MathError("line " + l + " has coincident points");
    rows.push_back(std::move(r));
  }
  Extensor p = meet_sweedler(rows[0], rows[1], 3);
  return join(p, from_points(rows[2], 3)).is_zero();
}

int lifting_dimension(const Matroid& m, const std::vector<Subset>& constraints) {
  Matrix rows;
  for (const auto& s : constraints) rows.push_back(circuit_coefficients(m, s));
  return static_cast<int>(m.size() - gca::rank(rows, m.size()));
}

}  // namespace gca::matroids
