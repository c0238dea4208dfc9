#include "gca/flags.hpp"

#include <numeric>

#include "gca/errors.hpp"

namespace gca {

namespace {

std::size_t dim_of(int n) { return static_cast<std::size_t>(n); }

Matrix rows_of(const PlaceSet& which, const Matrix& m) {
  Matrix out;
  for (int p : which.places()) out.push_back(m[static_cast<std::size_t>(p - 1)]);
  return out;
}

Matrix concat(Matrix a, const Matrix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Bracket of rows spanning `w`, relative to its basis extensor.
Scalar relative_bracket(const Matrix& rows, const Subspace& w, int n) {
  Extensor e = from_points(rows, n);
  if (e.is_zero()) return 0;
  auto lambda = proportionality(e, basis_extensor(w));
  if (!lambda) throw MathError("rows do not span the reference subspace");
  return *lambda;
}

// Sweedler meet of a and b inside w = span(a) + span(b).
Extensor relative_meet(const Matrix& a, const Matrix& b, const Subspace& w, int n) {
  const int r = static_cast<int>(a.size());
  const int split = static_cast<int>(w.dim()) - static_cast<int>(b.size());
  const PlaceSet all = r == 0 ? PlaceSet() : PlaceSet::full(r);
  Extensor acc(n, r - split);
  for (PlaceSet first : subsets_of_size(r, split)) {
    PlaceSet second(all.mask() & ~first.mask());
    Scalar br = relative_bracket(concat(rows_of(first, a), b), w, n);
    if (br.is_zero()) continue;
    if (merge_sign(first, second) < 0) br = -br;
    acc += scale(br, from_points(rows_of(second, a), n));
  }
  return acc;
}

Matrix points_of(const Extensor& t) {
  return t.step() == 0 ? Matrix{} : factor_points(t);
}

void check_decomposable(const Extensor& t) {
  if (t.is_zero()) throw MathError("regressive product of a zero tensor");
  if (!is_decomposable(t)) throw MathError("regressive product requires decomposable tensors");
}

}  // namespace

Extensor basis_extensor(const Subspace& s) {
  const int n = static_cast<int>(s.ambient());
  return s.dim() == 0 ? Extensor::scalar(n, 1) : from_points(s.basis(), n);
}

Scalar relative_factor(const Extensor& t) {
  if (t.step() == 0) return t.scalar_value();
  auto lambda = proportionality(t, basis_extensor(support(t)));
  if (!lambda) throw MathError("relative factor requires a nonzero decomposable tensor");
  return *lambda;
}

FlagValue::FlagValue(const Extensor& single) { *this = from_levels({single}); }

FlagValue FlagValue::from_levels(std::vector<Extensor> levels) {
  if (levels.empty()) throw MathError("flag with no levels");
  std::vector<Subspace> supp;
  for (const auto& l : levels) {
    check_decomposable(l);
    if (l.ambient() != levels.front().ambient()) throw MathError("ambient rank mismatch");
    supp.push_back(support(l));
  }
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!supp[i - 1].contains(supp[i])) throw MathError("flag levels are not nested");
  }

  // Merge equal adjacent supports, keeping the upper level.
  for (std::size_t i = levels.size() - 1; i > 0; --i) {
    if (supp[i] == supp[i - 1]) {
      levels[i - 1] = scale(relative_factor(levels[i]), levels[i - 1]);
      levels.erase(levels.begin() + static_cast<std::ptrdiff_t>(i));
      supp.erase(supp.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  if (levels.size() > 1 && levels.back().step() == 0) {
    const Scalar s = levels.back().scalar_value();
    levels.pop_back();
    supp.pop_back();
    levels.back() = scale(s, levels.back());
  }
  const std::size_t n = dim_of(levels.front().ambient());
  if (levels.size() > 1 && supp.front().dim() == n) {
    const Scalar s = bracket(levels.front());
    levels.erase(levels.begin());
    levels.front() = scale(s, levels.front());
  }

  FlagValue f;
  f.levels_ = std::move(levels);
  return f;
}

std::vector<Subspace> FlagValue::supports() const {
  std::vector<Subspace> out;
  for (const auto& l : levels_) out.push_back(support(l));
  return out;
}

FlagValue regressive_product(const Extensor& a, const Extensor& b) {
  check_decomposable(a);
  check_decomposable(b);
  if (a.ambient() != b.ambient()) throw MathError("ambient rank mismatch");
  const int n = a.ambient();
  const Subspace sa = support(a);
  const Subspace sb = support(b);
  const Subspace common = lattice_meet(sa, sb);
  const Extensor c = basis_extensor(common);

  // Complete the common basis to a basis of support(b).
  Matrix spanned = common.basis();
  Matrix complement;
  for (const auto& row : sb.basis()) {
    if (Subspace(dim_of(n), spanned).contains(row)) continue;
    spanned.push_back(row);
    complement.push_back(row);
  }
  Extensor d = complement.empty() ? Extensor::scalar(n, 1) : from_points(complement, n);
  auto lambda = proportionality(b, join(c, d));
  if (!lambda) throw MathError("failed to factor through the common subspace");
  d = scale(*lambda, d);
  return FlagValue::from_levels({join(a, d), c});
}

FlagValue multiply_into_flag(const Extensor& x, const FlagValue& f) {
  check_decomposable(x);
  if (f.size() == 0) return FlagValue(x);
  if (x.ambient() != f.ambient()) throw MathError("ambient rank mismatch");
  const int n = x.ambient();
  if (x.step() == 0) {
    std::vector<Extensor> levels = f.levels();
    levels.front() = scale(x.scalar_value(), levels.front());
    return FlagValue::from_levels(std::move(levels));
  }
  if (f.levels().front().step() == 0) {
    return FlagValue(scale(f.levels().front().scalar_value(), x));
  }

  // Ascending: F_0 = 0, F_1..F_m from the flag, F_(m+1) the whole space.
  std::vector<Extensor> up = {Extensor::scalar(n, 1)};
  up.insert(up.end(), f.levels().rbegin(), f.levels().rend());
  up.push_back(basis_extensor(Subspace::whole(dim_of(n))));
  std::vector<Subspace> spaces;
  for (const auto& e : up) spaces.push_back(support(e));

  const Subspace sx = support(x);
  std::vector<Extensor> levels;
  for (std::size_t i = 0; i + 1 < up.size(); ++i) {
    const Subspace p = lattice_join(sx, spaces[i]);
    const Subspace w = lattice_join(sx, spaces[i + 1]);
    const Extensor ep = lattice_meet(sx, spaces[i]).dim() == 0 ? join(x, up[i]) : basis_extensor(p);
    Extensor g = relative_meet(points_of(ep), points_of(up[i + 1]), w, n);
    if (g.is_zero()) throw MathError("degenerate flag level");
    levels.push_back(std::move(g));
  }
  return FlagValue::from_levels({levels.rbegin(), levels.rend()});
}

FlagValue flag_product(const FlagValue& f, const FlagValue& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  return flag_product(f, g, order);
}

FlagValue flag_product(const FlagValue& f, const FlagValue& g,
                       const std::vector<std::size_t>& order) {
  FlagValue acc = f;
  for (std::size_t i : order) acc = multiply_into_flag(g.levels().at(i), acc);
  return acc;
}

bool same_supports(const FlagValue& f, const FlagValue& g) {
  return f.size() == g.size() && f.supports() == g.supports();
}

std::optional<Scalar> flag_ratio(const FlagValue& f, const FlagValue& g) {
  if (f.size() != g.size()) return std::nullopt;
  Scalar product = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Extensor& a = f.levels()[i];
    const Extensor& b = g.levels()[i];
    if (a.step() == 0 && b.step() == 0) {
      product *= a.scalar_value() / b.scalar_value();
      continue;
    }
    auto lambda = proportionality(a, b);
    if (!lambda) return std::nullopt;
    product *= *lambda;
  }
  return product;
}

bool flags_equivalent(const FlagValue& f, const FlagValue& g) {
  auto r = flag_ratio(f, g);
  return r && *r == 1;
}

}  // namespace gca
