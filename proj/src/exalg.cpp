#include "gca/exalg.hpp"

#include <algorithm>

#include "gca/errors.hpp"

namespace gca {

namespace {

void check_ambient(int ambient) {
  if (ambient < 1 || ambient > kMaxAmbient) {
    throw MathError("ambient rank out of range: " + std::to_string(ambient));
  }
}

void check_same_shape(const Extensor& t, const Extensor& u) {
  if (t.ambient() != u.ambient()) throw MathError("ambient rank mismatch");
  if (t.step() != u.step()) throw MathError("step mismatch");
}

Matrix select_columns(const Matrix& rows, PlaceSet cols) {
  auto places = cols.places();
  Matrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Row sub;
    sub.reserve(places.size());
    for (int p : places) sub.push_back(r[p - 1]);
    out.push_back(std::move(sub));
  }
  return out;
}

Matrix select_rows(const Matrix& rows, PlaceSet which) {
  Matrix out;
  for (int p : which.places()) out.push_back(rows[p - 1]);
  return out;
}

Matrix concat(Matrix a, const Matrix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Matrix of v -> v ^ T: one row per (k+1)-subset, one column per place.
Matrix wedge_map(const Extensor& t) {
  const int n = t.ambient();
  std::map<PlaceSet, Row> rows;
  for (int i = 1; i <= n; ++i) {
    Extensor ei = Extensor::basis(n, PlaceSet::of({i}));
    Extensor product = join(ei, t);
    for (const auto& [key, value] : product.coords()) {
      auto [it, inserted] = rows.try_emplace(key, Row(n, Scalar(0)));
      it->second[i - 1] = value;
    }
  }
  Matrix m;
  m.reserve(rows.size());
  for (auto& [key, row] : rows) m.push_back(std::move(row));
  return m;
}

}  // namespace

PlaceSet PlaceSet::of(std::initializer_list<int> places) {
  std::uint32_t mask = 0;
  for (int p : places) {
    if (p < 1 || p > kMaxAmbient) throw MathError("place out of range");
    mask |= 1u << (p - 1);
  }
  return PlaceSet(mask);
}

PlaceSet PlaceSet::full(int ambient) {
  check_ambient(ambient);
  return PlaceSet(ambient == 32 ? ~0u : ((1u << ambient) - 1));
}

std::vector<int> PlaceSet::places() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

PlaceSet PlaceSet::complement(int ambient) const {
  return PlaceSet(full(ambient).mask() & ~mask_);
}

std::string PlaceSet::label(int ambient) const {
  std::string out;
  for (int p : places()) {
    if (ambient >= 10 && !out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::vector<PlaceSet> subsets_of_size(int n, int k) {
  std::vector<PlaceSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {PlaceSet()};
  // Gosper's hack enumerates masks with k bits in increasing numeric order,
  // which is colex order.
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (m < limit) {
    out.emplace_back(static_cast<std::uint32_t>(m));
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

int merge_sign(PlaceSet a, PlaceSet b) {
  if (a.intersects(b)) return 0;
  // Each element of b jumps over the elements of a above it.
  int inversions = 0;
  for (int p : b.places()) {
    inversions += std::popcount(a.mask() >> p);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> all = a;
  all.insert(all.end(), b.begin(), b.end());
  int inversions = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return 0;
      if (all[i] > all[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Extensor::Extensor(int ambient, int step) : ambient_(ambient), step_(step) {
  check_ambient(ambient);
  if (step < 0 || step > ambient) throw MathError("step exceeds ambient rank");
}

Extensor Extensor::scalar(int ambient, Scalar value) {
  Extensor t(ambient, 0);
  t.set(PlaceSet(), std::move(value));
  return t;
}

Extensor Extensor::basis(int ambient, PlaceSet places, Scalar value) {
  Extensor t(ambient, places.size());
  if (places.max_place() > ambient) throw MathError("place exceeds ambient rank");
  t.set(places, std::move(value));
  return t;
}

Extensor Extensor::from_coords(int ambient, int step, const Coords& coords) {
  Extensor t(ambient, step);
  for (const auto& [key, value] : coords) {
    if (key.size() != step || key.max_place() > ambient) {
      throw MathError("coordinate label does not match step");
    }
    t.set(key, value);
  }
  return t;
}

Scalar Extensor::coord(PlaceSet s) const {
  auto it = coords_.find(s);
  return it == coords_.end() ? Scalar(0) : it->second;
}

Scalar Extensor::scalar_value() const {
  if (step_ != 0) throw MathError("not a step-0 tensor");
  return coord(PlaceSet());
}

void Extensor::set(PlaceSet s, Scalar v) {
  if (v.is_zero()) {
    coords_.erase(s);
  } else {
    coords_[s] = std::move(v);
  }
}

Extensor& Extensor::operator+=(const Extensor& o) {
  check_same_shape(*this, o);
  for (const auto& [key, value] : o.coords_) set(key, coord(key) + value);
  return *this;
}

Extensor& Extensor::operator-=(const Extensor& o) {
  check_same_shape(*this, o);
  for (const auto& [key, value] : o.coords_) set(key, coord(key) - value);
  return *this;
}

Extensor Extensor::operator-() const { return scale(Scalar(-1), *this); }

Extensor scale(const Scalar& s, const Extensor& t) {
  Extensor::Coords out;
  if (!s.is_zero()) {
    for (const auto& [key, value] : t.coords()) out.emplace(key, s * value);
  }
  return Extensor::from_coords(t.ambient(), t.step(), out);
}

Extensor add(const Extensor& t, const Extensor& u) { return t + u; }

Extensor from_points(const Matrix& rows, int ambient) {
  check_ambient(ambient);
  const int k = static_cast<int>(rows.size());
  if (k > ambient) throw MathError("step exceeds ambient rank");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ambient) {
      throw MathError("row length differs from ambient rank");
    }
  }
  if (k == 0) return Extensor::scalar(ambient, 1);
  Extensor::Coords coords;
  for (PlaceSet s : subsets_of_size(ambient, k)) {
    Scalar minor = determinant(select_columns(rows, s));
    if (!minor.is_zero()) coords.emplace(s, std::move(minor));
  }
  return Extensor::from_coords(ambient, k, coords);
}

Extensor join(const Extensor& t, const Extensor& u) {
  if (t.ambient() != u.ambient()) throw MathError("ambient rank mismatch");
  const int n = t.ambient();
  const int step = t.step() + u.step();
  if (step > n) return Extensor(n, n);
  Extensor::Coords acc;
  for (const auto& [s, tv] : t.coords()) {
    for (const auto& [s2, uv] : u.coords()) {
      int sign = merge_sign(s, s2);
      if (sign == 0) continue;
      Scalar term = tv * uv;
      if (sign < 0) term = -term;
      acc[s | s2] += term;
    }
  }
  return Extensor::from_coords(n, step, acc);
}

Scalar bracket(const Extensor& t) {
  if (t.step() != t.ambient() || t.step() == 0) {
    throw MathError("bracket requires a pseudo-scalar");
  }
  return t.coord(PlaceSet::full(t.ambient()));
}

Extensor hodge_star(const Extensor& t) {
  const int n = t.ambient();
  Extensor::Coords out;
  for (const auto& [s, v] : t.coords()) {
    PlaceSet c = s.complement(n);
    out.emplace(c, merge_sign(s, c) < 0 ? -v : v);
  }
  return Extensor::from_coords(n, n - t.step(), out);
}

Extensor star_inverse(const Extensor& t) {
  const int m = t.step();
  const int n = t.ambient();
  Extensor s = hodge_star(t);
  return (m * (n - m)) % 2 == 0 ? s : -s;
}

int annihilator_dimension(const Extensor& t) {
  if (t.is_zero()) throw MathError("decomposability undefined for zero");
  return t.ambient() - static_cast<int>(rank(wedge_map(t), t.ambient()));
}

bool is_decomposable(const Extensor& t) {
  return annihilator_dimension(t) == t.step();
}

Subspace support(const Extensor& t) {
  if (t.is_zero()) throw MathError("support undefined for zero");
  const auto n = static_cast<std::size_t>(t.ambient());
  return Subspace(n, nullspace(wedge_map(t), n));
}

std::optional<Scalar> proportionality(const Extensor& t, const Extensor& u) {
  if (t.ambient() != u.ambient() || t.step() != u.step()) return std::nullopt;
  if (t.is_zero() || u.is_zero()) return std::nullopt;
  const auto& [key, uv] = *u.coords().begin();
  Scalar lambda = t.coord(key) / uv;
  if (lambda.is_zero() || scale(lambda, u) != t) return std::nullopt;
  return lambda;
}

Matrix factor_points(const Extensor& t) {
  if (t.step() == 0) throw MathError("cannot factor a step-0 tensor into points");
  Subspace s = support(t);
  if (static_cast<int>(s.dim()) != t.step()) {
    throw MathError("tensor is not decomposable");
  }
  Matrix rows = s.basis();
  auto lambda = proportionality(t, from_points(rows, t.ambient()));
  if (!lambda) throw MathError("tensor is not decomposable");
  for (auto& x : rows.front()) x *= *lambda;
  return rows;
}

Extensor meet_sweedler(const Matrix& a, const Matrix& b, int ambient) {
  const int r = static_cast<int>(a.size());
  const int s = static_cast<int>(b.size());
  if (r + s < ambient) throw MathError("meet undefined below complementary steps");
  if (r > ambient || s > ambient) throw MathError("step exceeds ambient rank");
  const int k = r + s - ambient;
  Extensor acc(ambient, k);
  const PlaceSet all = r == 0 ? PlaceSet() : PlaceSet::full(r);
  for (PlaceSet first : subsets_of_size(r, r - k)) {
    PlaceSet second = PlaceSet(all.mask() & ~first.mask());
    Scalar br = bracket(from_points(concat(select_rows(a, first), b), ambient));
    if (br.is_zero()) continue;
    if (merge_sign(first, second) < 0) br = -br;
    acc += scale(br, from_points(select_rows(a, second), ambient));
  }
  return acc;
}

Extensor meet_sweedler_alt(const Matrix& a, const Matrix& b, int ambient) {
  const int r = static_cast<int>(a.size());
  const int s = static_cast<int>(b.size());
  if (r + s < ambient) throw MathError("meet undefined below complementary steps");
  if (r > ambient || s > ambient) throw MathError("step exceeds ambient rank");
  const int k = r + s - ambient;
  Extensor acc(ambient, k);
  const PlaceSet all = s == 0 ? PlaceSet() : PlaceSet::full(s);
  for (PlaceSet first : subsets_of_size(s, k)) {
    PlaceSet second = PlaceSet(all.mask() & ~first.mask());
    Scalar br = bracket(from_points(concat(a, select_rows(b, second)), ambient));
    if (br.is_zero()) continue;
    if (merge_sign(first, second) < 0) br = -br;
    acc += scale(br, from_points(select_rows(b, first), ambient));
  }
  return acc;
}

Extensor meet_coord(const Extensor& t, const Extensor& u) {
  if (t.ambient() != u.ambient()) throw MathError("ambient rank mismatch");
  const int n = t.ambient();
  if (t.step() + u.step() < n) return Extensor(n, 0);
  return star_inverse(join(hodge_star(t), hodge_star(u)));
}

}  // namespace gca
