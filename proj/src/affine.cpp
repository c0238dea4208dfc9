#include "gca/affine.hpp"

#include "gca/errors.hpp"

namespace gca::affine {

namespace {

PlaceSet pair(int i, int j) { return PlaceSet::of({i, j}); }

}  // namespace

Extensor boundary(const Matrix& rows) {
  if (rows.empty()) throw MathError("boundary of an empty product");
  const int n = static_cast<int>(rows.front().size());
  Extensor acc(n, static_cast<int>(rows.size()) - 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Matrix rest;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i) rest.push_back(rows[j]);
    }
    Extensor term = from_points(rest, n);
    if (i % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

bool is_kvector(const Extensor& t) {
  for (const auto& [key, value] : t.coords()) {
    if (key.contains(t.ambient())) return false;
  }
  return true;
}

ReducedForm classify_step1(const Extensor& t) {
  if (t.step() != 1) throw MathError("classify_step1 requires a step-1 tensor");
  if (t.is_zero()) return Zero{};
  const int n = t.ambient();
  Row coords;
  for (int i = 1; i <= n; ++i) coords.push_back(t.coord(PlaceSet::of({i})));
  Scalar weight = coords.back();
  if (weight.is_zero()) return Vector{coords};
  for (auto& x : coords) x /= weight;
  return Point{coords, weight};
}

ReducedForm classify_step2_rank3(const Extensor& t) {
  if (t.ambient() != 3) throw MathError("classify_step2_rank3 requires ambient rank 3");
  if (t.step() != 2) throw MathError("classify_step2_rank3 requires a step-2 tensor");
  if (t.is_zero()) return Zero{};
  if (is_kvector(t)) return Couple{t};
  return Segment{t};
}

PointVector factor_step2(const Extensor& t) {
  if (t.step() != 2) throw MathError("factor_step2 requires a step-2 tensor");
  if (t.is_zero() || !is_decomposable(t)) {
    throw MathError("factor_step2 requires a nonzero decomposable tensor");
  }
  if (is_kvector(t)) throw MathError("no finite support point");
  const int n = t.ambient();
  // For a weight-1 point p, (p ^ v)_{in} = -v_i, so v is fixed by T.
  Row v(n, Scalar(0));
  for (int i = 1; i < n; ++i) v[i - 1] = -t.coord(pair(i, n));

  Row p;
  const Subspace line = support(t);
  for (const auto& row : line.basis()) {
    if (!row.back().is_zero()) {
      p = row;
      break;
    }
  }
  Scalar w = p.back();
  for (auto& x : p) x /= w;
  return {p, v};
}

std::pair<Extensor, Extensor> decompose_screw(const Extensor& t) {
  if (t.ambient() != 4 || t.step() != 2) {
    throw MathError("decompose_screw requires a step-2 tensor in rank 4");
  }
  const Row moment = {t.coord(pair(2, 3)), -t.coord(pair(1, 3)), t.coord(pair(1, 2))};
  const Row direction = {t.coord(pair(1, 4)), t.coord(pair(2, 4)), t.coord(pair(3, 4))};
  const Scalar dd = dot(direction, direction);
  if (dd.is_zero()) return {Extensor(4, 2), t};
  const Scalar mu = dot(moment, direction) / dd;
  Extensor couple = Extensor::from_coords(4, 2,
                                          {{pair(2, 3), mu * direction[0]},
                                           {pair(1, 3), -(mu * direction[1])},
                                           {pair(1, 2), mu * direction[2]}});
  return {t - couple, couple};
}

}  // namespace gca::affine
