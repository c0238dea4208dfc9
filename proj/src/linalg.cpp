#include "gca/linalg.hpp"

#include <utility>

#include "gca/errors.hpp"

namespace gca {

Echelon reduce(Matrix m, std::size_t columns) {
  Echelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < columns && lead < m.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[lead], m[pivot]);
    Scalar inv = Scalar(1) / m[lead][col];
    for (auto& x : m[lead]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        m[r][c] -= f * m[lead][c];
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  m.resize(lead);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t columns) {
  return reduce(m, columns).rows.size();
}

Matrix nullspace(const Matrix& m, std::size_t columns) {
  Echelon e = reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Row v(columns, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      v[e.pivots[r]] = -e.rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw MathError("determinant of a non-square matrix");
  }
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Matrix transpose(const Matrix& m, std::size_t columns) {
  Matrix t(columns, Row(m.size(), Scalar(0)));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < columns; ++c) t[c][r] = m[r][c];
  }
  return t;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw MathError("dot product length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Subspace::Subspace(std::size_t ambient, const Matrix& spanning_rows)
    : ambient_(ambient) {
  for (const auto& r : spanning_rows) {
    if (r.size() != ambient) throw MathError("row length differs from ambient rank");
  }
  Echelon e = reduce(spanning_rows, ambient);
  basis_ = std::move(e.rows);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::whole(std::size_t ambient) {
  Matrix id(ambient, Row(ambient, Scalar(0)));
  for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
  return Subspace(ambient, id);
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) return false;
  // Reduce v against the echelon basis; it lies in the span iff nothing is left.
  Row rest(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Scalar f = rest[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) rest[c] -= f * basis_[r][c];
  }
  for (const auto& x : rest) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& r : other.basis_) {
    if (!contains(r)) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const {
  return Subspace(ambient_, nullspace(basis_, ambient_));
}

Subspace lattice_join(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw MathError("ambient rank mismatch");
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), rows);
}

Subspace lattice_meet(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw MathError("ambient rank mismatch");
  // (A ∩ B)^⊥ = A^⊥ + B^⊥
  return lattice_join(a.annihilator(), b.annihilator()).annihilator();
}

}  // namespace gca
