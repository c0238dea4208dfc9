#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gca/scalar.hpp"

namespace gca {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

struct Echelon {
  Matrix rows;                     // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row, ascending
};

// Reduced row echelon form by exact Gauss-Jordan elimination. `columns` is
// needed to size empty inputs.
Echelon reduce(Matrix m, std::size_t columns);

std::size_t rank(const Matrix& m, std::size_t columns);

// Basis of {x : m x = 0}, one basis vector per free column.
Matrix nullspace(const Matrix& m, std::size_t columns);

// Square matrices only; throws MathError otherwise.
Scalar determinant(Matrix m);

Matrix transpose(const Matrix& m, std::size_t columns);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

// A linear subspace of Q^n, stored by its unique reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const Matrix& spanning_rows);

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  // Orthogonal complement under the standard dot product.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace lattice_join(const Subspace& a, const Subspace& b);
Subspace lattice_meet(const Subspace& a, const Subspace& b);

}  // namespace gca
