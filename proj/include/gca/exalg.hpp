#pragma once

// Coordinate-level exterior algebra over the rationals.
//
// An Extensor is a step-k antisymmetric tensor in ambient rank n, stored
// sparsely by k-subsets of places. Places are 1-based in text and 0-based
// bits internally. Keys are ordered by their bitmask, which is exactly the
// colexicographic order 12, 13, 23, 14, 24, 34, ... used for display.
//
// Sign conventions:
//   merge_sign(S, T)  parity of the shuffle sorting S followed by T
//   hodge_star(T)     (*T)[S^c] = merge_sign(S, S^c) T[S]
//   star_inverse(U)   (-1)^{m(n-m)} *U for U of step m
//   meet_coord(T, U)  star_inverse(join(*T, *U))
//
// With these conventions meet_coord agrees with meet_sweedler with sign +1
// for every (n, r, s); both are exposed.

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/linalg.hpp"
#include "gca/scalar.hpp"

namespace gca {

inline constexpr int kMaxAmbient = 32;

class PlaceSet {
 public:
  constexpr PlaceSet() = default;
  constexpr explicit PlaceSet(std::uint32_t mask) : mask_(mask) {}
  // 1-based places, any order; duplicates collapse.
  static PlaceSet of(std::initializer_list<int> places);
  static PlaceSet full(int ambient);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int place) const {
    return (mask_ >> (place - 1)) & 1u;
  }
  // Ascending 1-based places.
  std::vector<int> places() const;
  int max_place() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  PlaceSet complement(int ambient) const;
  constexpr bool intersects(PlaceSet o) const { return (mask_ & o.mask_) != 0; }
  constexpr PlaceSet operator|(PlaceSet o) const { return PlaceSet(mask_ | o.mask_); }
  constexpr PlaceSet operator&(PlaceSet o) const { return PlaceSet(mask_ & o.mask_); }

  // "12" for ambient < 10, "1,10" otherwise.
  std::string label(int ambient) const;

  friend constexpr auto operator<=>(PlaceSet, PlaceSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

// All k-subsets of {1..n} in colex order.
std::vector<PlaceSet> subsets_of_size(int n, int k);

// 0 if the sets meet, otherwise the sign of the shuffle sorting (a, b).
int merge_sign(PlaceSet a, PlaceSet b);
// Same for arbitrary sequences of distinct keys (letters, positions).
int merge_sign(const std::vector<int>& a, const std::vector<int>& b);

class Extensor {
 public:
  using Coords = std::map<PlaceSet, Scalar>;

  Extensor() = default;
  // Zero tensor of the given step.
  Extensor(int ambient, int step);

  static Extensor scalar(int ambient, Scalar value);
  static Extensor basis(int ambient, PlaceSet places, Scalar value = 1);
  // Build from explicit coordinates; zero entries are dropped.
  static Extensor from_coords(int ambient, int step, const Coords& coords);

  int ambient() const { return ambient_; }
  int step() const { return step_; }
  bool is_zero() const { return coords_.empty(); }
  // Nonzero coordinates only.
  const Coords& coords() const { return coords_; }
  Scalar coord(PlaceSet s) const;

  // Extensor step-0 value; throws MathError if step != 0.
  Scalar scalar_value() const;

  Extensor& operator+=(const Extensor& o);
  Extensor& operator-=(const Extensor& o);
  friend Extensor operator+(Extensor a, const Extensor& b) { return a += b; }
  friend Extensor operator-(Extensor a, const Extensor& b) { return a -= b; }
  Extensor operator-() const;

  friend bool operator==(const Extensor&, const Extensor&) = default;

 private:
  void set(PlaceSet s, Scalar v);

  int ambient_ = 0;
  int step_ = 0;
  Coords coords_;
};

Extensor scale(const Scalar& s, const Extensor& t);
Extensor add(const Extensor& t, const Extensor& u);

// Coordinates are the k x k minors of the row matrix. Throws when there are
// more rows than the ambient rank or a row has the wrong length.
Extensor from_points(const Matrix& rows, int ambient);

// Exterior product. A step sum above the ambient rank yields the zero tensor
// of step n.
Extensor join(const Extensor& t, const Extensor& u);

// The single coordinate of a pseudo-scalar. Step-0 tensors are rejected.
Scalar bracket(const Extensor& t);

Extensor hodge_star(const Extensor& t);
Extensor star_inverse(const Extensor& t);

// dim {v : v ^ T = 0}; throws for the zero tensor.
int annihilator_dimension(const Extensor& t);
bool is_decomposable(const Extensor& t);

// The annihilator {v : v ^ T = 0} as a subspace. For decomposable T this is
// the row space of any factorization.
Subspace support(const Extensor& t);

// Rows p_1..p_k with from_points(rows) == T exactly; T decomposable, nonzero.
Matrix factor_points(const Extensor& t);

// If t == lambda * u for a nonzero scalar, returns lambda. Both nonzero.
std::optional<Scalar> proportionality(const Extensor& t, const Extensor& u);

// Sum over (r-k, k) splits A = (A1, A2) of sign * [A1 B] * A2, k = r+s-n.
Extensor meet_sweedler(const Matrix& a, const Matrix& b, int ambient);
// Sum over (k, s-k) splits B = (B1, B2) of sign * [A B2] * B1.
Extensor meet_sweedler_alt(const Matrix& a, const Matrix& b, int ambient);

// star_inverse(join(*T, *U)); zero tensor of step 0 when step sum < n.
Extensor meet_coord(const Extensor& t, const Extensor& u);

}  // namespace gca
