#pragma once

// Weighted-point reading of the exterior algebra. The last place is the
// weight coordinate: weight-1 rows are finite points in standard form, weight
// 0 rows are vectors (points at infinity).

#include <utility>
#include <variant>

#include "gca/exalg.hpp"

namespace gca::affine {

struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};

struct Point {
  Row position;  // standard form, last entry 1
  Scalar weight;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Vector {
  Row direction;  // last entry 0
  friend bool operator==(const Vector&, const Vector&) = default;
};

struct Segment {
  Extensor extensor;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Couple {
  Extensor extensor;
  friend bool operator==(const Couple&, const Couple&) = default;
};

struct Screw {
  Extensor line;
  Extensor couple;
  friend bool operator==(const Screw&, const Screw&) = default;
};

using ReducedForm = std::variant<Zero, Point, Vector, Segment, Couple, Screw>;

// Alternating sum of the products with one row omitted. Equals the product
// of the difference rows (b-a)(c-a)... for any input.
Extensor boundary(const Matrix& rows);

// Every coordinate involving the weight place vanishes.
bool is_kvector(const Extensor& t);

ReducedForm classify_step1(const Extensor& t);

// Rank 3 only: Zero, Couple when the 13 and 23 coordinates vanish, else
// Segment.
ReducedForm classify_step2_rank3(const Extensor& t);

struct PointVector {
  Row point;   // weight 1
  Row vector;  // weight 0
};

// Splits a decomposable step-2 tensor with a finite support point into
// p ^ v. Throws MathError("no finite support point") for couples.
PointVector factor_step2(const Extensor& t);

// Rank 4 step 2: T = L + C with L decomposable and C a 2-vector.
//
// Moment M = (T23, -T13, T12) and direction D = (T14, T24, T34), so the
// Plucker relation reads M.D = 0. The couple takes the component of M along
// D under the standard dot product on the first three places:
// C's moment is mu D with mu = (M.D)/(D.D). D = 0 gives (0, T).
std::pair<Extensor, Extensor> decompose_screw(const Extensor& t);

}  // namespace gca::affine
