#pragma once

// Configurations as represented matroids: ranks by exact elimination,
// circuits with canonical dependency coefficients, derived configurations
// (one point per circuit), resolving brackets and the lifting test.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gca/configuration.hpp"

namespace gca::matroids {

// Circuit enumeration is exponential in the ground-set size.
inline constexpr std::size_t kMaxGround = 24;

// Element indices into the ground set, ascending.
using Subset = std::vector<std::size_t>;

class Matroid {
 public:
  explicit Matroid(Configuration c) : config_(std::move(c)) {}

  const Configuration& configuration() const { return config_; }
  std::size_t size() const { return config_.size(); }
  const std::vector<std::string>& labels() const { return config_.labels(); }

  int rank() const;
  int rank_of(const Subset& s) const;
  // Single-character labels; throws UsageError for an unknown letter.
  int rank_of(std::string_view letters) const;
  Subset subset_of(std::string_view letters) const;

 private:
  Configuration config_;
};

struct Circuit {
  Subset elements;
  Row coefficients;  // over the whole ground set, zero off the circuit
};

// Minimal dependent sets, sorted by size then lexicographically. Throws
// MathError beyond kMaxGround elements.
std::vector<Circuit> circuits(const Matroid& m);

bool is_circuit(const Matroid& m, const Subset& s);

// Signed complementary minors: the i-th element of the circuit gets
// (-1)^(i+1) times the minor of the other rows on a fixed set of columns
// where they are independent. Throws MathError if s is not a circuit.
Row raw_circuit_coefficients(const Matroid& m, const Subset& s);
// The same vector made primitive integral with first nonzero entry positive.
Row circuit_coefficients(const Matroid& m, const Subset& s);

// Concatenated member labels; multi-character labels are parenthesised.
std::string circuit_label(const Matroid& m, const Subset& s);

// One point per circuit in a space of rank |ground set|. Empty when there
// are no circuits.
Matroid derived(const Matroid& m);
// Applies derived() k times, stopping early at an empty matroid.
Matroid derive_iterate(const Matroid& m, int k);

// det(S on columns X) / (merge_sign(X^c, X) * det(T rows X^c)). Columns are
// 1-based. Throws MathError "degenerate column choice" when the T bracket
// vanishes, and on mismatched sizes.
Scalar resolving_bracket(const Matrix& s, const Matrix& t, const std::vector<int>& columns);

// Column sets X of size |S| whose complementary T bracket is nonzero.
std::vector<std::vector<int>> admissible_columns(const Matrix& s, const Matrix& t);

// Whether lines ab, cd, ef (pairs of single-character letters) of a rank-3
// configuration share a point: the join of the meet of the first two with
// the third vanishes. Throws MathError for a line through coincident points.
bool three_lines_concurrent(const Configuration& c, const std::array<std::string, 3>& lines);

// Dimension of the height vectors orthogonal to the given circuits'
// coefficient vectors. Affine heights always qualify, so the value is at
// least the rank of the configuration.
int lifting_dimension(const Matroid& m, const std::vector<Subset>& constraints);

}  // namespace gca::matroids
