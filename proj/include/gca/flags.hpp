#pragma once

// Regressive products as flags: descending chains of decomposable extensors
// whose supports are strictly nested. A flag carries one overall scalar that
// may be redistributed among its levels, so two flags are equivalent when
// their supports agree and the product of the levelwise ratios is 1.
//
// Scalars are pinned against canonical representatives: the basis extensor
// of a subspace is from_points of its reduced echelon rows.

#include <optional>
#include <vector>

#include "gca/exalg.hpp"
#include "gca/linalg.hpp"

namespace gca {

Extensor basis_extensor(const Subspace& s);

// The lambda with t == lambda * basis_extensor(support(t)). t decomposable.
Scalar relative_factor(const Extensor& t);

class FlagValue {
 public:
  FlagValue() = default;
  explicit FlagValue(const Extensor& single);

  // Normalises the chain: equal adjacent supports merge, a step-0 bottom and
  // a whole-space top are absorbed into their neighbour as scalars. Throws
  // MathError for zero or non-decomposable levels or a chain that is not
  // strictly descending.
  static FlagValue from_levels(std::vector<Extensor> levels);

  const std::vector<Extensor>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  int ambient() const { return levels_.empty() ? 0 : levels_.front().ambient(); }
  std::vector<Subspace> supports() const;

  friend bool operator==(const FlagValue&, const FlagValue&) = default;

 private:
  std::vector<Extensor> levels_;
};

// A o B = (A D o C) where C spans the common subspace and B = C D exactly.
FlagValue regressive_product(const Extensor& a, const Extensor& b);

// Levels G_i = (X v F_i) ^ F_(i+1), i = 0..m, reading F upwards with F_0 = 0
// and F_(m+1) the whole space. Each level is a meet taken relative to
// X v F_(i+1).
FlagValue multiply_into_flag(const Extensor& x, const FlagValue& f);

// Inserts the levels of g into f in the given order of level indices
// (top-down when omitted).
FlagValue flag_product(const FlagValue& f, const FlagValue& g);
FlagValue flag_product(const FlagValue& f, const FlagValue& g, const std::vector<std::size_t>& order);

bool same_supports(const FlagValue& f, const FlagValue& g);
// Product of lambda_i with f_i = lambda_i g_i, when the supports agree.
std::optional<Scalar> flag_ratio(const FlagValue& f, const FlagValue& g);
bool flags_equivalent(const FlagValue& f, const FlagValue& g);

}  // namespace gca
