#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gca/linalg.hpp"

namespace gca {

// Labelled points of a space of rank `ambient`, in declaration order.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int ambient);

  // Throws MathError for a duplicate label or a row of the wrong length.
  void bind(std::string label, Row coords);

  int ambient() const { return ambient_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& rows() const { return rows_; }
  const Row& row(std::size_t index) const { return rows_.at(index); }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws UsageError naming the label when it is not bound.
  const Row& row_of(std::string_view label) const;
  // Rows for the single-character letters of `letters`, in order.
  Matrix rows_of_letters(std::string_view letters) const;

  // Matrix rank of the rows of the given single-character letters.
  int rank_of_letters(std::string_view letters) const;

 private:
  int ambient_ = 0;
  std::vector<std::string> labels_;
  Matrix rows_;
};

}  // namespace gca
