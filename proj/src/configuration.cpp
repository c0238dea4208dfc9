#include "gca/configuration.hpp"

#include "gca/errors.hpp"

namespace gca {

Configuration::Configuration(int ambient) : ambient_(ambient) {
  if (ambient < 1) throw MathError("ambient rank must be positive");
}

void Configuration::bind(std::string label, Row coords) {
  if (find(label)) throw MathError("duplicate label '" + label + "'");
  if (static_cast<int>(coords.size()) != ambient_) {
    throw MathError("row for '" + label + "' has " + std::to_string(coords.size()) +
                    " entries, expected " + std::to_string(ambient_));
  }
  labels_.push_back(std::move(label));
  rows_.push_back(std::move(coords));
}

std::optional<std::size_t> Configuration::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

const Row& Configuration::row_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw UsageError("unbound letter '" + std::string(label) + "'");
  return rows_[*i];
}

Matrix Configuration::rows_of_letters(std::string_view letters) const {
  Matrix out;
  for (char c : letters) out.push_back(row_of(std::string_view(&c, 1)));
  return out;
}

int Configuration::rank_of_letters(std::string_view letters) const {
  return static_cast<int>(rank(rows_of_letters(letters), static_cast<std::size_t>(ambient_)));
}

}  // namespace gca
