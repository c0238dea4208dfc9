#pragma once

// Expression evaluation, value printing and the command interpreter.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gca/cli/expression.hpp"
#include "gca/configuration.hpp"
#include "gca/exalg.hpp"
#include "gca/flags.hpp"
#include "gca/whitney.hpp"

namespace gca::cli {

using Value = std::variant<Extensor, whitney::TensorValue, FlagValue>;

// Letters evaluate to their points, juxtaposition to joins, ^ to the meet,
// @ to the evaluated geometric product of two letter words, # to outer
// products. Unbound letters raise UsageError; algebraic failures MathError.
Value evaluate(const Expr& e, const Configuration& c);

// Extensors: one "{places}: value" line per coordinate in colex order, zeros
// included; step 0 prints the bare scalar. Tensors: nonzero coordinates as
// "{12}{3}: value", or 0. Flags: levels top-down, each headed by its step.
std::string format_value(const Value& v);
std::string format_extensor(const Extensor& t);

// Holds the loaded configuration and runs one command line at a time.
class Session {
 public:
  Session() = default;
  explicit Session(Configuration c) : config_(std::move(c)) {}

  // Returns the command's output, newline-terminated; blank lines and lines
  // starting with '#' produce nothing. Throws UsageError or MathError.
  std::string run(std::string_view line);

 private:
  const Configuration& config() const;

  std::optional<Configuration> config_;
};

}  // namespace gca::cli
