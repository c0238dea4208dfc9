#pragma once

// Configuration files: a `rank N` line, then `<letter> = q1 ... qN` bindings.
// `#` starts a comment; blank lines are ignored. Letters are single ASCII
// letters. Errors are UsageError prefixed with the 1-based line number.

#include <string>
#include <string_view>

#include "gca/configuration.hpp"

namespace gca::cli {

Configuration parse_config(std::string_view text);
Configuration load_config(const std::string& path);

}  // namespace gca::cli
