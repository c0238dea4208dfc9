#include "gca/cli/config_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "gca/errors.hpp"
#include "gca/exalg.hpp"

namespace gca::cli {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw UsageError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Configuration parse_config(std::string_view text) {
  std::optional<Configuration> config;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "rank") {
      if (config) fail(line_no, "rank declared twice");
      if (tokens.size() != 2) fail(line_no, "expected 'rank N'");
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n < 1 || n > kMaxAmbient) fail(line_no, "rank must be an integer from 1 to 32");
      config.emplace(n);
      continue;
    }

    if (!config) fail(line_no, "expected 'rank N' before any binding");
    // Accept "a = 1 2 3" as well as "a=1 2 3".
    std::string joined;
    for (const auto& t : tokens) joined += t + " ";
    const std::size_t eq = joined.find('=');
    if (eq == std::string::npos) fail(line_no, "expected '<letter> = <coordinates>'");
    std::vector<std::string> lhs = split_ws(std::string_view(joined).substr(0, eq));
    std::vector<std::string> rhs = split_ws(std::string_view(joined).substr(eq + 1));
    if (lhs.size() != 1 || lhs[0].size() != 1 || !std::isalpha(static_cast<unsigned char>(lhs[0][0]))) {
      fail(line_no, "a binding names a single letter");
    }
    if (static_cast<int>(rhs.size()) != config->ambient()) {
      fail(line_no, "'" + lhs[0] + "' has " + std::to_string(rhs.size()) + " coordinates, expected " +
                        std::to_string(config->ambient()));
    }
    Row row;
    for (const auto& q : rhs) {
      auto v = Scalar::parse(q);
      if (!v) fail(line_no, "malformed rational '" + q + "'");
      row.push_back(*v);
    }
    if (config->find(lhs[0])) fail(line_no, "duplicate letter '" + lhs[0] + "'");
    config->bind(lhs[0], std::move(row));
  }
  if (!config) throw UsageError("configuration has no 'rank N' line");
  return *config;
}

Configuration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read configuration '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace gca::cli
