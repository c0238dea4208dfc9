// Command-line front end. Commands come from --batch or standard input, one
// per line; the first failing command ends the run.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gca/cli/commands.hpp"
#include "gca/cli/config_file.hpp"
#include "gca/errors.hpp"

namespace {

constexpr int kUsageExit = 1;
constexpr int kMathExit = 2;

int run_lines(gca::cli::Session& session, std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::cout << session.run(line) << std::flush;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Grassmann-Cayley, Whitney and matroid computations"};
  std::string config_path;
  std::string batch_path;
  app.add_option("--config", config_path, "configuration file (rank line and point bindings)");
  app.add_option("--batch", batch_path, "file of commands, one per line");
  // Everything after the options is one command, passed through untouched so
  // that bracketed words such as [abcd] are not read as CLI11 lists.
  app.prefix_command();
  app.footer("Trailing arguments form a single command to run instead of reading input.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  const std::vector<std::string> command = app.remaining();
  try {
    gca::cli::Session session = config_path.empty()
                                    ? gca::cli::Session()
                                    : gca::cli::Session(gca::cli::load_config(config_path));
    if (!command.empty()) {
      std::string line;
      for (const auto& w : command) line += (line.empty() ? "" : " ") + w;
      std::cout << session.run(line);
      return 0;
    }
    if (!batch_path.empty()) {
      std::ifstream in(batch_path);
      if (!in) throw gca::UsageError("cannot read batch file '" + batch_path + "'");
      return run_lines(session, in);
    }
    return run_lines(session, std::cin);
  } catch (const gca::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const gca::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathExit;
  }
}
