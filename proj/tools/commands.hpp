#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellspec::cli {

/// File-system failure (unreadable input, unwritable output). Exit code 3,
/// like ParseError.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything the subcommands need, filled in by flag parsing. `seed` fully
/// determines any randomized run.
struct RunConfig {
  std::size_t dims = 2;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 360;
  std::string input;          // CSV or JSON path, per subcommand
  std::string out = ".";      // output directory
  bool plot = false;
  bool time_column = false;
  double tol = 1e-6;          // polarization classification tolerance

  // synth, inline spectrum construction
  std::vector<std::string> bins;  // "u:a1,..,aN:b1,..,bN[:psi]"
  std::string dc;
  std::string nyquist;

  // decompose, inline vectors
  std::string c_arg;
  std::string s_arg;
};

void cmd_simulate(const RunConfig& cfg);
void cmd_analyze(const RunConfig& cfg);
void cmd_synth(const RunConfig& cfg);
void cmd_decompose(const RunConfig& cfg);

}  // namespace ellspec::cli
