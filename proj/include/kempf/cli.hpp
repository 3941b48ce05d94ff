#pragma once

#include <ostream>
#include <string>

#include "kempf/json_io.hpp"

namespace kempf {

enum ExitCode : int { kOk = 0, kInputError = 2, kResourceError = 3, kDisagree = 4 };

/// Solver against lattice oracle on one (A, B) pair.
struct CrossCheck {
  /// "AGREE", "DISAGREE" or "oracle bound only".
  std::string verdict;
  OptimumReport exact;
  OracleResult oracle;
};

/// A positive optimum whose ray lies outside the scanned ball can only be
/// bounded from below by the scan; that case is "oracle bound only".
CrossCheck cross_check_pair(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram,
                            long radius, std::uint64_t budget);
Json to_json(const CrossCheck& c);

/// Entry point of the command-line tool. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kempf
