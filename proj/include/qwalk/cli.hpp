#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitToleranceFailure = 3;

/// Relative --out paths are resolved against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "QWALK_OUTPUT_DIR";

/// Parses "a,b,c" where each amplitude is "re" or "re:im". Throws
/// std::invalid_argument on malformed input. Does not check normalization.
CoinSpinor parse_spinor(const std::string& text);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Data goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
