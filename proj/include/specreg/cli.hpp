#pragma once

#include <string>
#include <vector>

namespace specreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

/// Subcommands: families, check, qualification, toterr, saturate. argv[0] is the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& argv);

}  // namespace specreg::cli
