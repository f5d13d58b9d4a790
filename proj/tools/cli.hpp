#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zzgla::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. JSON goes to `out`
/// (or to the --out file), tables and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zzgla::cli
