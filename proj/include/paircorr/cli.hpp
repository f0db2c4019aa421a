#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paircorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Resolves `golden`, `sqrt2`, `e`, `pi` or a decimal literal.
/// Throws std::invalid_argument on anything else.
double parse_alpha(std::string_view text);

/// Thread cap from PAIRCORR_THREADS: nullopt when unset, otherwise a positive
/// integer. Throws std::invalid_argument on malformed values.
std::optional<unsigned> threads_from_env(const char* value);

/// Parses `args` (without the program name), runs one subcommand and writes
/// its output either atomically to --out or to `out`. Returns 0 on success,
/// 2 on usage or precondition errors, 1 on runtime failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace paircorr::cli
