#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace eulerpoly {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `eulerpoly` command: subcommands poly, eval, numbers,
/// verify and witt. Returns 0 when everything passes, 1 on an identity or
/// valuation failure, 2 on a usage or parse error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace eulerpoly
