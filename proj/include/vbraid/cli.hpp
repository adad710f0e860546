#pragma once

#include <iosfwd>

namespace vbraid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

// Entry point of the `vbraid` tool, with the output streams injected so the
// subcommands can be tested in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vbraid::cli
