#pragma once

#include <ostream>

namespace monocert::cli {

/// Exit codes: 0 pass, 1 fail, 2 usage or domain error, 3 inconclusive.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

/// Entry point behind the `monocert` executable; writes only to `out` and `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monocert::cli
