#pragma once

#include <iosfwd>

namespace odrc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the odrc executable. `-` paths read `in` or write `out`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace odrc::cli
