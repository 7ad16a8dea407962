#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trinil::cli {

// Process exit codes; these are the stable contract of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInadmissible = 2;
inline constexpr int kExitParseError = 3;
inline constexpr int kExitBudgetExhausted = 4;

/// Environment variable supplying the default --seed.
inline constexpr const char* kSeedEnv = "TRINIL_SEED";

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace trinil::cli
