#pragma once

// Command-line front end. Subcommands: order, classify, decompose, hedge,
// preference, certify, compare. Results are JSON on stdout (or --out).
//
// Exit codes: 0 success / holds_on_budget, 2 input error (the diagnostic
// names the offending field), 3 violated certificate, 1 internal error.

#include <ostream>

namespace riskprop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitViolated = 3;

/// Seed used when neither --seed nor RISKPROP_SEED is given.
inline constexpr unsigned long long kDefaultSeed = 0;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riskprop::cli
