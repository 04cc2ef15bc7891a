#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (without the program name).
///
///   mn --n-max N
///   detsq Z            Z as "a", "a+bi", "a-bi" or "a,b"
///   verify SUITE       elliptic | special | scattering | regdet | all
///
/// Common flags: --prec BITS, --cutoff-norm X, --format json|csv,
/// --orbifold PATH, --threads N.  Tables go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypdet::cli
