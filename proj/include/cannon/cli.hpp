#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cannon {

// Hard ceilings on the CLI's numeric flags.
inline constexpr std::int64_t kCliMaxRadius = 14;
inline constexpr std::size_t kCliMaxCheckLength = 11;
inline constexpr std::size_t kCliMaxScanLength = 12;
inline constexpr std::int64_t kCliMinWitnessN = 1;
inline constexpr std::int64_t kCliMaxWitnessN = 6;
inline constexpr std::int64_t kCliMaxFamilyRadius = 9;

/// Entry point of the `cannon` tool. args[0] is the program name. Exit
/// status: 0 success, 1 a check failed, 2 usage, bound or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cannon
