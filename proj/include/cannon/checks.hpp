#pragma once

// Exhaustive consistency sweeps run by the CLI's check-* subcommands.
// Each returns the number of cases examined and every mismatch found.

#include <cstdint>
#include <string>
#include <vector>

#include "cannon/automata.hpp"

namespace cannon {

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// accepts(acceptor, w) <=> |w| equals the BFS distance of evaluate(w), for
/// every word of length <= max_len.
CheckReport check_geodesic_acceptor(const Dfa& acceptor, std::size_t max_len);

/// geodesic_length against BFS on the whole radius-r ball.
CheckReport check_closed_form_lengths(std::int64_t radius);

/// Top layer <=> odd number of t letters, words of length <= max_len.
CheckReport check_layer_parity(std::size_t max_len);

/// t a^n t a^m t is never geodesic, |n|, |m| <= range.
CheckReport check_three_t_words(std::int64_t range);

/// Top vertices with |x| <= range, 1 <= |y| <= range have exactly one
/// geodesic, the canonical a^x t a^y.
CheckReport check_top_uniqueness(std::int64_t range);

/// Bottom vertices with |x| <= range, 1 <= |y| <= range have |x| + 1
/// geodesics, all a^x1 t a^y t a^x2 with x1 * x2 >= 0 and x1 + x2 = x.
CheckReport check_bottom_family(std::int64_t range);

}  // namespace cannon
