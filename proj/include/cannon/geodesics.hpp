#pragma once

// Geodesic words of G: the predicate, exhaustive enumeration, the family
// of all geodesics to a vertex and the search for shorter words with the
// same endpoint.

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "cannon/group.hpp"

namespace cannon {

/// A search was asked to run past its configured size ceiling.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::size_t kMaxGeodesicEnumerationLength = 12;
inline constexpr std::size_t kMaxShorterSearchLength = 16;
inline constexpr std::int64_t kMaxGeodesicTargetLength = 20;

inline bool is_geodesic(const Word& w) noexcept {
  return static_cast<std::int64_t>(w.size()) == geodesic_length(evaluate(w));
}

struct GeodesicFamily {
  GroupElement target;
  std::set<Word> words;
};

/// Every geodesic word from the identity to g.
GeodesicFamily geodesics_to(const GroupElement& g, std::int64_t max_length = kMaxGeodesicTargetLength);

/// All geodesic words of length <= max_len. The sweep is split by first
/// letter over up to `workers` threads; the result does not depend on it.
std::set<Word> geodesic_words_up_to(std::size_t max_len, std::size_t workers = 1);

/// Words strictly shorter than w that evaluate to the same element.
std::set<Word> shorter_equivalent_words(const Word& w);

}  // namespace cannon
