#pragma once

// Fellow-traveler distances between word paths and the minimal constant
// with which a non-geodesic word is fellow traveled by a shorter word.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cannon/geodesics.hpp"
#include "cannon/group.hpp"

namespace cannon {

/// A geodesic word was passed where a non-geodesic one is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::size_t kMaxFellowWordLength = 16;
inline constexpr std::size_t kMaxScanLength = 12;

/// w(t): the vertex after min(t, |w|) letters.
GroupElement path_point(const Word& w, std::size_t t);

/// w(0), w(1), ..., w(|w|).
std::vector<GroupElement> path_points(const Word& w);

/// Least k with d(u(t), v(t)) <= k at every integer t.
std::int64_t sync_constant(const Word& u, const Word& v);

/// Least k over monotone couplings of the two vertex sequences (steps
/// (1,0), (0,1), (1,1) from (0,0) to (|u|,|v|)) of the largest distance
/// between coupled vertices.
std::int64_t async_constant(const Word& u, const Word& v);

/// Is there a word v with |v| <= len_bound, the same endpoint as w and
/// d(w(t), v(t)) <= k for all t? Requires len_bound < |w| and k >= 0.
bool fellow_feasible(const Word& w, std::size_t len_bound, std::int64_t k);

/// Lexicographically least v witnessing fellow_feasible(w, len_bound, k).
std::optional<Word> fellow_witness(const Word& w, std::size_t len_bound, std::int64_t k);

struct FellowReport {
  Word word;
  GroupElement endpoint;
  std::int64_t word_len = 0;
  std::int64_t geo_len = 0;
  std::int64_t min_k = 0;
  Word witness;

  bool operator==(const FellowReport&) const = default;
};

/// Throws DomainError for geodesic w and BoundExceeded past kMaxFellowWordLength.
FellowReport min_fftp_constant(const Word& w);

struct ScanSummaryRow {
  std::size_t len = 0;
  std::size_t count_nongeodesic = 0;
  std::int64_t max_min_k = 0;

  bool operator==(const ScanSummaryRow&) const = default;
};

struct ScanResult {
  std::size_t max_len = 0;
  std::vector<FellowReport> rows;       // sorted by (word_len, word)
  std::vector<ScanSummaryRow> summary;  // one row per length that has non-geodesic words
};

/// min_fftp_constant for every non-geodesic word of length <= max_len.
ScanResult fftp_scan(std::size_t max_len, std::size_t workers = 1);

}  // namespace cannon
