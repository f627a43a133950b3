#pragma once

// Breadth-first exploration of the Cayley graph.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cannon/group.hpp"

namespace cannon {

/// What the graph search needs from a group: an identity, the group law,
/// inverses and a list of generator letters with their elements.
template <class G>
concept GroupOracle = requires(const typename G::element_type& g) {
  { G::identity() } -> std::convertible_to<typename G::element_type>;
  { G::multiply(g, g) } -> std::convertible_to<typename G::element_type>;
  { G::inverse(g) } -> std::convertible_to<typename G::element_type>;
  { G::generator(Letter::a) } -> std::convertible_to<typename G::element_type>;
  G::generators();
};

/// Radius-r ball around the identity with word-metric distances. Immutable
/// once built.
template <GroupOracle G>
class BasicDistanceMap {
 public:
  using element_type = typename G::element_type;

  BasicDistanceMap(std::int64_t radius, std::unordered_map<element_type, std::int64_t> entries)
      : radius_(radius), entries_(std::move(entries)) {}

  std::int64_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(const element_type& g) const { return entries_.contains(g); }

  std::optional<std::int64_t> distance(const element_type& g) const {
    auto it = entries_.find(g);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const std::unordered_map<element_type, std::int64_t>& entries() const noexcept { return entries_; }

  /// Entries sorted by the element order.
  std::vector<std::pair<element_type, std::int64_t>> sorted() const {
    std::vector<std::pair<element_type, std::int64_t>> out(entries_.begin(), entries_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// |S(r)| for r = 0..radius.
  std::vector<std::uint64_t> sphere_sizes() const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(radius_) + 1, 0);
    for (const auto& [g, d] : entries_) ++out[static_cast<std::size_t>(d)];
    return out;
  }

 private:
  std::int64_t radius_;
  std::unordered_map<element_type, std::int64_t> entries_;
};

using DistanceMap = BasicDistanceMap<CannonGroup>;

template <GroupOracle G>
BasicDistanceMap<G> ball_of(std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be non-negative");
  using E = typename G::element_type;
  std::unordered_map<E, std::int64_t> dist;
  std::deque<E> frontier;
  dist.emplace(G::identity(), 0);
  frontier.push_back(G::identity());
  while (!frontier.empty()) {
    const E g = frontier.front();
    frontier.pop_front();
    const std::int64_t d = dist.at(g);
    if (d == radius) continue;
    for (Letter l : G::generators()) {
      const E h = G::multiply(g, G::generator(l));
      if (dist.emplace(h, d + 1).second) frontier.push_back(h);
    }
  }
  return BasicDistanceMap<G>(radius, std::move(dist));
}

inline DistanceMap ball(std::int64_t radius) { return ball_of<CannonGroup>(radius); }

template <GroupOracle G>
std::vector<std::pair<Letter, typename G::element_type>> neighbors_of(const typename G::element_type& g) {
  std::vector<std::pair<Letter, typename G::element_type>> out;
  for (Letter l : G::generators()) out.emplace_back(l, G::multiply(g, G::generator(l)));
  return out;
}

inline std::vector<std::pair<Letter, GroupElement>> neighbors(const GroupElement& g) {
  return neighbors_of<CannonGroup>(g);
}

/// d(g, h) = |g^-1 h| via the closed-form length.
inline std::int64_t distance(const GroupElement& g, const GroupElement& h) noexcept {
  return geodesic_length(multiply(inverse(g), h));
}

/// Graphviz rendering of the ball: nodes in (layer, x, y) order, each edge
/// of the Cayley graph inside the ball emitted once with label a or t.
std::string export_dot(const DistanceMap& map);

}  // namespace cannon
