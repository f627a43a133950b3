#include "cannon/geodesics.hpp"

#include <functional>
#include <future>
#include <vector>

#include "cannon/cayley.hpp"

namespace cannon {

GeodesicFamily geodesics_to(const GroupElement& g, std::int64_t max_length) {
  const std::int64_t target_len = geodesic_length(g);
  if (target_len > max_length) {
    throw BoundExceeded("geodesic length " + std::to_string(target_len) + " of " + g.to_string() +
                        " exceeds the bound " + std::to_string(max_length));
  }
  GeodesicFamily family{g, {}};
  std::vector<Letter> prefix;
  std::function<void(const GroupElement&)> extend = [&](const GroupElement& at) {
    const auto len = static_cast<std::int64_t>(prefix.size());
    if (len == target_len) {
      if (at == g) family.words.insert(Word(prefix));
      return;
    }
    for (Letter l : kLetters) {
      const GroupElement next = step(at, l);
      if (len + 1 + distance(next, g) != target_len) continue;
      prefix.push_back(l);
      extend(next);
      prefix.pop_back();
    }
  };
  extend(identity());
  return family;
}

namespace {

// Geodesic words of length <= max_len that start with `prefix`, which
// must itself be geodesic.
void collect_geodesics(std::vector<Letter>& prefix, const GroupElement& at, std::size_t max_len,
                       std::set<Word>& out) {
  out.insert(Word(prefix));
  if (prefix.size() == max_len) return;
  for (Letter l : kLetters) {
    const GroupElement next = step(at, l);
    if (geodesic_length(next) != static_cast<std::int64_t>(prefix.size() + 1)) continue;
    prefix.push_back(l);
    collect_geodesics(prefix, next, max_len, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> geodesic_words_up_to(std::size_t max_len, std::size_t workers) {
  if (max_len > kMaxGeodesicEnumerationLength) {
    throw BoundExceeded("geodesic enumeration length " + std::to_string(max_len) + " exceeds " +
                        std::to_string(kMaxGeodesicEnumerationLength));
  }
  std::set<Word> out{Word{}};
  if (max_len == 0) return out;

  auto branch = [max_len](Letter first) {
    std::set<Word> part;
    std::vector<Letter> prefix{first};
    collect_geodesics(prefix, letter_element(first), max_len, part);
    return part;
  };
  if (workers <= 1) {
    for (Letter l : kLetters) out.merge(branch(l));
    return out;
  }
  std::vector<std::future<std::set<Word>>> parts;
  for (Letter l : kLetters) parts.push_back(std::async(std::launch::async, branch, l));
  for (auto& p : parts) out.merge(p.get());
  return out;
}

std::set<Word> shorter_equivalent_words(const Word& w) {
  if (w.size() > kMaxShorterSearchLength) {
    throw BoundExceeded("word length " + std::to_string(w.size()) + " exceeds " +
                        std::to_string(kMaxShorterSearchLength));
  }
  const GroupElement target = evaluate(w);
  const auto limit = static_cast<std::int64_t>(w.size());
  std::set<Word> out;
  std::vector<Letter> prefix;
  std::function<void(const GroupElement&)> extend = [&](const GroupElement& at) {
    const auto len = static_cast<std::int64_t>(prefix.size());
    if (len + distance(at, target) >= limit) return;
    if (at == target) out.insert(Word(prefix));
    for (Letter l : kLetters) {
      prefix.push_back(l);
      extend(step(at, l));
      prefix.pop_back();
    }
  };
  extend(identity());
  return out;
}

}  // namespace cannon
