#pragma once

// The group G = < a, t | t^2 = 1, atat = tata > in its coordinate model.
//
// Every element is a vertex of a two-sheeted square grid: (x, y, layer).
// On the bottom sheet `a` steps East-West, on the top sheet it steps
// North-South, and `t` jumps between the sheets.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cannon {

enum class Letter : std::uint8_t { a = 0, a_inv = 1, t = 2 };

/// Fixed letter order a < a^-1 < t used for every enumeration and sort.
inline constexpr std::array<Letter, 3> kLetters{Letter::a, Letter::a_inv, Letter::t};

constexpr Letter inverse(Letter l) noexcept {
  switch (l) {
    case Letter::a: return Letter::a_inv;
    case Letter::a_inv: return Letter::a;
    case Letter::t: return Letter::t;
  }
  return l;
}

constexpr std::size_t index_of(Letter l) noexcept { return static_cast<std::size_t>(l); }

/// Surface character: 'a', 'A' or 't'.
char to_char(Letter l) noexcept;
Letter letter_from_char(char c);

/// An immutable finite sequence of letters.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  /// The first min(n, size()) letters.
  Word prefix(std::size_t n) const;
  Word append(Letter l) const;
  Word concat(const Word& other) const;

  std::size_t count(Letter l) const noexcept;

  /// Compact rendering in the word grammar, e.g. "a^3ta^-2t". Round-trips
  /// through parse_word.
  std::string to_string() const;

  /// Lexicographic in letter order a < A < t; a proper prefix sorts first.
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Thrown for input that does not match the word grammar.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// word  := token* ; token := base power? ; base := a | A | t | T ;
/// power := '^' '-'? digit+ . Whitespace between tokens is ignored.
Word parse_word(std::string_view text);

/// a^n as a word; negative n gives (a^-1)^|n|.
Word a_power(std::int64_t n);

enum class Layer : std::uint8_t { bottom = 0, top = 1 };

constexpr Layer toggle(Layer l) noexcept { return l == Layer::bottom ? Layer::top : Layer::bottom; }
std::string_view to_string(Layer l) noexcept;

struct GroupElement {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Layer layer = Layer::bottom;

  bool operator==(const GroupElement&) const = default;

  /// Orders by (layer, x, y); bottom before top.
  friend auto operator<=>(const GroupElement& g, const GroupElement& h) {
    if (auto c = g.layer <=> h.layer; c != 0) return c;
    if (auto c = g.x <=> h.x; c != 0) return c;
    return g.y <=> h.y;
  }

  /// "(x,y,top)" / "(x,y,bottom)".
  std::string to_string() const;
};

constexpr GroupElement identity() noexcept { return {}; }

GroupElement parse_element(std::string_view text);

constexpr GroupElement multiply(const GroupElement& g, const GroupElement& h) noexcept {
  if (g.layer == Layer::bottom) return {g.x + h.x, g.y + h.y, h.layer};
  return {g.x + h.y, g.y + h.x, toggle(h.layer)};
}

constexpr GroupElement inverse(const GroupElement& g) noexcept {
  if (g.layer == Layer::bottom) return {-g.x, -g.y, Layer::bottom};
  return {-g.y, -g.x, Layer::top};
}

constexpr GroupElement letter_element(Letter l) noexcept {
  switch (l) {
    case Letter::a: return {1, 0, Layer::bottom};
    case Letter::a_inv: return {-1, 0, Layer::bottom};
    case Letter::t: return {0, 0, Layer::top};
  }
  return {};
}

/// Right multiplication by one generator: the neighbor across an edge.
constexpr GroupElement step(const GroupElement& g, Letter l) noexcept {
  return multiply(g, letter_element(l));
}

GroupElement evaluate(const Word& w) noexcept;

/// Word-metric length of g over {a, a^-1, t}.
constexpr std::int64_t geodesic_length(const GroupElement& g) noexcept {
  const std::int64_t ax = g.x < 0 ? -g.x : g.x;
  const std::int64_t ay = g.y < 0 ? -g.y : g.y;
  if (g.layer == Layer::top) return ax + ay + 1;
  if (g.y == 0) return ax;
  return ax + ay + 2;
}

/// a^x, a^x t a^y or a^x t a^y t depending on the shape of g.
Word canonical_geodesic(const GroupElement& g);

/// The group oracle consumed by the Cayley graph search. Any type with the
/// same static members can be plugged into cayley::ball and friends.
struct CannonGroup {
  using element_type = GroupElement;
  static constexpr element_type identity() noexcept { return cannon::identity(); }
  static constexpr element_type multiply(const element_type& g, const element_type& h) noexcept {
    return cannon::multiply(g, h);
  }
  static constexpr element_type inverse(const element_type& g) noexcept { return cannon::inverse(g); }
  static constexpr const std::array<Letter, 3>& generators() noexcept { return kLetters; }
  static constexpr element_type generator(Letter l) noexcept { return letter_element(l); }
};

/// Calls fn(word) for every word of length <= max_len, shortest first and
/// lexicographically within a length.
void for_each_word(std::size_t max_len, const std::function<void(const Word&)>& fn);

/// Number of words of length <= max_len over the three letters.
std::uint64_t word_count_up_to(std::size_t max_len) noexcept;

}  // namespace cannon

template <>
struct std::hash<cannon::GroupElement> {
  std::size_t operator()(const cannon::GroupElement& g) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(g.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(g.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(g.layer) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
