#include "cannon/group.hpp"

#include <cctype>
#include <charconv>

namespace cannon {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

char to_char(Letter l) noexcept {
  switch (l) {
    case Letter::a: return 'a';
    case Letter::a_inv: return 'A';
    case Letter::t: return 't';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::a_inv;
    case 't':
    case 'T': return Letter::t;
    default: throw std::invalid_argument(std::string("not a letter: '") + c + "'");
  }
}

Word Word::prefix(std::size_t n) const {
  if (n >= letters_.size()) return *this;
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::append(Letter l) const {
  std::vector<Letter> out = letters_;
  out.push_back(l);
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.begin(), other.end());
  return Word(std::move(out));
}

std::size_t Word::count(Letter l) const noexcept {
  std::size_t n = 0;
  for (Letter x : letters_) n += (x == l);
  return n;
}

std::string Word::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    const Letter l = letters_[i];
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == l) ++j;
    const std::size_t run = j - i;
    if (l == Letter::t) {
      out.append(run, 't');
    } else if (run == 1) {
      out += to_char(l);
    } else {
      out += 'a';
      out += '^';
      if (l == Letter::a_inv) out += '-';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t token_start = pos;
    const char base = text[pos];
    if (base != 'a' && base != 'A' && base != 't' && base != 'T') {
      throw ParseError(std::string("unexpected character '") + base + "'", pos);
    }
    ++pos;

    std::int64_t power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      const std::size_t digits_start = pos;
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      if (pos == digits_start) throw ParseError("exponent must be an integer", digits_start);
      std::int64_t magnitude = 0;
      auto [ptr, ec] = std::from_chars(text.data() + digits_start, text.data() + pos, magnitude);
      if (ec != std::errc{} || magnitude > kMaxExponent) {
        throw ParseError("exponent out of range", digits_start);
      }
      power = negative ? -magnitude : magnitude;
    }

    if (base == 't' || base == 'T') {
      if (power != 1 && power != -1) {
        throw ParseError("t only admits the exponents 1 and -1", token_start);
      }
      out.push_back(Letter::t);
      continue;
    }
    if (base == 'A') power = -power;
    const Letter l = power >= 0 ? Letter::a : Letter::a_inv;
    out.insert(out.end(), static_cast<std::size_t>(power >= 0 ? power : -power), l);
  }
  return Word(std::move(out));
}

Word a_power(std::int64_t n) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(n >= 0 ? n : -n),
                                  n >= 0 ? Letter::a : Letter::a_inv));
}

std::string_view to_string(Layer l) noexcept { return l == Layer::top ? "top" : "bottom"; }

std::string GroupElement::to_string() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::string(cannon::to_string(layer)) + ")";
}

GroupElement parse_element(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!is_space(c)) compact += c;
  }
  auto fail = [&]() -> GroupElement {
    throw std::invalid_argument("malformed element '" + std::string(text) +
                                "', expected (x,y,top) or (x,y,bottom)");
  };
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') return fail();
  const std::string body = compact.substr(1, compact.size() - 2);
  const auto c1 = body.find(',');
  const auto c2 = c1 == std::string::npos ? std::string::npos : body.find(',', c1 + 1);
  if (c2 == std::string::npos) return fail();

  GroupElement g;
  auto parse_int = [&](std::string_view s, std::int64_t& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail();
  };
  parse_int(std::string_view(body).substr(0, c1), g.x);
  parse_int(std::string_view(body).substr(c1 + 1, c2 - c1 - 1), g.y);
  const std::string layer = body.substr(c2 + 1);
  if (layer == "top") {
    g.layer = Layer::top;
  } else if (layer == "bottom") {
    g.layer = Layer::bottom;
  } else {
    return fail();
  }
  return g;
}

GroupElement evaluate(const Word& w) noexcept {
  GroupElement g = identity();
  for (Letter l : w) g = step(g, l);
  return g;
}

Word canonical_geodesic(const GroupElement& g) {
  if (g.layer == Layer::top) {
    return a_power(g.x).append(Letter::t).concat(a_power(g.y));
  }
  if (g.y == 0) return a_power(g.x);
  return a_power(g.x).append(Letter::t).concat(a_power(g.y)).append(Letter::t);
}

void for_each_word(std::size_t max_len, const std::function<void(const Word&)>& fn) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    std::vector<Letter> letters(len, Letter::a);
    while (true) {
      fn(Word(letters));
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++digits[i] < kLetters.size()) {
          letters[i] = kLetters[digits[i]];
          break;
        }
        digits[i] = 0;
        letters[i] = kLetters[0];
        if (i == 0) {
          i = len + 1;
          break;
        }
      }
      if (len == 0 || i == len + 1) break;
    }
  }
}

std::uint64_t word_count_up_to(std::size_t max_len) noexcept {
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += layer;
    layer *= 3;
  }
  return total;
}

}  // namespace cannon
