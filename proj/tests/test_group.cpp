#include <doctest.h>

#include "cannon/group.hpp"
#include "oracles.hpp"

using namespace cannon;

namespace {
constexpr Letter a = Letter::a;
constexpr Letter A = Letter::a_inv;
constexpr Letter t = Letter::t;
}  // namespace

TEST_CASE("parse_word expands powers") {
  CHECK(parse_word("a^3 t a^4") == Word{a, a, a, t, a, a, a, a});
  CHECK(parse_word("").empty());
  CHECK(parse_word("a^-2 t") == Word{A, A, t});
  CHECK(parse_word("A^2") == Word{A, A});
  CHECK(parse_word("A^-1") == Word{a});
  CHECK(parse_word("a^0") == Word{});
  CHECK(parse_word("T t^-1 t^1") == Word{t, t, t});
  CHECK(parse_word("  a\tA  ") == Word{a, A});
}

TEST_CASE("parse_word rejects malformed input with a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no ParseError for " << text);
    return 0;
  };
  CHECK(position_of("ab") == 1);
  CHECK(position_of("a^") == 2);
  CHECK(position_of("a^x") == 2);
  CHECK(position_of("t^2") == 0);
  CHECK(position_of("aa t^0") == 3);
  CHECK(position_of("a ^3") == 2);
  CHECK(position_of("a^99999999999999999999") == 2);
}

TEST_CASE("word rendering round-trips through the parser") {
  for (const Word& w : oracle::all_words(6)) {
    CHECK(parse_word(w.to_string()) == w);
  }
  CHECK(parse_word("a^3ta^4").to_string() == "a^3ta^4");
  CHECK(Word{A, A, t, t}.to_string() == "a^-2tt");
}

TEST_CASE("evaluate on the worked coordinates") {
  CHECK(evaluate(parse_word("a^3ta^4")) == GroupElement{3, 4, Layer::top});
  CHECK(evaluate(parse_word("ta^3ta^4")) == GroupElement{4, 3, Layer::bottom});
  CHECK(evaluate(Word{}) == identity());
  CHECK(evaluate(parse_word("a^3ta^4t")) == GroupElement{3, 4, Layer::bottom});
}

TEST_CASE("multiply examples") {
  const GroupElement h{5, -2, Layer::top};
  CHECK(multiply(identity(), h) == h);
  CHECK(multiply({0, 0, Layer::top}, {0, 0, Layer::top}) == identity());
  CHECK(multiply({0, 0, Layer::top}, {1, 0, Layer::bottom}) == GroupElement{0, 1, Layer::top});
  CHECK(multiply({0, 0, Layer::top}, {1, 0, Layer::bottom}) == evaluate(parse_word("ta")));
}

TEST_CASE("evaluate is a homomorphism on all word pairs up to length 5") {
  const auto words = oracle::all_words(5);
  std::size_t checked = 0;
  for (const Word& u : words) {
    const GroupElement gu = evaluate(u);
    for (const Word& v : words) {
      if (u.size() + v.size() > 5) continue;
      REQUIRE(evaluate(u.concat(v)) == multiply(gu, evaluate(v)));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("multiply is associative on a box") {
  std::vector<GroupElement> box;
  for (Layer layer : {Layer::bottom, Layer::top}) {
    for (std::int64_t x = -2; x <= 2; ++x) {
      for (std::int64_t y = -2; y <= 2; ++y) box.push_back({x, y, layer});
    }
  }
  for (const auto& f : box) {
    for (const auto& g : box) {
      for (const auto& h : box) REQUIRE(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(identity()) == identity());
  CHECK(inverse({3, 4, Layer::top}) == GroupElement{-4, -3, Layer::top});
  CHECK(inverse({2, -3, Layer::bottom}) == GroupElement{-2, 3, Layer::bottom});
  for (Layer layer : {Layer::bottom, Layer::top}) {
    for (std::int64_t x = -10; x <= 10; ++x) {
      for (std::int64_t y = -10; y <= 10; ++y) {
        const GroupElement g{x, y, layer};
        REQUIRE(multiply(g, inverse(g)) == identity());
        REQUIRE(multiply(inverse(g), g) == identity());
      }
    }
  }
}

TEST_CASE("letters") {
  CHECK(inverse(Letter::a) == Letter::a_inv);
  CHECK(inverse(Letter::a_inv) == Letter::a);
  CHECK(inverse(Letter::t) == Letter::t);
  for (Letter l : kLetters) CHECK(step(step(identity(), l), inverse(l)) == identity());
  CHECK_THROWS_AS(letter_from_char('b'), std::invalid_argument);
}

TEST_CASE("geodesic_length examples against BFS") {
  CHECK(geodesic_length(identity()) == 0);
  CHECK(geodesic_length({3, 4, Layer::top}) == 8);
  CHECK(geodesic_length({2, 3, Layer::bottom}) == 7);
  CHECK(geodesic_length({5, 0, Layer::bottom}) == 5);
  for (const GroupElement& g :
       {GroupElement{3, 4, Layer::top}, GroupElement{2, 3, Layer::bottom}, GroupElement{5, 0, Layer::bottom}}) {
    CHECK(geodesic_length(g) == oracle::bfs_length(g));
  }
}

TEST_CASE("closed-form length equals BFS distance on ball(12)") {
  for (const auto& [g, d] : ball(12).entries()) REQUIRE(geodesic_length(g) == d);
}

TEST_CASE("canonical_geodesic") {
  CHECK(canonical_geodesic(identity()).empty());
  CHECK(canonical_geodesic({3, 4, Layer::top}) == parse_word("a^3ta^4"));
  CHECK(canonical_geodesic({2, 3, Layer::bottom}) == parse_word("a^2ta^3t"));
  CHECK(canonical_geodesic({-2, 0, Layer::bottom}) == parse_word("AA"));
  for (const auto& [g, d] : ball(10).entries()) {
    const Word w = canonical_geodesic(g);
    REQUIRE(evaluate(w) == g);
    REQUIRE(static_cast<std::int64_t>(w.size()) == d);
  }
}

TEST_CASE("layer parity on all words up to length 11") {
  for_each_word(11, [](const Word& w) {
    const bool top = evaluate(w).layer == Layer::top;
    if (top != (w.count(Letter::t) % 2 == 1)) FAIL("parity broken for " << w.to_string());
  });
}

TEST_CASE("for_each_word order and count") {
  std::vector<Word> seen;
  for_each_word(2, [&](const Word& w) { seen.push_back(w); });
  REQUIRE(seen.size() == 13);
  CHECK(seen[0].empty());
  CHECK(seen[1] == Word{a});
  CHECK(seen[3] == Word{t});
  CHECK(seen[4] == Word{a, a});
  CHECK(seen.back() == Word{t, t});
  CHECK(std::is_sorted(seen.begin() + 4, seen.end()));
  CHECK(word_count_up_to(11) == 265720);
}

TEST_CASE("element text form") {
  CHECK(GroupElement{3, -4, Layer::top}.to_string() == "(3,-4,top)");
  CHECK(parse_element("(3,-4,top)") == GroupElement{3, -4, Layer::top});
  CHECK(parse_element(" ( 0 , 2 , bottom ) ") == GroupElement{0, 2, Layer::bottom});
  CHECK_THROWS_AS(parse_element("(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("(1,2,middle)"), std::invalid_argument);
}
