#include <doctest.h>

#include <map>

#include "cannon/checks.hpp"
#include "cannon/geodesics.hpp"
#include "oracles.hpp"

using namespace cannon;

TEST_CASE("is_geodesic") {
  CHECK(is_geodesic(parse_word("ata")));
  CHECK(evaluate(parse_word("ata")) == GroupElement{1, 1, Layer::top});
  CHECK(oracle::bfs_is_geodesic(parse_word("ata")));
  CHECK_FALSE(is_geodesic(parse_word("ta^2ta^3t")));
  CHECK(is_geodesic(Word{}));
}

TEST_CASE("is_geodesic agrees with BFS on every word up to length 9") {
  for_each_word(9, [](const Word& w) { REQUIRE(is_geodesic(w) == oracle::bfs_is_geodesic(w)); });
}

TEST_CASE("geodesics_to") {
  CHECK(geodesics_to(identity()).words == std::set<Word>{Word{}});
  CHECK(geodesics_to({2, 3, Layer::bottom}).words ==
        std::set<Word>{parse_word("ta^3ta^2"), parse_word("ata^3ta"), parse_word("a^2ta^3t")});
  CHECK(geodesics_to({3, 4, Layer::top}).words == std::set<Word>{parse_word("a^3ta^4")});
  CHECK(geodesics_to({-2, -1, Layer::bottom}).words.size() == 3);
  CHECK(geodesics_to({-4, 0, Layer::bottom}).words == std::set<Word>{parse_word("a^-4")});
  CHECK_THROWS_AS(geodesics_to({10, 10, Layer::top}), BoundExceeded);
  CHECK(geodesics_to({10, 10, Layer::top}, 21).words.size() == 1);
}

TEST_CASE("geodesics_to matches a filter of all geodesic words") {
  const auto all = oracle::geodesic_words(8);
  std::map<GroupElement, std::set<Word>> by_target;
  for (const Word& w : all) by_target[evaluate(w)].insert(w);
  for (const auto& [g, words] : by_target) REQUIRE(geodesics_to(g).words == words);
}

TEST_CASE("family sizes") {
  CHECK(check_three_t_words(5).passed());
  CHECK(check_top_uniqueness(4).passed());
  CHECK(check_bottom_family(4).passed());
  CHECK(check_three_t_words(5).cases == 121);
}

TEST_CASE("geodesic_words_up_to") {
  CHECK(geodesic_words_up_to(0) == std::set<Word>{Word{}});
  CHECK(geodesic_words_up_to(1) == std::set<Word>{Word{}, Word{Letter::a}, Word{Letter::a_inv}, Word{Letter::t}});
  const auto eleven = geodesic_words_up_to(11);
  CHECK(eleven.size() == 886);
  CHECK(eleven == oracle::geodesic_words(11));
  CHECK(geodesic_words_up_to(11, 3) == eleven);
  CHECK_THROWS_AS(geodesic_words_up_to(13), BoundExceeded);
}

TEST_CASE("geodesic words are prefix closed") {
  const auto words = geodesic_words_up_to(11);
  for (const Word& w : words) {
    for (std::size_t i = 0; i <= w.size(); ++i) REQUIRE(words.contains(w.prefix(i)));
  }
}

TEST_CASE("shorter_equivalent_words") {
  CHECK(shorter_equivalent_words(parse_word("a^2ta^3")).empty());
  CHECK(shorter_equivalent_words(parse_word("tta")) == std::set<Word>{parse_word("a")});
  CHECK(shorter_equivalent_words(parse_word("ta^2ta^2t")) == std::set<Word>{parse_word("a^2ta^2")});
  CHECK_THROWS_AS(shorter_equivalent_words(a_power(17)), BoundExceeded);
}

TEST_CASE("shorter_equivalent_words matches exhaustive enumeration") {
  for_each_word(7, [](const Word& w) {
    REQUIRE(shorter_equivalent_words(w) == oracle::shorter_equivalents(w));
  });
}
