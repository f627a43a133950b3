#include "cannon/checks.hpp"

#include "cannon/cayley.hpp"
#include "cannon/geodesics.hpp"

namespace cannon {

namespace {

// Splits a word into its a-powers between t letters: a^e0 t a^e1 t ...
// Returns false if some a-power mixes a and a^-1.
bool a_exponents(const Word& w, std::vector<std::int64_t>& exps) {
  exps.assign(1, 0);
  std::vector<int> sign(1, 0);
  for (Letter l : w) {
    if (l == Letter::t) {
      exps.push_back(0);
      sign.push_back(0);
      continue;
    }
    const int s = l == Letter::a ? 1 : -1;
    if (sign.back() != 0 && sign.back() != s) return false;
    sign.back() = s;
    exps.back() += s;
  }
  return true;
}

}  // namespace

CheckReport check_geodesic_acceptor(const Dfa& acceptor, std::size_t max_len) {
  CheckReport report{"geodesic acceptor vs BFS", 0, {}};
  const DistanceMap oracle = ball(static_cast<std::int64_t>(max_len));
  for_each_word(max_len, [&](const Word& w) {
    ++report.cases;
    const auto d = oracle.distance(evaluate(w));
    const bool geodesic = d && *d == static_cast<std::int64_t>(w.size());
    const bool accepted = accepts(acceptor, w);
    if (geodesic != accepted) {
      report.mismatches.push_back("'" + w.to_string() + "': acceptor " +
                                  (accepted ? "accepts" : "rejects") + ", BFS says " +
                                  (geodesic ? "geodesic" : "not geodesic"));
    }
  });
  return report;
}

CheckReport check_closed_form_lengths(std::int64_t radius) {
  CheckReport report{"closed-form length vs BFS", 0, {}};
  for (const auto& [g, d] : ball(radius).sorted()) {
    ++report.cases;
    if (geodesic_length(g) != d) {
      report.mismatches.push_back(g.to_string() + ": closed form " +
                                  std::to_string(geodesic_length(g)) + ", BFS " + std::to_string(d));
    }
  }
  return report;
}

CheckReport check_layer_parity(std::size_t max_len) {
  CheckReport report{"layer parity", 0, {}};
  for_each_word(max_len, [&](const Word& w) {
    ++report.cases;
    const bool top = evaluate(w).layer == Layer::top;
    if (top != (w.count(Letter::t) % 2 == 1)) {
      report.mismatches.push_back("'" + w.to_string() + "' ends at " + evaluate(w).to_string());
    }
  });
  return report;
}

CheckReport check_three_t_words(std::int64_t range) {
  CheckReport report{"t a^n t a^m t not geodesic", 0, {}};
  for (std::int64_t n = -range; n <= range; ++n) {
    for (std::int64_t m = -range; m <= range; ++m) {
      ++report.cases;
      const Word w = Word{Letter::t}.concat(a_power(n)).append(Letter::t).concat(a_power(m)).append(Letter::t);
      if (is_geodesic(w)) report.mismatches.push_back("'" + w.to_string() + "' is geodesic");
    }
  }
  return report;
}

CheckReport check_top_uniqueness(std::int64_t range) {
  CheckReport report{"unique geodesic to top vertices", 0, {}};
  for (std::int64_t x = -range; x <= range; ++x) {
    for (std::int64_t y = -range; y <= range; ++y) {
      if (y == 0) continue;
      ++report.cases;
      const GroupElement g{x, y, Layer::top};
      const GeodesicFamily f = geodesics_to(g);
      if (f.words.size() != 1 || *f.words.begin() != canonical_geodesic(g)) {
        report.mismatches.push_back(g.to_string() + ": " + std::to_string(f.words.size()) +
                                    " geodesics");
      }
    }
  }
  return report;
}

CheckReport check_bottom_family(std::int64_t range) {
  CheckReport report{"geodesic family of bottom vertices", 0, {}};
  for (std::int64_t x = -range; x <= range; ++x) {
    for (std::int64_t y = -range; y <= range; ++y) {
      if (y == 0) continue;
      ++report.cases;
      const GroupElement g{x, y, Layer::bottom};
      const GeodesicFamily f = geodesics_to(g);
      const auto expected = static_cast<std::size_t>((x < 0 ? -x : x) + 1);
      if (f.words.size() != expected) {
        report.mismatches.push_back(g.to_string() + ": " + std::to_string(f.words.size()) +
                                    " geodesics, expected " + std::to_string(expected));
      }
      for (const Word& w : f.words) {
        std::vector<std::int64_t> e;
        const bool shaped = a_exponents(w, e) && e.size() == 3 && e[1] == y && e[0] + e[2] == x &&
                            e[0] * e[2] >= 0;
        if (!shaped) report.mismatches.push_back(g.to_string() + ": unexpected geodesic '" + w.to_string() + "'");
      }
    }
  }
  return report;
}

}  // namespace cannon
