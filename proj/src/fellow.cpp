#include "cannon/fellow.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_set>

#include "cannon/cayley.hpp"

namespace cannon {

GroupElement path_point(const Word& w, std::size_t t) { return evaluate(w.prefix(t)); }

std::vector<GroupElement> path_points(const Word& w) {
  std::vector<GroupElement> out{identity()};
  out.reserve(w.size() + 1);
  for (Letter l : w) out.push_back(step(out.back(), l));
  return out;
}

std::int64_t sync_constant(const Word& u, const Word& v) {
  const auto pu = path_points(u);
  const auto pv = path_points(v);
  const std::size_t horizon = std::max(u.size(), v.size());
  std::int64_t k = 0;
  for (std::size_t t = 0; t <= horizon; ++t) {
    k = std::max(k, distance(pu[std::min(t, u.size())], pv[std::min(t, v.size())]));
  }
  return k;
}

std::int64_t async_constant(const Word& u, const Word& v) {
  const auto pu = path_points(u);
  const auto pv = path_points(v);
  const std::size_t cols = pv.size();
  std::vector<std::int64_t> best(pu.size() * cols);
  for (std::size_t i = 0; i < pu.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t here = distance(pu[i], pv[j]);
      if (i == 0 && j == 0) {
        best[0] = here;
        continue;
      }
      std::int64_t from = INT64_MAX;
      if (i > 0) from = std::min(from, best[(i - 1) * cols + j]);
      if (j > 0) from = std::min(from, best[i * cols + j - 1]);
      if (i > 0 && j > 0) from = std::min(from, best[(i - 1) * cols + j - 1]);
      best[i * cols + j] = std::max(here, from);
    }
  }
  return best.back();
}

namespace {

struct SweepState {
  GroupElement at;
  bool moving = true;  // a halted path has ended and stays at `at`
  bool operator==(const SweepState&) const = default;
};

struct SweepStateHash {
  std::size_t operator()(const SweepState& s) const noexcept {
    return std::hash<GroupElement>{}(s.at) * 2 + (s.moving ? 1 : 0);
  }
};

using StateSet = std::unordered_set<SweepState, SweepStateHash>;

// Layered reachable sets of a shorter path v shadowing w within distance k.
// Moving states at time t have spent exactly t letters.
class Sweep {
 public:
  Sweep(const Word& w, std::size_t len_bound, std::int64_t k)
      : track_(path_points(w)), len_bound_(len_bound), k_(k) {
    if (len_bound >= w.size()) {
      throw std::invalid_argument("length bound " + std::to_string(len_bound) +
                                  " must be below the word length " + std::to_string(w.size()));
    }
    if (k < 0) throw std::invalid_argument("fellow traveler constant must be non-negative");
    layers_.emplace_back();
    layers_[0].insert({identity(), true});
    for (std::size_t t = 0; t + 1 < track_.size(); ++t) {
      StateSet next;
      for (const SweepState& s : layers_[t]) {
        for (const SweepState& n : successors(s, t)) next.insert(n);
      }
      layers_.push_back(std::move(next));
    }
  }

  SweepState goal() const { return {track_.back(), false}; }
  bool feasible() const { return layers_.back().contains(goal()); }

  std::optional<Word> lexicographically_least_witness() const {
    if (!feasible()) return std::nullopt;
    // viable[t]: states at time t from which the goal is reachable.
    std::vector<StateSet> viable(layers_.size());
    viable.back().insert(goal());
    for (std::size_t t = layers_.size() - 1; t-- > 0;) {
      for (const SweepState& s : layers_[t]) {
        for (const SweepState& n : successors(s, t)) {
          if (viable[t + 1].contains(n)) {
            viable[t].insert(s);
            break;
          }
        }
      }
    }
    std::vector<Letter> out;
    SweepState cur{identity(), true};
    for (std::size_t t = 0; t + 1 < layers_.size() && cur.moving; ++t) {
      // Ending the word here sorts before any extension of it.
      if (viable[t + 1].contains({cur.at, false})) {
        cur.moving = false;
        break;
      }
      for (Letter l : kLetters) {
        const SweepState n{step(cur.at, l), true};
        if (out.size() < len_bound_ && viable[t + 1].contains(n)) {
          out.push_back(l);
          cur = n;
          break;
        }
      }
    }
    return Word(std::move(out));
  }

 private:
  bool near(const GroupElement& g, std::size_t t) const { return distance(g, track_[t]) <= k_; }

  std::vector<SweepState> successors(const SweepState& s, std::size_t t) const {
    std::vector<SweepState> out;
    if (near(s.at, t + 1)) out.push_back({s.at, false});
    if (s.moving && t < len_bound_) {
      for (Letter l : kLetters) {
        const GroupElement g = step(s.at, l);
        if (near(g, t + 1)) out.push_back({g, true});
      }
    }
    return out;
  }

  std::vector<GroupElement> track_;
  std::size_t len_bound_;
  std::int64_t k_;
  std::vector<StateSet> layers_;
};

}  // namespace

bool fellow_feasible(const Word& w, std::size_t len_bound, std::int64_t k) {
  return Sweep(w, len_bound, k).feasible();
}

std::optional<Word> fellow_witness(const Word& w, std::size_t len_bound, std::int64_t k) {
  return Sweep(w, len_bound, k).lexicographically_least_witness();
}

FellowReport min_fftp_constant(const Word& w) {
  if (w.size() > kMaxFellowWordLength) {
    throw BoundExceeded("word length " + std::to_string(w.size()) + " exceeds " +
                        std::to_string(kMaxFellowWordLength));
  }
  FellowReport report;
  report.word = w;
  report.endpoint = evaluate(w);
  report.word_len = static_cast<std::int64_t>(w.size());
  report.geo_len = geodesic_length(report.endpoint);
  if (report.word_len == report.geo_len) {
    throw DomainError("'" + w.to_string() + "' is geodesic");
  }
  // Any geodesic for the endpoint fellow travels w within 2|w|.
  const std::size_t len_bound = w.size() - 1;
  for (std::int64_t k = 0; k <= 2 * report.word_len; ++k) {
    Sweep sweep(w, len_bound, k);
    if (!sweep.feasible()) continue;
    report.min_k = k;
    report.witness = *sweep.lexicographically_least_witness();
    return report;
  }
  throw std::logic_error("no shorter fellow traveler found for '" + w.to_string() + "'");
}

ScanResult fftp_scan(std::size_t max_len, std::size_t workers) {
  if (max_len > kMaxScanLength) {
    throw BoundExceeded("scan length " + std::to_string(max_len) + " exceeds " +
                        std::to_string(kMaxScanLength));
  }
  std::vector<Word> words;
  for_each_word(max_len, [&](const Word& w) {
    if (!is_geodesic(w)) words.push_back(w);
  });

  std::vector<FellowReport> rows(words.size());
  workers = std::max<std::size_t>(1, workers);
  auto run = [&](std::size_t first) {
    for (std::size_t i = first; i < words.size(); i += workers) rows[i] = min_fftp_constant(words[i]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t wk = 0; wk < workers; ++wk) pool.emplace_back(run, wk);
  }
  std::sort(rows.begin(), rows.end(), [](const FellowReport& a, const FellowReport& b) {
    if (a.word_len != b.word_len) return a.word_len < b.word_len;
    return a.word < b.word;
  });

  ScanResult result;
  result.max_len = max_len;
  for (const FellowReport& r : rows) {
    const auto len = static_cast<std::size_t>(r.word_len);
    if (result.summary.empty() || result.summary.back().len != len) {
      result.summary.push_back({len, 0, 0});
    }
    ++result.summary.back().count_nongeodesic;
    result.summary.back().max_min_k = std::max(result.summary.back().max_min_k, r.min_k);
  }
  result.rows = std::move(rows);
  return result;
}

}  // namespace cannon
