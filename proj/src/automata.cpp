#include "cannon/automata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

namespace cannon {

using State = Dfa::State;

namespace {

std::vector<Letter> normalized_alphabet(std::vector<Letter> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
    throw AlphabetError("duplicate letter in alphabet");
  }
  return alphabet;
}

void require_same_alphabet(const Dfa& lhs, const Dfa& rhs) {
  if (lhs.alphabet() != rhs.alphabet()) throw AlphabetError("automata have different alphabets");
}

// Breadth-first construction from an arbitrary hashable-by-map key type.
// Ids are assigned in discovery order, the start key gets 0.
template <class Key>
Dfa explore(const std::vector<Letter>& alphabet, const Key& start,
            const std::function<Key(const Key&, Letter)>& next,
            const std::function<bool(const Key&)>& accepting) {
  std::map<Key, State> id;
  std::vector<Key> keys;
  std::vector<State> table;
  auto intern = [&](const Key& k) {
    auto [it, inserted] = id.emplace(k, static_cast<State>(keys.size()));
    if (inserted) keys.push_back(k);
    return it->second;
  };
  intern(start);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (Letter l : alphabet) {
      const Key k = next(keys[i], l);
      const State s = intern(k);
      table.push_back(s);
    }
  }
  std::vector<bool> acc;
  acc.reserve(keys.size());
  for (const Key& k : keys) acc.push_back(accepting(k));
  return Dfa(alphabet, std::move(table), std::move(acc), 0);
}

// Reverse of a Dfa, as a nondeterministic automaton.
struct Nfa {
  std::vector<Letter> alphabet;
  std::vector<std::vector<std::vector<State>>> delta;  // delta[s][column]
  std::vector<State> starts;
  std::vector<bool> accepting;
};

Nfa reverse(const Dfa& d) {
  Nfa n;
  n.alphabet = d.alphabet();
  n.delta.assign(d.num_states(), std::vector<std::vector<State>>(n.alphabet.size()));
  for (State s = 0; s < d.num_states(); ++s) {
    for (std::size_t c = 0; c < n.alphabet.size(); ++c) {
      n.delta[d.next(s, n.alphabet[c])][c].push_back(s);
    }
    if (d.is_accepting(s)) n.starts.push_back(s);
  }
  n.accepting.assign(d.num_states(), false);
  n.accepting[d.start()] = true;
  return n;
}

Dfa determinize(const Nfa& n) {
  using Subset = std::vector<State>;
  Subset start = n.starts;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());

  std::map<Subset, State> id;
  std::vector<Subset> subsets;
  std::vector<State> table;
  auto intern = [&](Subset s) {
    auto [it, inserted] = id.emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };
  intern(start);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t c = 0; c < n.alphabet.size(); ++c) {
      Subset out;
      for (State q : subsets[i]) {
        const auto& targets = n.delta[q][c];
        out.insert(out.end(), targets.begin(), targets.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      table.push_back(intern(std::move(out)));
    }
  }
  std::vector<bool> acc;
  for (const Subset& s : subsets) {
    acc.push_back(std::any_of(s.begin(), s.end(), [&](State q) { return n.accepting[q]; }));
  }
  return Dfa(n.alphabet, std::move(table), std::move(acc), 0);
}

std::vector<bool> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.num_states(), false);
  std::deque<State> queue{d.start()};
  seen[d.start()] = true;
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (Letter l : d.alphabet()) {
      const State t = d.next(s, l);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

// States from which some accepting state is reachable.
std::vector<bool> live_states(const Dfa& d) {
  std::vector<std::vector<State>> preds(d.num_states());
  for (State s = 0; s < d.num_states(); ++s) {
    for (Letter l : d.alphabet()) preds[d.next(s, l)].push_back(s);
  }
  std::vector<bool> live(d.num_states(), false);
  std::deque<State> queue;
  for (State s = 0; s < d.num_states(); ++s) {
    if (d.is_accepting(s)) {
      live[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (State p : preds[s]) {
      if (!live[p]) {
        live[p] = true;
        queue.push_back(p);
      }
    }
  }
  return live;
}

}  // namespace

Dfa::Dfa(std::vector<Letter> alphabet, std::vector<State> transitions, std::vector<bool> accepting,
         State start)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      accepting_(std::move(accepting)),
      start_(start) {
  if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
      std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
    throw AlphabetError("alphabet must list distinct letters in the order a, A, t");
  }
  if (accepting_.empty()) throw std::invalid_argument("a Dfa needs at least one state");
  if (start_ >= accepting_.size()) throw std::invalid_argument("start state out of range");
  if (transitions_.size() != accepting_.size() * alphabet_.size()) {
    throw std::invalid_argument("transition table is not total");
  }
  for (State t : transitions_) {
    if (t >= accepting_.size()) throw std::invalid_argument("transition target out of range");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) column_[index_of(alphabet_[i])] = static_cast<int>(i);
}

State Dfa::next(State s, Letter l) const {
  const int c = column_[index_of(l)];
  if (c < 0) throw AlphabetError(std::string("letter '") + to_char(l) + "' not in alphabet");
  return transitions_.at(s * alphabet_.size() + static_cast<std::size_t>(c));
}

bool accepts(const Dfa& d, const Word& w) {
  State s = d.start();
  for (Letter l : w) s = d.next(s, l);
  return d.is_accepting(s);
}

namespace {

enum class Sign : std::uint8_t { zero, pos, neg };

// Phase 0: reading a^x1. Phase 1: after the first t, reading a^y.
// Phase 2: after the second t, reading a^x2. Phase 3: sink.
struct AcceptorKey {
  std::uint8_t phase = 0;
  Sign first = Sign::zero;
  Sign middle = Sign::zero;
  Sign last = Sign::zero;
  auto operator<=>(const AcceptorKey&) const = default;
};

// Extends a power a^k whose sign so far is `s` by one a (+1) or a^-1 (-1);
// false when the run would mix signs.
bool extend_run(Sign& s, int dir) {
  const Sign want = dir > 0 ? Sign::pos : Sign::neg;
  if (s != Sign::zero && s != want) return false;
  s = want;
  return true;
}

}  // namespace

Dfa build_geodesic_acceptor() {
  const AcceptorKey sink{3, Sign::zero, Sign::zero, Sign::zero};
  auto next = [sink](const AcceptorKey& k, Letter l) -> AcceptorKey {
    if (k.phase == 3) return sink;
    AcceptorKey out = k;
    if (l == Letter::t) {
      if (k.phase == 0) {
        out.phase = 1;
        return out;
      }
      if (k.phase == 1 && k.middle != Sign::zero) {
        out.phase = 2;
        return out;
      }
      return sink;
    }
    const int dir = l == Letter::a ? 1 : -1;
    switch (k.phase) {
      case 0: return extend_run(out.first, dir) ? out : sink;
      case 1: return extend_run(out.middle, dir) ? out : sink;
      default: {
        // x1 * x2 >= 0: the last run may not oppose a nonzero first run.
        if (!extend_run(out.last, dir)) return sink;
        if (k.first != Sign::zero && k.first != out.last) return sink;
        return out;
      }
    }
  };
  return explore<AcceptorKey>(full_alphabet(), AcceptorKey{}, next,
                              [](const AcceptorKey& k) { return k.phase != 3; });
}

std::set<Word> enumerate_language(const Dfa& d, std::size_t max_len) {
  const std::vector<bool> live = live_states(d);
  std::set<Word> out;
  if (!live[d.start()]) return out;
  std::vector<Letter> prefix;
  std::function<void(State)> walk = [&](State s) {
    if (d.is_accepting(s)) out.insert(Word(prefix));
    if (prefix.size() == max_len) return;
    for (Letter l : d.alphabet()) {
      const State t = d.next(s, l);
      if (!live[t]) continue;
      prefix.push_back(l);
      walk(t);
      prefix.pop_back();
    }
  };
  walk(d.start());
  return out;
}

Dfa product(const Dfa& lhs, const Dfa& rhs, ProductMode mode) {
  require_same_alphabet(lhs, rhs);
  using Pair = std::pair<State, State>;
  return explore<Pair>(
      lhs.alphabet(), Pair{lhs.start(), rhs.start()},
      [&](const Pair& p, Letter l) { return Pair{lhs.next(p.first, l), rhs.next(p.second, l)}; },
      [&](const Pair& p) {
        const bool a = lhs.is_accepting(p.first);
        const bool b = rhs.is_accepting(p.second);
        switch (mode) {
          case ProductMode::intersection: return a && b;
          case ProductMode::union_: return a || b;
          case ProductMode::difference: return a && !b;
        }
        return false;
      });
}

Dfa complement(const Dfa& d) {
  std::vector<bool> acc = d.accepting();
  acc.flip();
  std::vector<State> table;
  table.reserve(d.num_states() * d.alphabet().size());
  for (State s = 0; s < d.num_states(); ++s) {
    for (Letter l : d.alphabet()) table.push_back(d.next(s, l));
  }
  return Dfa(d.alphabet(), std::move(table), std::move(acc), d.start());
}

Dfa canonical(const Dfa& d) {
  std::vector<std::int64_t> renumber(d.num_states(), -1);
  std::vector<State> order{d.start()};
  renumber[d.start()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter l : d.alphabet()) {
      const State t = d.next(order[i], l);
      if (renumber[t] < 0) {
        renumber[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> table;
  std::vector<bool> acc;
  for (State s : order) {
    for (Letter l : d.alphabet()) table.push_back(static_cast<State>(renumber[d.next(s, l)]));
    acc.push_back(d.is_accepting(s));
  }
  return Dfa(d.alphabet(), std::move(table), std::move(acc), 0);
}

bool isomorphic(const Dfa& lhs, const Dfa& rhs) { return canonical(lhs) == canonical(rhs); }

Dfa minimize(const Dfa& input) {
  const Dfa d = canonical(input);
  const std::size_t n = d.num_states();
  const std::size_t k = d.alphabet().size();

  // preimage[c][q] = states p with next(p, letter c) == q
  std::vector<std::vector<std::vector<State>>> preimage(k, std::vector<std::vector<State>>(n));
  for (State p = 0; p < n; ++p) {
    for (std::size_t c = 0; c < k; ++c) preimage[c][d.next(p, d.alphabet()[c])].push_back(p);
  }

  std::vector<std::size_t> block_of(n);
  std::vector<std::vector<State>> blocks;
  {
    std::vector<State> acc, rej;
    for (State s = 0; s < n; ++s) (d.is_accepting(s) ? acc : rej).push_back(s);
    for (auto* b : {&acc, &rej}) {
      if (b->empty()) continue;
      for (State s : *b) block_of[s] = blocks.size();
      blocks.push_back(std::move(*b));
    }
  }

  std::vector<std::vector<bool>> queued;  // queued[block][c]
  std::deque<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    queued.emplace_back(k, true);
    for (std::size_t c = 0; c < k; ++c) work.emplace_back(b, c);
  }

  std::vector<bool> marked(n, false);
  while (!work.empty()) {
    const auto [splitter, c] = work.front();
    work.pop_front();
    queued[splitter][c] = false;

    std::vector<State> hit;
    for (State q : blocks[splitter]) {
      for (State p : preimage[c][q]) {
        if (!marked[p]) {
          marked[p] = true;
          hit.push_back(p);
        }
      }
    }
    std::vector<std::size_t> touched;
    for (State p : hit) {
      if (std::find(touched.begin(), touched.end(), block_of[p]) == touched.end()) {
        touched.push_back(block_of[p]);
      }
    }
    for (std::size_t b : touched) {
      std::vector<State> in, out;
      for (State s : blocks[b]) (marked[s] ? in : out).push_back(s);
      if (out.empty()) continue;
      const std::size_t fresh = blocks.size();
      blocks[b] = std::move(in);
      for (State s : out) block_of[s] = fresh;
      blocks.push_back(std::move(out));
      queued.emplace_back(k, false);
      for (std::size_t letter = 0; letter < k; ++letter) {
        if (queued[b][letter]) {
          queued[fresh][letter] = true;
          work.emplace_back(fresh, letter);
        } else {
          const std::size_t smaller = blocks[b].size() <= blocks[fresh].size() ? b : fresh;
          queued[smaller][letter] = true;
          work.emplace_back(smaller, letter);
        }
      }
    }
    for (State p : hit) marked[p] = false;
  }

  std::vector<State> table;
  std::vector<bool> acc;
  for (const auto& b : blocks) {
    const State rep = b.front();
    for (Letter l : d.alphabet()) table.push_back(static_cast<State>(block_of[d.next(rep, l)]));
    acc.push_back(d.is_accepting(rep));
  }
  return canonical(Dfa(d.alphabet(), std::move(table), std::move(acc),
                       static_cast<State>(block_of[d.start()])));
}

Dfa minimize_brzozowski(const Dfa& d) {
  return canonical(determinize(reverse(determinize(reverse(d)))));
}

bool is_empty(const Dfa& d) {
  const std::vector<bool> seen = reachable_states(d);
  for (State s = 0; s < d.num_states(); ++s) {
    if (seen[s] && d.is_accepting(s)) return false;
  }
  return true;
}

bool equivalent(const Dfa& lhs, const Dfa& rhs) {
  return is_empty(product(lhs, rhs, ProductMode::difference)) &&
         is_empty(product(rhs, lhs, ProductMode::difference));
}

std::string to_text(const Dfa& input) {
  const Dfa d = canonical(input);
  std::ostringstream out;
  out << "alphabet";
  for (Letter l : d.alphabet()) out << ' ' << to_char(l);
  out << "\nstates " << d.num_states() << "\nstart " << d.start() << "\naccepting";
  for (State s = 0; s < d.num_states(); ++s) {
    if (d.is_accepting(s)) out << ' ' << s;
  }
  out << '\n';
  for (State s = 0; s < d.num_states(); ++s) {
    for (Letter l : d.alphabet()) out << s << ' ' << to_char(l) << ' ' << d.next(s, l) << '\n';
  }
  return out.str();
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<Letter> alphabet;
  std::int64_t states = -1;
  std::int64_t start = -1;
  std::vector<State> accepting;
  std::vector<std::tuple<State, Letter, State>> edges;
  bool seen_alphabet = false;

  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("dfa line " + std::to_string(line_no) + ": " + why);
  };
  auto to_state = [&](const std::string& tok) -> State {
    State v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("bad state id '" + tok + "'");
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "alphabet") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i].size() != 1) fail("bad letter '" + tok[i] + "'");
        alphabet.push_back(letter_from_char(tok[i][0]));
      }
      seen_alphabet = true;
    } else if (tok[0] == "states") {
      if (tok.size() != 2) fail("expected 'states N'");
      states = to_state(tok[1]);
    } else if (tok[0] == "start") {
      if (tok.size() != 2) fail("expected 'start S'");
      start = to_state(tok[1]);
    } else if (tok[0] == "accepting") {
      for (std::size_t i = 1; i < tok.size(); ++i) accepting.push_back(to_state(tok[i]));
    } else {
      if (tok.size() != 3 || tok[1].size() != 1) fail("expected 'state letter state'");
      edges.emplace_back(to_state(tok[0]), letter_from_char(tok[1][0]), to_state(tok[2]));
    }
  }
  if (!seen_alphabet || states <= 0 || start < 0) {
    throw std::invalid_argument("dfa text needs alphabet, states and start headers");
  }

  alphabet = normalized_alphabet(std::move(alphabet));
  const auto n = static_cast<std::size_t>(states);
  std::array<int, 3> column{-1, -1, -1};
  for (std::size_t i = 0; i < alphabet.size(); ++i) column[index_of(alphabet[i])] = static_cast<int>(i);

  constexpr State kUnset = ~State{0};
  std::vector<State> table(n * alphabet.size(), kUnset);
  for (const auto& [from, l, to] : edges) {
    if (from >= n || to >= n) throw std::invalid_argument("dfa transition state out of range");
    if (column[index_of(l)] < 0) throw AlphabetError("dfa transition letter not in alphabet");
    State& slot = table[from * alphabet.size() + static_cast<std::size_t>(column[index_of(l)])];
    if (slot != kUnset && slot != to) throw std::invalid_argument("dfa transition defined twice");
    slot = to;
  }
  if (std::find(table.begin(), table.end(), kUnset) != table.end()) {
    throw std::invalid_argument("dfa transition table is not total");
  }
  std::vector<bool> acc(n, false);
  for (State s : accepting) {
    if (s >= n) throw std::invalid_argument("accepting state out of range");
    acc[s] = true;
  }
  return Dfa(std::move(alphabet), std::move(table), std::move(acc), static_cast<State>(start));
}

Dfa universal_dfa(const std::vector<Letter>& letters) {
  const std::vector<Letter> alphabet = normalized_alphabet(letters);
  return Dfa(alphabet, std::vector<State>(alphabet.size(), 0), {true}, 0);
}

Dfa empty_dfa(const std::vector<Letter>& letters) {
  const std::vector<Letter> alphabet = normalized_alphabet(letters);
  return Dfa(alphabet, std::vector<State>(alphabet.size(), 0), {false}, 0);
}

Dfa length_at_most_dfa(const std::vector<Letter>& letters, std::size_t max_len) {
  const std::vector<Letter> alphabet = normalized_alphabet(letters);
  // State i < max_len + 1 counts letters read; max_len + 1 is the sink.
  const std::size_t n = max_len + 2;
  std::vector<State> table;
  std::vector<bool> acc;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < alphabet.size(); ++c) table.push_back(static_cast<State>(std::min(s + 1, n - 1)));
    acc.push_back(s <= max_len);
  }
  return Dfa(alphabet, std::move(table), std::move(acc), 0);
}

Dfa word_set_dfa(const std::vector<Letter>& letters, const std::set<Word>& words) {
  const std::vector<Letter> alphabet = normalized_alphabet(letters);
  // Trie nodes are word prefixes, plus one sink.
  using Key = std::pair<bool, Word>;  // (is_sink, prefix)
  std::set<Word> prefixes;
  for (const Word& w : words) {
    for (std::size_t i = 0; i <= w.size(); ++i) prefixes.insert(w.prefix(i));
  }
  return explore<Key>(
      alphabet, Key{false, Word{}},
      [&](const Key& k, Letter l) {
        if (k.first) return k;
        Word w = k.second.append(l);
        if (!prefixes.contains(w)) return Key{true, Word{}};
        return Key{false, std::move(w)};
      },
      [&](const Key& k) { return !k.first && words.contains(k.second); });
}

Dfa random_dfa(const std::vector<Letter>& letters, std::size_t num_states, std::mt19937_64& rng) {
  const std::vector<Letter> alphabet = normalized_alphabet(letters);
  std::vector<State> table;
  std::vector<bool> acc;
  for (std::size_t s = 0; s < num_states; ++s) {
    for (std::size_t c = 0; c < alphabet.size(); ++c) table.push_back(static_cast<State>(rng() % num_states));
    acc.push_back((rng() & 1u) != 0);
  }
  return Dfa(alphabet, std::move(table), std::move(acc), 0);
}

Dfa with_accepting(const Dfa& d, Dfa::State s, bool accepting) {
  std::vector<bool> acc = d.accepting();
  acc.at(s) = accepting;
  std::vector<State> table;
  for (State q = 0; q < d.num_states(); ++q) {
    for (Letter l : d.alphabet()) table.push_back(d.next(q, l));
  }
  return Dfa(d.alphabet(), std::move(table), std::move(acc), d.start());
}

}  // namespace cannon
