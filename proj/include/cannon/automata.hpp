#pragma once

// Deterministic finite automata over subsets of {a, a^-1, t}, the usual
// boolean algebra on their languages, and the acceptor for the geodesic
// language of G.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cannon/group.hpp"

namespace cannon {

/// A letter outside a Dfa's alphabet, or two Dfas with different alphabets.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (S, A, tau, Y, s0) with a total transition map. States are dense ids
/// 0..num_states()-1.
class Dfa {
 public:
  using State = std::uint32_t;

  /// `transitions` is row-major: entry s * alphabet.size() + i is the
  /// successor of s under alphabet[i]. Alphabet letters must be distinct
  /// and are stored in letter order.
  Dfa(std::vector<Letter> alphabet, std::vector<State> transitions, std::vector<bool> accepting,
      State start);

  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return accepting_.size(); }
  State start() const noexcept { return start_; }
  bool is_accepting(State s) const { return accepting_.at(s); }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  bool has_letter(Letter l) const noexcept { return column_[index_of(l)] >= 0; }

  /// Throws AlphabetError for letters outside the alphabet.
  State next(State s, Letter l) const;

  /// Structural equality (same ids, same table); use isomorphic() or
  /// equivalent() for the weaker notions.
  bool operator==(const Dfa&) const = default;

 private:
  std::vector<Letter> alphabet_;
  std::array<int, 3> column_{-1, -1, -1};
  std::vector<State> transitions_;
  std::vector<bool> accepting_;
  State start_;
};

bool accepts(const Dfa& d, const Word& w);

/// Acceptor for { a^x, a^x t a^y, a^x1 t a^y t a^x2 : y != 0, x1*x2 >= 0 },
/// the geodesics of G. Every state except the single sink accepts.
Dfa build_geodesic_acceptor();

/// Accepted words of length <= max_len.
std::set<Word> enumerate_language(const Dfa& d, std::size_t max_len);

enum class ProductMode { intersection, union_, difference };

Dfa product(const Dfa& lhs, const Dfa& rhs, ProductMode mode);
Dfa complement(const Dfa& d);

/// Hopcroft partition refinement on the reachable part. Result is in
/// canonical numbering.
Dfa minimize(const Dfa& d);

/// Brzozowski's double reversal: determinize(reverse(determinize(reverse(d)))).
/// Independent of minimize(); kept as a cross-check.
Dfa minimize_brzozowski(const Dfa& d);

bool is_empty(const Dfa& d);
bool equivalent(const Dfa& lhs, const Dfa& rhs);

/// Reachable part renumbered in BFS order from the start state, letters
/// visited in alphabet order.
Dfa canonical(const Dfa& d);
bool isomorphic(const Dfa& lhs, const Dfa& rhs);

/// Plain-text form of canonical(d):
///   alphabet a A t
///   states N
///   start 0
///   accepting 0 1 ...
///   <state> <letter> <state>     (one line per transition)
std::string to_text(const Dfa& d);
Dfa parse_dfa(std::string_view text);

// Builders used by tests and the CLI.
Dfa universal_dfa(const std::vector<Letter>& alphabet);
Dfa empty_dfa(const std::vector<Letter>& alphabet);
/// All words of length <= max_len.
Dfa length_at_most_dfa(const std::vector<Letter>& alphabet, std::size_t max_len);
/// Prefix-tree automaton accepting exactly `words`.
Dfa word_set_dfa(const std::vector<Letter>& alphabet, const std::set<Word>& words);
/// Uniform random transitions, each state accepting with probability 1/2.
Dfa random_dfa(const std::vector<Letter>& alphabet, std::size_t num_states, std::mt19937_64& rng);

/// Copy of d with the accepting flag of s replaced.
Dfa with_accepting(const Dfa& d, Dfa::State s, bool accepting);

inline std::vector<Letter> full_alphabet() { return {kLetters.begin(), kLetters.end()}; }

}  // namespace cannon
