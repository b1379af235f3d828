#pragma once

#include <optional>
#include <vector>

#include "guess/ordinal.hpp"
#include "guess/remainder.hpp"
#include "guess/space.hpp"

namespace guess {

// A finite-state guesser: G(sigma) is the output of the state reached by
// sigma. Outputs are stored as 0/1 bytes.
class MooreGuesser {
 public:
  MooreGuesser(Alphabet alphabet, State start, std::vector<State> transitions,
               std::vector<std::uint8_t> output);

  static MooreGuesser constant(Alphabet alphabet, bool value);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return output_.size(); }
  State start() const noexcept { return start_; }
  State next(State p, Symbol a) const noexcept { return transitions_[p * alphabet_.size() + a]; }
  State run(const Word& w) const;
  std::vector<State> trace(const Word& w) const;
  bool output(State p) const noexcept { return output_[p] != 0; }

  const std::vector<State>& transitions() const noexcept { return transitions_; }
  const std::vector<std::uint8_t>& outputs() const noexcept { return output_; }
  graph::Digraph digraph() const;

  friend bool operator==(const MooreGuesser&, const MooreGuesser&) = default;

 private:
  Alphabet alphabet_;
  State start_;
  std::vector<State> transitions_;
  std::vector<std::uint8_t> output_;
};

// A guesser together with a non-increasing bound on its remaining mind
// changes, factored through its states.
struct RankedGuesser {
  MooreGuesser guesser;
  std::vector<Ordinal> bound;  // per state
  Ordinal codomain;            // every bound value must lie below it

  friend bool operator==(const RankedGuesser&, const RankedGuesser&) = default;
};

enum class Limit { zero, one, diverges };

std::string_view to_string(Limit l) noexcept;

bool evaluate(const MooreGuesser& g, const Word& w);
Limit limit_on_up(const MooreGuesser& g, const UPWord& w);
bool verify_on_up(const MooreGuesser& g, const ParitySet& s, const UPWord& w);
std::size_t mind_changes(const MooreGuesser& g, const Word& w);

// lim H(f|n) on u v^w: the smallest bound on the run's cycle.
Ordinal bound_limit_on_up(const RankedGuesser& rg, const UPWord& w);

// Bounds never increase along a reachable transition, strictly decrease
// where the output flips, and stay below the codomain.
bool check_bound(const RankedGuesser& rg);

// The canonical guesser of a guessable set. State (q, b) pairs an automaton
// state with the current guess; the guess at q is fixed by which runs stay
// inside the stage just before q's rank, and inherited when none does.
// H(q, b) = rank(q) - 1 and the codomain is the mind-change rank.
// Throws Error(not_guessable) when the remainder fixpoint is nonempty.
RankedGuesser synthesize(const ParitySet& s);

// Least alpha with S_alpha empty; nullopt when s is not guessable.
Rank mind_change_rank(const ParitySet& s);
Rank mind_change_rank(const RemainderTrace& trace);

// A point on which g fails to guess s, from a reachable cycle of the
// product g x s whose guesses are not constant or disagree with
// membership. nullopt certifies g guesses s on every point. Ties break by
// |u|+|v| of the canonical form, then lexicographically. Only shortest
// stems and cycles are tried, so this is not a global minimum.
std::optional<UPWord> divergence_witness(const MooreGuesser& g, const ParitySet& s);

MooreGuesser prune_unreachable(const MooreGuesser& g, std::vector<State>* original = nullptr);
RankedGuesser prune_unreachable(const RankedGuesser& rg);

// (1 - G, H): guesses the complement with the same bound.
RankedGuesser flip_outputs(const RankedGuesser& rg);

}  // namespace guess
