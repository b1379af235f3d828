#pragma once

#include <optional>
#include <vector>

#include "guess/ordinal.hpp"
#include "guess/space.hpp"

namespace guess {

// Stage at which a state or word leaves the remainder chain; nullopt means
// it survives into the fixpoint (rank "infinity").
using Rank = std::optional<Ordinal>;

std::string to_string(const Rank& r);
// Strict order with nullopt above every ordinal.
bool rank_less(const Rank& a, const Rank& b);

// The remainder chain realised on automaton states. A word lies in stage
// beta iff every state on its run (start and final state included) lies
// in chain[beta]; stages past the fixpoint repeat the last entry.
struct RemainderTrace {
  ParitySet subject;                  // reachable part of the input
  std::vector<State> original_state;  // subject state -> input state
  std::vector<StateMask> chain;       // Q_0 = all, ..., Q_N == Q_{N+1}
  Ordinal alpha;                      // N: least index where the chain repeats
  std::vector<Rank> state_rank;       // least beta with q outside Q_beta

  const StateMask& stage(const Ordinal& beta) const;
  const StateMask& fixpoint() const { return chain.back(); }
};

// Q_{b+1} keeps the states of Q_b that have both an accepting and a
// rejecting infinite run staying inside Q_b.
RemainderTrace remainder_chain(const ParitySet& s);

// Least beta such that some state on the run of `w` is outside Q_beta.
Rank word_rank(const RemainderTrace& trace, const Word& w);

bool in_stage(const RemainderTrace& trace, const Word& w, const Ordinal& beta);

struct StageEmptiness {
  bool closure_empty;    // [S_beta] = {} : no infinite run from the start stays in Q_beta
  bool words_empty;      // S_beta = {}
  bool next_words_empty; // S_{beta+1} = {}, implied by closure_empty
};

StageEmptiness stage_emptiness(const RemainderTrace& trace, const Ordinal& beta);

bool is_guessable(const RemainderTrace& trace);
bool is_guessable(const ParitySet& s);

}  // namespace guess
