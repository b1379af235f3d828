#pragma once

#include <cstddef>
#include <random>

#include "guess/diff_hierarchy.hpp"
#include "guess/guesser.hpp"
#include "guess/space.hpp"

// Seeded random instances for property tests and the acceptance suite.
// Every draw goes through std::mt19937_64 so a seed fixes the corpus.
namespace guess::corpus {

using Rng = std::mt19937_64;

// Uniform in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

// 1..max_states states, uniform transitions, priorities below max_priorities.
ParitySet random_parity_set(Rng& rng, Alphabet alphabet, std::size_t max_states = 6,
                            Priority max_priorities = 3);

// Copies one state and redirects a random subset of its incoming edges to
// the copy. The set denoted is unchanged.
ParitySet duplicate_state(Rng& rng, const ParitySet& s);

MooreGuesser random_guesser(Rng& rng, Alphabet alphabet, std::size_t max_states = 4);

// An increasing chain of 1..max_theta open sets of at most max_states
// states each. Half the draws share one transition graph with nested
// successor-closed targets; the rest draw members independently and keep
// the first increasing sequence found.
OpenChain random_chain(Rng& rng, Alphabet alphabet, std::size_t max_theta = 3, std::size_t max_states = 4);

// One random edit: flip an output, move a transition, nudge a bound, or
// split a state. The result need not pass check_bound.
RankedGuesser perturb(Rng& rng, const RankedGuesser& rg);

}  // namespace guess::corpus
