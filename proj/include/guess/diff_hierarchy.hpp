#pragma once

#include <optional>
#include <vector>

#include "guess/guesser.hpp"
#include "guess/ordinal.hpp"
#include "guess/space.hpp"

namespace guess {

// An increasing chain A_0 <= A_1 <= ... of open sets, indexed below theta.
// theta is an ordinal for interface purposes; instances are finite and
// theta must equal the number of sets.
struct OpenChain {
  Ordinal theta;
  std::vector<OpenSet> sets;
};

// Throws Error(invalid_argument) for an empty/mis-sized chain and
// Error(chain_not_increasing) when some A_i is not inside A_{i+1}.
void validate_chain(const OpenChain& chain);

// f is in D_theta iff f enters some A_eta and the least such eta has parity
// opposite to theta. The product tracks that least index, which can only
// decrease along a run.
ParitySet d_theta(const OpenChain& chain);

// The bounded-mind-change guesser of a D_theta set, theta = alpha: with eta
// least such that [sigma] lies inside A_eta, G(sigma) = 1 iff eta and alpha
// differ in parity and H(sigma) = eta; with no such eta, G = 0 and H = alpha.
// Codomain alpha + 1.
RankedGuesser chain_to_guesser(const OpenChain& chain);

// Rebuilds the bound so that its parity flips exactly where the guess
// flips, keeping the root bound: at a flip the new bound is H or H + 1,
// whichever has parity opposite to the previous new bound. States are
// refined to (state, new bound) pairs; the guess on every word is
// unchanged. Throws Error(bound_violation) unless check_bound(rg).
RankedGuesser normalize_bounds(const RankedGuesser& rg);

// True iff every reachable transition flips bound parity exactly when it
// flips the guess.
bool parity_tracks_output(const RankedGuesser& rg);

// Adjusts the bound so that lim H is anticongruent to lim G when G(empty)
// has the parity of the codomain, and congruent otherwise: bump the root
// bound by one when needed, then normalize_bounds.
RankedGuesser make_anticongruent(const RankedGuesser& rg);

// The congruence dichotomy make_anticongruent establishes, checked at one
// point (vacuously true where the guess diverges).
bool congruence_dichotomy_holds(const RankedGuesser& rg, const UPWord& w);

// For (G, H) with codomain alpha + 1 (alpha >= 1 finite) and G(empty) = 0:
// A_eta = {f : lim H(f) <= eta}, eta < alpha, after make_anticongruent.
// If G guesses S then d_theta of the result is S.
// When G(empty) = 1 a fresh root guessing 0 with bound H(empty) + 1 is put
// in front, if that stays below the codomain. Otherwise throws
// Error(root_not_zero); use flip_outputs and the complement instead.
OpenChain guesser_to_chain(const RankedGuesser& rg);

enum class Side { self, complement, both, neither };

std::string_view to_string(Side s) noexcept;

struct Classification {
  Rank rank;                               // nullopt: not guessable
  Ordinal level;                           // alpha with rank <= alpha + 1, alpha >= 1
  Side side = Side::neither;
  std::optional<OpenChain> chain;          // S = D_level(chain)
  std::optional<OpenChain> complement_chain;  // S^c = D_level(chain)
};

// Places a guessable set at level alpha = max(1, rank - 1) of the difference
// hierarchy, on its own side, its complement's side, or both. Every chain
// returned has been checked with equivalent().
Classification classify(const ParitySet& s);

}  // namespace guess
