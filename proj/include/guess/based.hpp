#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "guess/guesser.hpp"
#include "guess/space.hpp"

namespace guess {

// S_0, S_1, ... given as a finite prefix followed by a repeating cycle.
struct ExplicitFamily {
  std::vector<ParitySet> prefix;
  std::vector<ParitySet> cycle;  // nonempty
};

// The sets {f : f(i) = j}, ordered i-major then j-minor.
struct CylinderFamily {
  Alphabet alphabet;
};

using OracleFamily = std::variant<ExplicitFamily, CylinderFamily>;

// Throws Error(invalid_argument) on an empty cycle and
// Error(alphabet_mismatch) when members disagree.
Alphabet family_alphabet(const OracleFamily& family);

// The oracle answers (chi_{S_0}(f), chi_{S_1}(f), ...) as a point of
// {0,1}^w. The stream is ultimately periodic whenever f is.
UPWord family_point(const OracleFamily& family, const UPWord& w);

struct Stream {
  std::vector<bool> bits;     // the first n answers
  std::size_t prefix_length;  // the stream is periodic from here on
  std::size_t period;         // with this (least) period
};

Stream family_stream(const OracleFamily& family, const UPWord& w, std::size_t n);

// Two states; outputs the last bit read, 0 on the empty input.
MooreGuesser last_bit_guesser();

// Limit of a bit guesser on the oracle stream of w, against membership.
bool verify_based(const MooreGuesser& bit_guesser, const OracleFamily& family, const ParitySet& s,
                  const UPWord& w);

// Whether chi_S(f) equals both liminf and limsup of chi_{A_m}(f).
// Throws Error(not_eventually_periodic) for a CylinderFamily.
bool limsup_liminf_check(const OracleFamily& family, const ParitySet& s, const UPWord& w);

// A bit guesser for the cylinder family over g's alphabet. It decodes each
// block of k answers back into f(i) and steps g on it; during a block it
// repeats g's current guess. A block with no 1 leaves g where it is, and
// a block with several 1s uses the first.
MooreGuesser cylinder_simulator(const MooreGuesser& g);

}  // namespace guess
