#pragma once

#include <cstdint>
#include <vector>

#include "guess/ordinal.hpp"

namespace guess {

using State = std::uint32_t;
using Priority = std::uint32_t;
using StateMask = std::vector<bool>;

namespace graph {

// Successor lists of a deterministic automaton's transition graph with
// duplicate edges removed. `transitions` is row-major: q * k + a.
struct Digraph {
  std::vector<std::vector<State>> succ;

  static Digraph from_transitions(const std::vector<State>& transitions, std::uint32_t k);
  std::size_t size() const noexcept { return succ.size(); }
};

StateMask full_mask(std::size_t n);

// Strongly connected components of the subgraph induced by `within`.
std::vector<std::vector<State>> sccs(const Digraph& g, const StateMask& within);

// An SCC with at least one internal edge (a self-loop counts).
bool is_nontrivial(const Digraph& g, const std::vector<State>& scc, const StateMask& within);

StateMask reachable_from(const Digraph& g, State start, const StateMask& within);

// States in `within` that can reach a state of `targets` by a path
// staying inside `within` (length 0 allowed).
StateMask can_reach(const Digraph& g, const StateMask& targets, const StateMask& within);

// States of `within` lying on some cycle inside `within` whose maximum
// priority has the requested parity.
StateMask cycle_states(const Digraph& g, const std::vector<Priority>& priority,
                       const StateMask& within, Parity parity);

// States of `within` lying on any cycle inside `within`.
StateMask cycle_states(const Digraph& g, const StateMask& within);

// States from which some infinite path stays inside `within`.
StateMask has_infinite_path(const Digraph& g, const StateMask& within);

// States from which some infinite path stays inside `within` and whose
// maximum priority seen infinitely often has the given parity.
StateMask has_run_with_parity(const Digraph& g, const std::vector<Priority>& priority,
                              const StateMask& within, Parity parity);

bool any(const StateMask& m);
std::size_t count(const StateMask& m);

}  // namespace graph
}  // namespace guess
