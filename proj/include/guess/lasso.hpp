#pragma once

#include <map>
#include <vector>

#include "guess/graph.hpp"
#include "guess/word.hpp"

namespace guess {

// Runs a deterministic machine on u v^w and returns the states it visits
// infinitely often, in visiting order along one traversal of the cycle.
// `next(state, symbol)` is the transition function.
template <typename Next>
std::vector<State> up_cycle_states(State start, const UPWord& w, Next&& next) {
  State q = start;
  for (Symbol a : w.prefix()) q = next(q, a);
  // Block-boundary states determine the rest of the run; the first repeat
  // closes the cycle.
  std::map<State, std::size_t> seen_at;
  std::vector<State> visited;
  std::vector<std::size_t> block_begin;
  while (true) {
    auto [it, fresh] = seen_at.emplace(q, block_begin.size());
    if (!fresh) {
      return std::vector<State>(visited.begin() + static_cast<std::ptrdiff_t>(block_begin[it->second]),
                                visited.end());
    }
    block_begin.push_back(visited.size());
    for (Symbol a : w.period()) {
      q = next(q, a);
      visited.push_back(q);
    }
  }
}

}  // namespace guess
