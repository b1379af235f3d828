#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "guess/graph.hpp"
#include "guess/word.hpp"

namespace guess {

// A subset of Sigma^w given by a complete deterministic parity automaton.
// Global acceptance convention: a point is in the set iff the maximum
// priority visited infinitely often along its run is even.
class ParitySet {
 public:
  // `transitions` is row-major: transitions[q * k + a] = delta(q, a).
  ParitySet(Alphabet alphabet, State start, std::vector<State> transitions,
            std::vector<Priority> priorities);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return priorities_.size(); }
  State start() const noexcept { return start_; }
  State next(State q, Symbol a) const noexcept { return transitions_[q * alphabet_.size() + a]; }
  State run(const Word& w) const { return run_from(start_, w); }
  State run_from(State q, const Word& w) const;
  // start, delta(start, w0), ... : |w|+1 states.
  std::vector<State> trace(const Word& w) const;
  Priority priority(State q) const noexcept { return priorities_[q]; }

  const std::vector<State>& transitions() const noexcept { return transitions_; }
  const std::vector<Priority>& priorities() const noexcept { return priorities_; }
  graph::Digraph digraph() const;

  friend bool operator==(const ParitySet&, const ParitySet&) = default;

 private:
  Alphabet alphabet_;
  State start_;
  std::vector<State> transitions_;
  std::vector<Priority> priorities_;
};

// Drops states unreachable from the start, keeping the relative order of
// the survivors. If `original` is given it receives new -> old ids.
ParitySet prune_unreachable(const ParitySet& s, std::vector<State>* original = nullptr);

// Membership of f = u v^w, decided exactly from the run's cycle.
bool membership_up(const ParitySet& s, const UPWord& w);

// Every priority shifted by one.
ParitySet complement(const ParitySet& s);

enum class BoolOp { and_, or_, xor_, diff };

// Pointwise boolean combination. The product tracks a branch of the
// Zielonka tree of the combined condition, so the result is a single
// parity automaton for arbitrary operands.
ParitySet product_boolean(const ParitySet& s, const ParitySet& t, BoolOp op);

// True iff no point is in the set (no reachable cycle with even maximum).
bool is_empty(const ParitySet& s);

bool equivalent(const ParitySet& s, const ParitySet& t);

// Merges runs of consecutive same-parity priorities; the set is unchanged.
ParitySet compress_priorities(const ParitySet& s);

ParitySet empty_set(Alphabet alphabet);
ParitySet full_set(Alphabet alphabet);

// Membership determined by the first `depth` symbols.
class ClopenTable {
 public:
  ClopenTable(Alphabet alphabet, std::size_t depth, std::vector<bool> table);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<bool>& table() const noexcept { return table_; }
  // Lookup by a word of length >= depth (only the first `depth` symbols matter).
  bool contains(const Word& w) const;
  bool at_index(std::size_t i) const { return table_[i]; }

  friend bool operator==(const ClopenTable&, const ClopenTable&) = default;

 private:
  Alphabet alphabet_;
  std::size_t depth_;
  std::vector<bool> table_;
};

// Index of a depth-d word in a ClopenTable: base-k, first symbol most
// significant.
std::size_t table_index(Alphabet alphabet, const Word& w, std::size_t depth);

ClopenTable cylinder(Alphabet alphabet, const Word& s);

// Prefix tree over the first depth-1 levels plus accepting and rejecting
// sinks, pruned to reachable states.
ParitySet compile_clopen(const ClopenTable& t);

// A reachability set: f is in it iff the run of f enters `target`.
// The target is closed under successors; priorities are derived
// (2 on the target, 1 elsewhere).
class OpenSet {
 public:
  OpenSet(Alphabet alphabet, State start, std::vector<State> transitions, StateMask target);

  // Accepts a ParitySet denoting an open set. Its target is the set of
  // states from which every run accepts; throws Error(not_open) if the
  // set differs from the reachability set of that target.
  static OpenSet from_parity(const ParitySet& s);

  const ParitySet& automaton() const noexcept { return automaton_; }
  Alphabet alphabet() const noexcept { return automaton_.alphabet(); }
  bool is_target(State q) const { return target_[q]; }
  const StateMask& target() const noexcept { return target_; }
  // States q with [sigma] inside the set for any sigma leading to q:
  // no infinite path from q avoids the target.
  const StateMask& surely_enters() const noexcept { return surely_; }

 private:
  ParitySet automaton_;
  StateMask target_;
  StateMask surely_;
};

bool open_subset(const OpenSet& a, const OpenSet& b);

}  // namespace guess
