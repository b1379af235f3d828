#include "guess/remainder.hpp"

#include "guess/error.hpp"

namespace guess {

std::string to_string(const Rank& r) { return r ? to_string(*r) : std::string("INFTY"); }

bool rank_less(const Rank& a, const Rank& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

const StateMask& RemainderTrace::stage(const Ordinal& beta) const {
  const std::size_t last = chain.size() - 1;
  if (beta.is_finite() && beta.to_finite() < last) return chain[beta.to_finite()];
  return chain[last];
}

RemainderTrace remainder_chain(const ParitySet& input) {
  std::vector<State> original;
  ParitySet s = prune_unreachable(input, &original);
  const auto g = s.digraph();
  const std::size_t n = s.size();

  std::vector<StateMask> chain{graph::full_mask(n)};
  while (true) {
    const StateMask& current = chain.back();
    const auto accepting = graph::has_run_with_parity(g, s.priorities(), current, Parity::even);
    const auto rejecting = graph::has_run_with_parity(g, s.priorities(), current, Parity::odd);
    StateMask next(n, false);
    for (std::size_t q = 0; q < n; ++q) next[q] = current[q] && accepting[q] && rejecting[q];
    if (next == current) break;
    chain.push_back(std::move(next));
  }

  std::vector<Rank> rank(n);
  for (State q = 0; q < n; ++q) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (!chain[i][q]) {
        rank[q] = Ordinal::finite(i);
        break;
      }
    }
  }
  const auto alpha = Ordinal::finite(chain.size() - 1);
  return RemainderTrace{std::move(s), std::move(original), std::move(chain), alpha, std::move(rank)};
}

Rank word_rank(const RemainderTrace& trace, const Word& w) {
  trace.subject.alphabet().check(w);
  Rank best;
  for (State q : trace.subject.trace(w)) {
    if (rank_less(trace.state_rank[q], best)) best = trace.state_rank[q];
  }
  return best;
}

bool in_stage(const RemainderTrace& trace, const Word& w, const Ordinal& beta) {
  const Rank r = word_rank(trace, w);
  return !r || beta < *r;
}

StageEmptiness stage_emptiness(const RemainderTrace& trace, const Ordinal& beta) {
  const auto g = trace.subject.digraph();
  const StateMask& q = trace.stage(beta);
  const State start = trace.subject.start();
  StageEmptiness out{};
  out.words_empty = !q[start];
  out.closure_empty = !graph::has_infinite_path(g, q)[start];
  out.next_words_empty = !trace.stage(succ(beta))[start];
  return out;
}

bool is_guessable(const RemainderTrace& trace) { return !graph::any(trace.fixpoint()); }

bool is_guessable(const ParitySet& s) { return is_guessable(remainder_chain(s)); }

}  // namespace guess
