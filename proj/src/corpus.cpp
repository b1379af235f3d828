#include "guess/corpus.hpp"

#include <deque>

namespace guess::corpus {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

std::vector<State> random_transitions(Rng& rng, std::size_t n, std::uint32_t k) {
  std::vector<State> trans(n * k);
  for (auto& t : trans) t = static_cast<State>(uniform(rng, 0, n - 1));
  return trans;
}

StateMask successor_closure(const std::vector<State>& trans, std::uint32_t k, StateMask seeds) {
  std::deque<State> todo;
  for (State q = 0; q < seeds.size(); ++q) {
    if (seeds[q]) todo.push_back(q);
  }
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop_front();
    for (std::uint32_t a = 0; a < k; ++a) {
      const State r = trans[q * k + a];
      if (!seeds[r]) {
        seeds[r] = true;
        todo.push_back(r);
      }
    }
  }
  return seeds;
}

StateMask grow(Rng& rng, const std::vector<State>& trans, std::uint32_t k, StateMask base) {
  const std::size_t n = base.size();
  // Zero to two fresh seeds, so a member may repeat the previous one.
  const std::size_t seeds = uniform(rng, 0, 2);
  for (std::size_t i = 0; i < seeds; ++i) base[uniform(rng, 0, n - 1)] = true;
  return successor_closure(trans, k, std::move(base));
}

OpenSet random_open_set(Rng& rng, Alphabet alphabet, std::size_t max_states) {
  const std::size_t n = uniform(rng, 1, max_states);
  auto trans = random_transitions(rng, n, alphabet.size());
  StateMask target = grow(rng, trans, alphabet.size(), StateMask(n, false));
  return OpenSet(alphabet, 0, std::move(trans), std::move(target));
}

}  // namespace

ParitySet random_parity_set(Rng& rng, Alphabet alphabet, std::size_t max_states, Priority max_priorities) {
  const std::size_t n = uniform(rng, 1, max_states);
  auto trans = random_transitions(rng, n, alphabet.size());
  std::vector<Priority> prio(n);
  for (auto& p : prio) p = static_cast<Priority>(uniform(rng, 0, max_priorities - 1));
  return ParitySet(alphabet, 0, std::move(trans), std::move(prio));
}

ParitySet duplicate_state(Rng& rng, const ParitySet& s) {
  const std::uint32_t k = s.alphabet().size();
  const std::size_t n = s.size();
  const State victim = static_cast<State>(uniform(rng, 0, n - 1));
  const auto copy = static_cast<State>(n);
  auto trans = s.transitions();
  auto prio = s.priorities();
  for (std::uint32_t a = 0; a < k; ++a) trans.push_back(s.next(victim, a));
  prio.push_back(prio[victim]);
  for (std::size_t e = 0; e < n * k; ++e) {
    if (trans[e] == victim && uniform(rng, 0, 1) == 1) trans[e] = copy;
  }
  const State start = (s.start() == victim && uniform(rng, 0, 1) == 1) ? copy : s.start();
  return ParitySet(s.alphabet(), start, std::move(trans), std::move(prio));
}

MooreGuesser random_guesser(Rng& rng, Alphabet alphabet, std::size_t max_states) {
  const std::size_t n = uniform(rng, 1, max_states);
  auto trans = random_transitions(rng, n, alphabet.size());
  std::vector<std::uint8_t> out(n);
  for (auto& o : out) o = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  return MooreGuesser(alphabet, 0, std::move(trans), std::move(out));
}

OpenChain random_chain(Rng& rng, Alphabet alphabet, std::size_t max_theta, std::size_t max_states) {
  const std::size_t theta = uniform(rng, 1, max_theta);
  OpenChain chain{Ordinal::finite(theta), {}};
  if (uniform(rng, 0, 1) == 1) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      chain.sets.clear();
      chain.sets.push_back(random_open_set(rng, alphabet, max_states));
      for (std::size_t i = 1; i < theta; ++i) {
        OpenSet next = random_open_set(rng, alphabet, max_states);
        if (!open_subset(chain.sets.back(), next)) break;
        chain.sets.push_back(std::move(next));
      }
      if (chain.sets.size() == theta) return chain;
    }
  }
  chain.sets.clear();
  const std::size_t n = uniform(rng, 1, max_states);
  const auto trans = random_transitions(rng, n, alphabet.size());
  StateMask target(n, false);
  for (std::size_t i = 0; i < theta; ++i) {
    target = grow(rng, trans, alphabet.size(), std::move(target));
    chain.sets.emplace_back(alphabet, 0, trans, target);
  }
  return chain;
}

RankedGuesser perturb(Rng& rng, const RankedGuesser& rg) {
  const MooreGuesser& g = rg.guesser;
  const std::uint32_t k = g.alphabet().size();
  const std::size_t n = g.size();
  auto trans = g.transitions();
  auto out = g.outputs();
  auto bound = rg.bound;
  State start = g.start();
  const State p = static_cast<State>(uniform(rng, 0, n - 1));
  switch (uniform(rng, 0, 3)) {
    case 0:
      out[p] ^= 1;
      break;
    case 1:
      trans[p * k + uniform(rng, 0, k - 1)] = static_cast<State>(uniform(rng, 0, n - 1));
      break;
    case 2: {
      const std::uint64_t h = bound[p].is_finite() ? bound[p].to_finite() : 0;
      bound[p] = Ordinal::finite(uniform(rng, 0, 1) == 1 ? h + 1 : (h == 0 ? 0 : h - 1));
      break;
    }
    default: {
      const auto copy = static_cast<State>(n);
      for (std::uint32_t a = 0; a < k; ++a) trans.push_back(g.next(p, a));
      out.push_back(out[p]);
      bound.push_back(bound[p]);
      for (std::size_t e = 0; e < n * k; ++e) {
        if (trans[e] == p && uniform(rng, 0, 1) == 1) trans[e] = copy;
      }
      if (start == p && uniform(rng, 0, 1) == 1) start = copy;
      break;
    }
  }
  return RankedGuesser{MooreGuesser(g.alphabet(), start, std::move(trans), std::move(out)), std::move(bound),
                       rg.codomain};
}

}  // namespace guess::corpus
