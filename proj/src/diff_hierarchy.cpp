#include "guess/diff_hierarchy.hpp"

#include <deque>
#include <map>

#include "guess/error.hpp"
#include "guess/lasso.hpp"

namespace guess {

std::string_view to_string(Side s) noexcept {
  switch (s) {
    case Side::self: return "SELF";
    case Side::complement: return "COMPLEMENT";
    case Side::both: return "BOTH";
    case Side::neither: return "NEITHER";
  }
  return "?";
}

void validate_chain(const OpenChain& chain) {
  if (chain.sets.empty()) throw Error(ErrorKind::invalid_argument, "chain needs theta >= 1 sets");
  if (!chain.theta.is_finite() || chain.theta.to_finite() != chain.sets.size()) {
    throw Error(ErrorKind::invalid_argument, "chain theta must equal its number of sets");
  }
  for (std::size_t i = 1; i < chain.sets.size(); ++i) {
    require_same_alphabet(chain.sets[0].alphabet(), chain.sets[i].alphabet(), "open chain");
    if (!open_subset(chain.sets[i - 1], chain.sets[i])) {
      throw Error(ErrorKind::chain_not_increasing,
                  "chain set " + std::to_string(i - 1) + " is not contained in set " + std::to_string(i));
    }
  }
}

namespace {

// Reachable synchronous product of the chain's automata.
struct ChainProduct {
  std::vector<std::vector<State>> keys;  // per product state: one state per set
  std::vector<State> transitions;
};

ChainProduct explore(const OpenChain& chain) {
  const std::uint32_t k = chain.sets[0].alphabet().size();
  ChainProduct out;
  std::map<std::vector<State>, State> ids;
  std::deque<std::vector<State>> todo;
  auto intern = [&](std::vector<State> key) {
    auto [it, fresh] = ids.emplace(key, static_cast<State>(out.keys.size()));
    if (fresh) {
      out.keys.push_back(key);
      todo.push_back(std::move(key));
    }
    return it->second;
  };
  std::vector<State> start;
  for (const auto& a : chain.sets) start.push_back(a.automaton().start());
  intern(std::move(start));
  while (!todo.empty()) {
    auto key = std::move(todo.front());
    todo.pop_front();
    const State id = ids.at(key);
    if (out.transitions.size() < (id + 1) * static_cast<std::size_t>(k)) {
      out.transitions.resize((id + 1) * static_cast<std::size_t>(k));
    }
    for (Symbol a = 0; a < k; ++a) {
      std::vector<State> next(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) next[i] = chain.sets[i].automaton().next(key[i], a);
      out.transitions[id * k + a] = intern(std::move(next));
    }
  }
  out.transitions.resize(out.keys.size() * k);
  return out;
}

}  // namespace

ParitySet d_theta(const OpenChain& chain) {
  validate_chain(chain);
  const std::size_t theta = chain.sets.size();
  const Parity theta_parity = parity_of(theta);
  const ChainProduct product = explore(chain);
  std::vector<Priority> prio;
  prio.reserve(product.keys.size());
  for (const auto& key : product.keys) {
    std::size_t least = theta;
    for (std::size_t i = 0; i < theta; ++i) {
      if (chain.sets[i].is_target(key[i])) {
        least = i;
        break;
      }
    }
    const bool member = least < theta && parity_of(least) != theta_parity;
    prio.push_back(member ? 0 : 1);
  }
  return ParitySet(chain.sets[0].alphabet(), 0, product.transitions, std::move(prio));
}

RankedGuesser chain_to_guesser(const OpenChain& chain) {
  validate_chain(chain);
  const std::size_t alpha = chain.sets.size();
  const Ordinal alpha_ord = Ordinal::finite(alpha);
  const ChainProduct product = explore(chain);
  std::vector<std::uint8_t> out;
  std::vector<Ordinal> bound;
  for (const auto& key : product.keys) {
    std::size_t least = alpha;
    for (std::size_t i = 0; i < alpha; ++i) {
      if (chain.sets[i].surely_enters()[key[i]]) {
        least = i;
        break;
      }
    }
    if (least == alpha) {
      out.push_back(0);
      bound.push_back(alpha_ord);
    } else {
      const Ordinal eta = Ordinal::finite(least);
      out.push_back(congruent(eta, alpha_ord) ? 0 : 1);
      bound.push_back(eta);
    }
  }
  return RankedGuesser{MooreGuesser(chain.sets[0].alphabet(), 0, product.transitions, std::move(out)),
                       std::move(bound), succ(alpha_ord)};
}

RankedGuesser normalize_bounds(const RankedGuesser& rg) {
  if (!check_bound(rg)) throw Error(ErrorKind::bound_violation, "normalize_bounds: bound check fails");
  const MooreGuesser& g = rg.guesser;
  const std::uint32_t k = g.alphabet().size();
  using Key = std::pair<State, Ordinal>;
  std::map<Key, State> ids;
  std::vector<Key> keys;
  std::deque<Key> todo;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(key, static_cast<State>(keys.size()));
    if (fresh) {
      keys.push_back(key);
      todo.push_back(std::move(key));
    }
    return it->second;
  };
  intern({g.start(), rg.bound[g.start()]});
  std::vector<State> trans;
  while (!todo.empty()) {
    Key key = std::move(todo.front());
    todo.pop_front();
    const State id = ids.at(key);
    if (trans.size() < (id + 1) * static_cast<std::size_t>(k)) trans.resize((id + 1) * static_cast<std::size_t>(k));
    const auto& [p, h] = key;
    for (Symbol a = 0; a < k; ++a) {
      const State q = g.next(p, a);
      Ordinal next_h = h;
      if (g.output(q) != g.output(p)) {
        next_h = rg.bound[q];
        if (congruent(next_h, h)) next_h = succ(next_h);
      }
      trans[id * k + a] = intern({q, std::move(next_h)});
    }
  }
  trans.resize(keys.size() * k);
  std::vector<std::uint8_t> out;
  std::vector<Ordinal> bound;
  for (const auto& [p, h] : keys) {
    out.push_back(g.outputs()[p]);
    bound.push_back(h);
  }
  RankedGuesser result{MooreGuesser(g.alphabet(), 0, std::move(trans), std::move(out)), std::move(bound),
                       rg.codomain};
  if (!check_bound(result)) {
    throw Error(ErrorKind::bound_violation, "normalize_bounds: rebuilt bound fails its check");
  }
  return result;
}

bool parity_tracks_output(const RankedGuesser& rg) {
  const auto& g = rg.guesser;
  const auto live = graph::reachable_from(g.digraph(), g.start(), graph::full_mask(g.size()));
  for (State p = 0; p < g.size(); ++p) {
    if (!live[p]) continue;
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
      const State q = g.next(p, a);
      const bool flips_guess = g.output(p) != g.output(q);
      const bool flips_parity = !congruent(rg.bound[p], rg.bound[q]);
      if (flips_guess != flips_parity) return false;
    }
  }
  return true;
}

namespace {

Ordinal bit(bool b) { return Ordinal::finite(b ? 1 : 0); }

}  // namespace

RankedGuesser make_anticongruent(const RankedGuesser& rg) {
  if (!check_bound(rg)) throw Error(ErrorKind::bound_violation, "make_anticongruent: bound check fails");
  const MooreGuesser& g = rg.guesser;
  const State root = g.start();
  const Ordinal root_guess = bit(g.output(root));
  const bool want_opposite = congruent(root_guess, rg.codomain);
  const bool is_opposite = !congruent(rg.bound[root], root_guess);
  if (want_opposite == is_opposite) return normalize_bounds(rg);

  // Raise H at the empty word only: a fresh copy of the root state.
  Ordinal raised = succ(rg.bound[root]);
  if (!(raised < rg.codomain)) {
    throw Error(ErrorKind::bound_violation, "make_anticongruent: root bound cannot be raised");
  }
  const std::uint32_t k = g.alphabet().size();
  auto trans = g.transitions();
  auto out = g.outputs();
  auto bound = rg.bound;
  const auto fresh = static_cast<State>(g.size());
  for (Symbol a = 0; a < k; ++a) trans.push_back(g.next(root, a));
  out.push_back(out[root]);
  bound.push_back(std::move(raised));
  RankedGuesser split{MooreGuesser(g.alphabet(), fresh, std::move(trans), std::move(out)), std::move(bound),
                      rg.codomain};
  return normalize_bounds(prune_unreachable(split));
}

bool congruence_dichotomy_holds(const RankedGuesser& rg, const UPWord& w) {
  const Limit guess = limit_on_up(rg.guesser, w);
  if (guess == Limit::diverges) return true;
  const Ordinal guess_ord = bit(guess == Limit::one);
  const Ordinal h = bound_limit_on_up(rg, w);
  const bool root_like_codomain = congruent(bit(rg.guesser.output(rg.guesser.start())), rg.codomain);
  return root_like_codomain ? !congruent(h, guess_ord) : congruent(h, guess_ord);
}

namespace {

// A fresh root guessing 0 in front of a root guessing 1. Costs one mind
// change, so it needs room below the codomain.
std::optional<RankedGuesser> delay_root(const RankedGuesser& rg) {
  const MooreGuesser& g = rg.guesser;
  const State root = g.start();
  Ordinal raised = succ(rg.bound[root]);
  if (!(raised < rg.codomain)) return std::nullopt;
  auto trans = g.transitions();
  auto out = g.outputs();
  auto bound = rg.bound;
  const auto fresh = static_cast<State>(g.size());
  for (Symbol a = 0; a < g.alphabet().size(); ++a) trans.push_back(g.next(root, a));
  out.push_back(0);
  bound.push_back(std::move(raised));
  return prune_unreachable(RankedGuesser{MooreGuesser(g.alphabet(), fresh, std::move(trans), std::move(out)),
                                         std::move(bound), rg.codomain});
}

}  // namespace

OpenChain guesser_to_chain(const RankedGuesser& rg) {
  if (!check_bound(rg)) throw Error(ErrorKind::bound_violation, "guesser_to_chain: bound check fails");
  if (!rg.codomain.is_finite() || rg.codomain.to_finite() < 2) {
    throw Error(ErrorKind::invalid_argument, "guesser_to_chain: codomain must be a finite alpha + 1 with alpha >= 1");
  }
  std::optional<RankedGuesser> delayed;
  if (rg.guesser.output(rg.guesser.start())) {
    delayed = delay_root(rg);
    if (!delayed) {
      throw Error(ErrorKind::root_not_zero,
                  "guesser_to_chain: guess at the empty word is 1 with no room to delay it; use the complement");
    }
  }
  const std::size_t alpha = rg.codomain.to_finite() - 1;
  const RankedGuesser adjusted = make_anticongruent(delayed ? *delayed : rg);
  const MooreGuesser& g = adjusted.guesser;
  OpenChain chain{Ordinal::finite(alpha), {}};
  for (std::size_t eta = 0; eta < alpha; ++eta) {
    const Ordinal level = Ordinal::finite(eta);
    StateMask target(g.size());
    for (State p = 0; p < g.size(); ++p) target[p] = adjusted.bound[p] <= level;
    chain.sets.emplace_back(g.alphabet(), g.start(), g.transitions(), std::move(target));
  }
  return chain;
}

namespace {

RankedGuesser lift_codomain(RankedGuesser rg, const Ordinal& codomain) {
  rg.codomain = codomain;
  return rg;
}

// First candidate whose chain reproduces `target`.
std::optional<OpenChain> chain_for(const std::vector<RankedGuesser>& candidates, const ParitySet& target) {
  for (const auto& rg : candidates) {
    try {
      OpenChain chain = guesser_to_chain(rg);
      if (equivalent(d_theta(chain), target)) return chain;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::root_not_zero) throw;
    }
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const ParitySet& s) {
  Classification result;
  result.rank = mind_change_rank(s);
  if (!result.rank) return result;
  const std::uint64_t rank = result.rank->to_finite();
  const std::uint64_t alpha = rank > 2 ? rank - 1 : 1;
  result.level = Ordinal::finite(alpha);
  const Ordinal codomain = Ordinal::finite(alpha + 1);

  const ParitySet co = complement(s);
  const RankedGuesser own = lift_codomain(synthesize(s), codomain);
  const RankedGuesser other = lift_codomain(synthesize(co), codomain);

  result.chain = chain_for({own, flip_outputs(other)}, s);
  result.complement_chain = chain_for({other, flip_outputs(own)}, co);
  if (result.chain && result.complement_chain) {
    result.side = Side::both;
  } else if (result.chain) {
    result.side = Side::self;
  } else if (result.complement_chain) {
    result.side = Side::complement;
  }
  return result;
}

}  // namespace guess
