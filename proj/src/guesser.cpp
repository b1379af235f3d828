#include "guess/guesser.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "guess/error.hpp"
#include "guess/lasso.hpp"

namespace guess {

MooreGuesser::MooreGuesser(Alphabet alphabet, State start, std::vector<State> transitions,
                           std::vector<std::uint8_t> output)
    : alphabet_(alphabet), start_(start), transitions_(std::move(transitions)), output_(std::move(output)) {
  const std::size_t n = output_.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "guesser needs at least one state");
  if (start_ >= n) throw Error(ErrorKind::invalid_argument, "guesser start state out of range");
  if (transitions_.size() != n * alphabet_.size()) {
    throw Error(ErrorKind::invalid_argument, "guesser transition table must have states * alphabet entries");
  }
  for (State p : transitions_) {
    if (p >= n) throw Error(ErrorKind::invalid_argument, "guesser transition target out of range");
  }
  for (auto& b : output_) {
    if (b > 1) throw Error(ErrorKind::invalid_argument, "guesser outputs must be 0 or 1");
  }
}

MooreGuesser MooreGuesser::constant(Alphabet alphabet, bool value) {
  return MooreGuesser(alphabet, 0, std::vector<State>(alphabet.size(), 0),
                      {static_cast<std::uint8_t>(value)});
}

State MooreGuesser::run(const Word& w) const {
  State p = start_;
  for (Symbol a : w) p = next(p, a);
  return p;
}

std::vector<State> MooreGuesser::trace(const Word& w) const {
  std::vector<State> out{start_};
  for (Symbol a : w) out.push_back(next(out.back(), a));
  return out;
}

graph::Digraph MooreGuesser::digraph() const {
  return graph::Digraph::from_transitions(transitions_, alphabet_.size());
}

std::string_view to_string(Limit l) noexcept {
  switch (l) {
    case Limit::zero: return "0";
    case Limit::one: return "1";
    case Limit::diverges: return "DIVERGES";
  }
  return "?";
}

bool evaluate(const MooreGuesser& g, const Word& w) {
  g.alphabet().check(w);
  return g.output(g.run(w));
}

namespace {

void check_up(Alphabet alphabet, const UPWord& w) {
  alphabet.check(w.prefix());
  alphabet.check(w.period());
}

}  // namespace

Limit limit_on_up(const MooreGuesser& g, const UPWord& w) {
  check_up(g.alphabet(), w);
  const auto cycle = up_cycle_states(g.start(), w, [&](State p, Symbol a) { return g.next(p, a); });
  const bool first = g.output(cycle.front());
  for (State p : cycle) {
    if (g.output(p) != first) return Limit::diverges;
  }
  return first ? Limit::one : Limit::zero;
}

bool verify_on_up(const MooreGuesser& g, const ParitySet& s, const UPWord& w) {
  require_same_alphabet(g.alphabet(), s.alphabet(), "verify_on_up");
  const Limit l = limit_on_up(g, w);
  if (l == Limit::diverges) return false;
  return (l == Limit::one) == membership_up(s, w);
}

std::size_t mind_changes(const MooreGuesser& g, const Word& w) {
  g.alphabet().check(w);
  std::size_t changes = 0;
  const auto states = g.trace(w);
  for (std::size_t i = 1; i < states.size(); ++i) {
    if (g.output(states[i]) != g.output(states[i - 1])) ++changes;
  }
  return changes;
}

Ordinal bound_limit_on_up(const RankedGuesser& rg, const UPWord& w) {
  const auto& g = rg.guesser;
  check_up(g.alphabet(), w);
  const auto cycle = up_cycle_states(g.start(), w, [&](State p, Symbol a) { return g.next(p, a); });
  Ordinal low = rg.bound[cycle.front()];
  for (State p : cycle) low = std::min(low, rg.bound[p]);
  return low;
}

bool check_bound(const RankedGuesser& rg) {
  const auto& g = rg.guesser;
  if (rg.bound.size() != g.size()) return false;
  const auto live = graph::reachable_from(g.digraph(), g.start(), graph::full_mask(g.size()));
  for (State p = 0; p < g.size(); ++p) {
    if (!live[p]) continue;
    if (!(rg.bound[p] < rg.codomain)) return false;
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
      const State q = g.next(p, a);
      if (rg.bound[p] < rg.bound[q]) return false;
      if (g.output(p) != g.output(q) && !(rg.bound[q] < rg.bound[p])) return false;
    }
  }
  return true;
}

Rank mind_change_rank(const RemainderTrace& trace) {
  if (!is_guessable(trace)) return std::nullopt;
  return trace.state_rank[trace.subject.start()];
}

Rank mind_change_rank(const ParitySet& s) { return mind_change_rank(remainder_chain(s)); }

RankedGuesser synthesize(const ParitySet& s) {
  const RemainderTrace trace = remainder_chain(s);
  if (!is_guessable(trace)) {
    throw Error(ErrorKind::not_guessable, "set is not guessable: remainder fixpoint is nonempty");
  }
  const ParitySet& aut = trace.subject;
  const auto g = aut.digraph();
  const std::size_t n = aut.size();

  // Guess fixed at q by the runs that stay inside Q_{rank(q)-1}: 1 if all
  // of them accept, 0 if all reject, none when no such run exists.
  enum class Verdict : std::uint8_t { zero, one, inherit };
  std::vector<Verdict> verdict(n);
  std::vector<Ordinal> height(n);
  for (State q = 0; q < n; ++q) {
    const Ordinal below = trace.state_rank[q]->predecessor();
    height[q] = below;
    const StateMask& within = trace.stage(below);
    const bool acc = graph::has_run_with_parity(g, aut.priorities(), within, Parity::even)[q];
    const bool rej = graph::has_run_with_parity(g, aut.priorities(), within, Parity::odd)[q];
    if (acc && rej) throw Error(ErrorKind::invalid_argument, "internal: state kept past its rank");
    verdict[q] = acc ? Verdict::one : rej ? Verdict::zero : Verdict::inherit;
  }
  auto guess_at = [&](State q, std::uint8_t previous) -> std::uint8_t {
    switch (verdict[q]) {
      case Verdict::one: return 1;
      case Verdict::zero: return 0;
      case Verdict::inherit: return previous;
    }
    return previous;
  };

  const std::uint32_t k = aut.alphabet().size();
  std::map<std::pair<State, std::uint8_t>, State> ids;
  std::vector<std::pair<State, std::uint8_t>> keys;
  std::deque<std::pair<State, std::uint8_t>> todo;
  auto intern = [&](std::pair<State, std::uint8_t> key) {
    auto [it, fresh] = ids.emplace(key, static_cast<State>(keys.size()));
    if (fresh) {
      keys.push_back(key);
      todo.push_back(key);
    }
    return it->second;
  };
  intern({aut.start(), guess_at(aut.start(), 0)});
  std::vector<State> trans;
  while (!todo.empty()) {
    auto [q, b] = todo.front();
    todo.pop_front();
    const State id = ids.at({q, b});
    trans.resize(std::max<std::size_t>(trans.size(), (id + 1) * static_cast<std::size_t>(k)));
    for (Symbol a = 0; a < k; ++a) {
      const State q2 = aut.next(q, a);
      trans[id * k + a] = intern({q2, guess_at(q2, b)});
    }
  }
  trans.resize(keys.size() * k);
  std::vector<std::uint8_t> out;
  std::vector<Ordinal> bound;
  for (auto [q, b] : keys) {
    out.push_back(b);
    bound.push_back(height[q]);
  }
  return RankedGuesser{MooreGuesser(aut.alphabet(), 0, std::move(trans), std::move(out)), std::move(bound),
                       *trace.state_rank[aut.start()]};
}

namespace {

// Lexicographically least shortest path inside `within` from `from` to a
// state in `goal`. With `nonempty` the path has at least one symbol.
std::optional<std::pair<Word, State>> shortest_path(const std::vector<State>& trans, std::uint32_t k,
                                                    State from, const StateMask& goal,
                                                    const StateMask& within, bool nonempty) {
  if (!nonempty && goal[from]) return std::make_pair(Word{}, from);
  const std::size_t n = goal.size();
  std::vector<bool> seen(n, false);
  std::vector<std::pair<State, Symbol>> parent(n);
  std::deque<State> todo{from};
  while (!todo.empty()) {
    const State v = todo.front();
    todo.pop_front();
    for (Symbol a = 0; a < k; ++a) {
      const State w = trans[v * k + a];
      if (!within[w]) continue;
      if (goal[w]) {
        Word path{a};
        for (State u = v; u != from; u = parent[u].first) path.push_back(parent[u].second);
        std::reverse(path.begin(), path.end());
        return std::make_pair(std::move(path), w);
      }
      if (!seen[w] && w != from) {
        seen[w] = true;
        parent[w] = {v, a};
        todo.push_back(w);
      }
    }
  }
  return std::nullopt;
}

StateMask singleton(std::size_t n, State x) {
  StateMask m(n, false);
  m[x] = true;
  return m;
}

}  // namespace

std::optional<UPWord> divergence_witness(const MooreGuesser& gs, const ParitySet& s) {
  require_same_alphabet(gs.alphabet(), s.alphabet(), "divergence_witness");
  const std::uint32_t k = s.alphabet().size();

  // Reachable product of guesser and automaton.
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> keys;
  std::deque<std::pair<State, State>> todo;
  auto intern = [&](std::pair<State, State> key) {
    auto [it, fresh] = ids.emplace(key, static_cast<State>(keys.size()));
    if (fresh) {
      keys.push_back(key);
      todo.push_back(key);
    }
    return it->second;
  };
  intern({gs.start(), s.start()});
  std::vector<State> trans;
  while (!todo.empty()) {
    auto key = todo.front();
    todo.pop_front();
    const State id = ids.at(key);
    trans.resize(std::max<std::size_t>(trans.size(), (id + 1) * static_cast<std::size_t>(k)));
    for (Symbol a = 0; a < k; ++a) trans[id * k + a] = intern({gs.next(key.first, a), s.next(key.second, a)});
  }
  trans.resize(keys.size() * k);
  const std::size_t n = keys.size();
  std::vector<Priority> prio(n);
  std::vector<bool> out(n);
  for (State v = 0; v < n; ++v) {
    prio[v] = s.priority(keys[v].second);
    out[v] = gs.output(keys[v].first);
  }
  const auto g = graph::Digraph::from_transitions(trans, k);
  const auto all = graph::full_mask(n);

  // Each bad pattern: a strongly connected region plus two state sets the
  // cycle has to touch.
  struct Pattern {
    StateMask region;
    StateMask first;
    StateMask second;
  };
  std::vector<Pattern> patterns;
  for (const auto& comp : graph::sccs(g, all)) {
    if (!graph::is_nontrivial(g, comp, all)) continue;
    StateMask region(n, false), zeros(n, false), ones(n, false);
    for (State v : comp) {
      region[v] = true;
      (out[v] ? ones : zeros)[v] = true;
    }
    if (graph::any(zeros) && graph::any(ones)) {
      patterns.push_back({region, zeros, ones});
      continue;
    }
    // Constant guess b: look for a cycle whose membership is 1 - b, i.e.
    // whose maximum priority is odd when b = 1 and even when b = 0.
    const Parity wanted = out[comp.front()] ? Parity::odd : Parity::even;
    std::vector<Priority> levels;
    for (State v : comp) {
      if (parity_of(prio[v]) == wanted) levels.push_back(prio[v]);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (Priority p : levels) {
      StateMask sub(n, false);
      for (State v : comp) sub[v] = prio[v] <= p;
      for (const auto& inner : graph::sccs(g, sub)) {
        if (!graph::is_nontrivial(g, inner, sub)) continue;
        StateMask inner_region(n, false), top(n, false);
        for (State v : inner) {
          inner_region[v] = true;
          top[v] = prio[v] == p;
        }
        if (graph::any(top)) patterns.push_back({inner_region, top, top});
      }
    }
  }

  std::optional<std::tuple<std::size_t, Word, Word>> best;
  for (const auto& pat : patterns) {
    for (State x = 0; x < n; ++x) {
      if (!pat.first[x]) continue;
      auto stem = shortest_path(trans, k, 0, singleton(n, x), all, false);
      if (!stem) continue;
      auto out_leg = shortest_path(trans, k, x, pat.second, pat.region, pat.second[x]);
      if (!out_leg) continue;
      Word cycle = out_leg->first;
      if (out_leg->second != x) {
        auto back = shortest_path(trans, k, out_leg->second, singleton(n, x), pat.region, false);
        if (!back) continue;
        cycle.insert(cycle.end(), back->first.begin(), back->first.end());
      }
      // Compare canonical forms: stem 1, cycle 1 is the point (1).
      const UPWord point(stem->first, cycle);
      auto candidate = std::make_tuple(point.prefix().size() + point.period().size(), point.prefix(),
                                       point.period());
      if (!best || candidate < *best) best = std::move(candidate);
    }
  }
  if (!best) return std::nullopt;
  return UPWord(std::get<1>(*best), std::get<2>(*best));
}

MooreGuesser prune_unreachable(const MooreGuesser& g, std::vector<State>* original) {
  const auto live = graph::reachable_from(g.digraph(), g.start(), graph::full_mask(g.size()));
  std::vector<State> renumber(g.size(), 0), back;
  for (State p = 0; p < g.size(); ++p) {
    if (live[p]) {
      renumber[p] = static_cast<State>(back.size());
      back.push_back(p);
    }
  }
  const std::uint32_t k = g.alphabet().size();
  std::vector<State> trans;
  std::vector<std::uint8_t> out;
  for (State old : back) {
    for (Symbol a = 0; a < k; ++a) trans.push_back(renumber[g.next(old, a)]);
    out.push_back(g.outputs()[old]);
  }
  if (original != nullptr) *original = back;
  return MooreGuesser(g.alphabet(), renumber[g.start()], std::move(trans), std::move(out));
}

RankedGuesser prune_unreachable(const RankedGuesser& rg) {
  std::vector<State> original;
  MooreGuesser g = prune_unreachable(rg.guesser, &original);
  std::vector<Ordinal> bound;
  bound.reserve(original.size());
  for (State p : original) bound.push_back(rg.bound[p]);
  return RankedGuesser{std::move(g), std::move(bound), rg.codomain};
}

RankedGuesser flip_outputs(const RankedGuesser& rg) {
  auto out = rg.guesser.outputs();
  for (auto& b : out) b = static_cast<std::uint8_t>(1 - b);
  const auto& g = rg.guesser;
  return RankedGuesser{MooreGuesser(g.alphabet(), g.start(), g.transitions(), std::move(out)), rg.bound,
                       rg.codomain};
}

}  // namespace guess
