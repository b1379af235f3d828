#include "guess/graph.hpp"

#include <algorithm>
#include <set>

namespace guess::graph {

Digraph Digraph::from_transitions(const std::vector<State>& transitions, std::uint32_t k) {
  Digraph g;
  const std::size_t n = transitions.size() / k;
  g.succ.resize(n);
  for (std::size_t q = 0; q < n; ++q) {
    auto& out = g.succ[q];
    out.assign(transitions.begin() + static_cast<std::ptrdiff_t>(q * k),
               transitions.begin() + static_cast<std::ptrdiff_t>((q + 1) * k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

StateMask full_mask(std::size_t n) { return StateMask(n, true); }

std::vector<std::vector<State>> sccs(const Digraph& g, const StateMask& within) {
  // Iterative Tarjan.
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::vector<std::vector<State>> out;
  std::size_t counter = 0;

  struct Frame {
    State v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (State root = 0; root < n; ++root) {
    if (!within[root] || index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.succ[f.v];
      if (f.edge < succ.size()) {
        State w = succ[f.edge++];
        if (!within[w]) continue;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      State v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<State> comp;
        State w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

bool is_nontrivial(const Digraph& g, const std::vector<State>& scc, const StateMask& within) {
  if (scc.size() > 1) return true;
  const State v = scc.front();
  if (!within[v]) return false;
  const auto& s = g.succ[v];
  return std::binary_search(s.begin(), s.end(), v);
}

StateMask reachable_from(const Digraph& g, State start, const StateMask& within) {
  StateMask seen(g.size(), false);
  if (!within[start]) return seen;
  std::vector<State> todo{start};
  seen[start] = true;
  while (!todo.empty()) {
    State v = todo.back();
    todo.pop_back();
    for (State w : g.succ[v]) {
      if (within[w] && !seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

StateMask can_reach(const Digraph& g, const StateMask& targets, const StateMask& within) {
  const std::size_t n = g.size();
  std::vector<std::vector<State>> pred(n);
  for (State v = 0; v < n; ++v) {
    if (!within[v]) continue;
    for (State w : g.succ[v]) {
      if (within[w]) pred[w].push_back(v);
    }
  }
  StateMask seen(n, false);
  std::vector<State> todo;
  for (State v = 0; v < n; ++v) {
    if (within[v] && targets[v]) {
      seen[v] = true;
      todo.push_back(v);
    }
  }
  while (!todo.empty()) {
    State w = todo.back();
    todo.pop_back();
    for (State v : pred[w]) {
      if (!seen[v]) {
        seen[v] = true;
        todo.push_back(v);
      }
    }
  }
  return seen;
}

StateMask cycle_states(const Digraph& g, const std::vector<Priority>& priority,
                       const StateMask& within, Parity parity) {
  const std::size_t n = g.size();
  StateMask out(n, false);
  std::set<Priority> levels;
  for (State v = 0; v < n; ++v) {
    if (within[v] && parity_of(priority[v]) == parity) levels.insert(priority[v]);
  }
  for (Priority p : levels) {
    StateMask sub(n, false);
    for (State v = 0; v < n; ++v) sub[v] = within[v] && priority[v] <= p;
    for (const auto& comp : sccs(g, sub)) {
      if (!is_nontrivial(g, comp, sub)) continue;
      bool hits = std::any_of(comp.begin(), comp.end(), [&](State v) { return priority[v] == p; });
      if (!hits) continue;
      for (State v : comp) out[v] = true;
    }
  }
  return out;
}

StateMask cycle_states(const Digraph& g, const StateMask& within) {
  StateMask out(g.size(), false);
  for (const auto& comp : sccs(g, within)) {
    if (!is_nontrivial(g, comp, within)) continue;
    for (State v : comp) out[v] = true;
  }
  return out;
}

StateMask has_infinite_path(const Digraph& g, const StateMask& within) {
  return can_reach(g, cycle_states(g, within), within);
}

StateMask has_run_with_parity(const Digraph& g, const std::vector<Priority>& priority,
                              const StateMask& within, Parity parity) {
  return can_reach(g, cycle_states(g, priority, within, parity), within);
}

bool any(const StateMask& m) { return std::find(m.begin(), m.end(), true) != m.end(); }

std::size_t count(const StateMask& m) {
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
}

}  // namespace guess::graph
