#include "guess/space.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "guess/error.hpp"
#include "guess/lasso.hpp"

namespace guess {

ParitySet::ParitySet(Alphabet alphabet, State start, std::vector<State> transitions,
                     std::vector<Priority> priorities)
    : alphabet_(alphabet),
      start_(start),
      transitions_(std::move(transitions)),
      priorities_(std::move(priorities)) {
  const std::size_t n = priorities_.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "automaton needs at least one state");
  if (start_ >= n) throw Error(ErrorKind::invalid_argument, "start state out of range");
  if (transitions_.size() != n * alphabet_.size()) {
    throw Error(ErrorKind::invalid_argument, "transition table must have states * alphabet entries");
  }
  for (State q : transitions_) {
    if (q >= n) throw Error(ErrorKind::invalid_argument, "transition target out of range");
  }
}

State ParitySet::run_from(State q, const Word& w) const {
  for (Symbol a : w) q = next(q, a);
  return q;
}

std::vector<State> ParitySet::trace(const Word& w) const {
  std::vector<State> out{start_};
  out.reserve(w.size() + 1);
  for (Symbol a : w) out.push_back(next(out.back(), a));
  return out;
}

graph::Digraph ParitySet::digraph() const {
  return graph::Digraph::from_transitions(transitions_, alphabet_.size());
}

ParitySet prune_unreachable(const ParitySet& s, std::vector<State>* original) {
  const auto g = s.digraph();
  const auto live = graph::reachable_from(g, s.start(), graph::full_mask(s.size()));
  std::vector<State> renumber(s.size(), 0), back;
  for (State q = 0; q < s.size(); ++q) {
    if (live[q]) {
      renumber[q] = static_cast<State>(back.size());
      back.push_back(q);
    }
  }
  const std::uint32_t k = s.alphabet().size();
  std::vector<State> trans;
  std::vector<Priority> prio;
  trans.reserve(back.size() * k);
  for (State old : back) {
    for (Symbol a = 0; a < k; ++a) trans.push_back(renumber[s.next(old, a)]);
    prio.push_back(s.priority(old));
  }
  if (original != nullptr) *original = back;
  return ParitySet(s.alphabet(), renumber[s.start()], std::move(trans), std::move(prio));
}

bool membership_up(const ParitySet& s, const UPWord& w) {
  std::vector<Word> check{w.prefix(), w.period()};
  for (const auto& part : check) s.alphabet().check(part);
  const auto cycle = up_cycle_states(s.start(), w, [&](State q, Symbol a) { return s.next(q, a); });
  Priority top = 0;
  for (State q : cycle) top = std::max(top, s.priority(q));
  return top % 2 == 0;
}

ParitySet complement(const ParitySet& s) {
  auto prio = s.priorities();
  for (auto& p : prio) ++p;
  return ParitySet(s.alphabet(), s.start(), s.transitions(), std::move(prio));
}

ParitySet compress_priorities(const ParitySet& s) {
  std::set<Priority> used(s.priorities().begin(), s.priorities().end());
  std::map<Priority, Priority> remap;
  Priority current = 0;
  bool first = true;
  Priority last = 0;
  for (Priority p : used) {
    if (first) {
      current = p % 2;
      first = false;
    } else if (p % 2 != last % 2) {
      ++current;
    }
    remap[p] = current;
    last = p;
  }
  auto prio = s.priorities();
  for (auto& p : prio) p = remap[p];
  return ParitySet(s.alphabet(), s.start(), s.transitions(), std::move(prio));
}

namespace {

bool combine(BoolOp op, bool x, bool y) {
  switch (op) {
    case BoolOp::and_: return x && y;
    case BoolOp::or_: return x || y;
    case BoolOp::xor_: return x != y;
    case BoolOp::diff: return x && !y;
  }
  return false;
}

// Zielonka tree of the condition op(max1 even, max2 even) over colours
// (p1, p2). Every node is a box {(a, b) : a <= x, b <= y}; its children are
// the maximal sub-boxes whose acceptance differs from the node's.
class ZielonkaTree {
 public:
  struct Node {
    Priority x, y;
    int parent;
    int depth;
    int index_in_parent;
    int leftmost_leaf = -1;
    std::vector<int> children;
  };

  ZielonkaTree(BoolOp op, Priority top1, Priority top2) : op_(op) {
    build(top1, top2, -1, 0, 0);
  }

  bool root_accepting() const { return accepting(nodes_[0].x, nodes_[0].y); }
  int max_depth() const { return max_depth_; }
  int root_leaf() const { return nodes_[0].leftmost_leaf; }

  // Reads colour (a, b) with memory `leaf`; returns the next leaf and the
  // depth of the deepest node on the branch whose box holds the colour.
  std::pair<int, int> step(int leaf, Priority a, Priority b) const {
    int n = leaf;
    int below = -1;
    while (!(a <= nodes_[n].x && b <= nodes_[n].y)) {
      below = n;
      n = nodes_[n].parent;
    }
    if (below < 0) return {leaf, nodes_[n].depth};
    const auto& kids = nodes_[n].children;
    const int next = kids[(nodes_[below].index_in_parent + 1) % static_cast<int>(kids.size())];
    return {nodes_[next].leftmost_leaf, nodes_[n].depth};
  }

 private:
  bool accepting(Priority x, Priority y) const { return combine(op_, x % 2 == 0, y % 2 == 0); }

  int build(Priority x, Priority y, int parent, int depth, int index_in_parent) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{x, y, parent, depth, index_in_parent, -1, {}});
    max_depth_ = std::max(max_depth_, depth);
    const bool acc = accepting(x, y);
    std::vector<std::pair<Priority, Priority>> candidates;
    for (Priority cx = 0; cx <= x; ++cx) {
      for (Priority cy = 0; cy <= y; ++cy) {
        if ((cx != x || cy != y) && accepting(cx, cy) != acc) candidates.emplace_back(cx, cy);
      }
    }
    std::vector<std::pair<Priority, Priority>> maximal;
    for (const auto& c : candidates) {
      bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& d) {
        return d != c && d.first >= c.first && d.second >= c.second;
      });
      if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end(), std::greater<>());
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      int child = build(maximal[i].first, maximal[i].second, id, depth + 1, static_cast<int>(i));
      nodes_[id].children.push_back(child);
    }
    nodes_[id].leftmost_leaf = nodes_[id].children.empty() ? id : nodes_[nodes_[id].children[0]].leftmost_leaf;
    return id;
  }

  BoolOp op_;
  std::vector<Node> nodes_;
  int max_depth_ = 0;
};

Priority top_priority(const ParitySet& s) {
  return *std::max_element(s.priorities().begin(), s.priorities().end());
}

}  // namespace

ParitySet product_boolean(const ParitySet& s_in, const ParitySet& t_in, BoolOp op) {
  require_same_alphabet(s_in.alphabet(), t_in.alphabet(), "product_boolean");
  const ParitySet s = compress_priorities(s_in);
  const ParitySet t = compress_priorities(t_in);
  const ZielonkaTree tree(op, top_priority(s), top_priority(t));

  // Min-parity on depth (even depth carries the root's acceptance),
  // flipped into the max-even convention.
  const int offset = tree.root_accepting() ? 0 : 1;
  int ceiling = tree.max_depth() + 1;
  if (ceiling % 2 != 0) ++ceiling;
  auto priority_for_depth = [&](int depth) { return static_cast<Priority>(ceiling - (depth + offset)); };

  using Key = std::array<std::uint32_t, 4>;  // q1, q2, leaf, depth
  std::map<Key, State> ids;
  std::deque<Key> todo;
  std::vector<Key> keys;
  auto intern = [&](const Key& key) {
    auto [it, fresh] = ids.emplace(key, static_cast<State>(keys.size()));
    if (fresh) {
      keys.push_back(key);
      todo.push_back(key);
    }
    return it->second;
  };
  auto successor = [&](State q1, State q2, int leaf) {
    auto [next_leaf, depth] = tree.step(leaf, s.priority(q1), t.priority(q2));
    return Key{q1, q2, static_cast<std::uint32_t>(next_leaf), static_cast<std::uint32_t>(depth)};
  };

  const std::uint32_t k = s.alphabet().size();
  intern(successor(s.start(), t.start(), tree.root_leaf()));
  std::vector<State> trans;
  while (!todo.empty()) {
    Key key = todo.front();
    todo.pop_front();
    const State id = ids.at(key);
    if (trans.size() < (id + 1) * static_cast<std::size_t>(k)) trans.resize((id + 1) * static_cast<std::size_t>(k));
    for (Symbol a = 0; a < k; ++a) {
      trans[id * k + a] =
          intern(successor(s.next(key[0], a), t.next(key[1], a), static_cast<int>(key[2])));
    }
  }
  trans.resize(keys.size() * k);
  std::vector<Priority> prio;
  prio.reserve(keys.size());
  for (const auto& key : keys) prio.push_back(priority_for_depth(static_cast<int>(key[3])));
  return ParitySet(s.alphabet(), 0, std::move(trans), std::move(prio));
}

bool is_empty(const ParitySet& s) {
  const auto g = s.digraph();
  const auto live = graph::reachable_from(g, s.start(), graph::full_mask(s.size()));
  return !graph::any(graph::cycle_states(g, s.priorities(), live, Parity::even));
}

bool equivalent(const ParitySet& s, const ParitySet& t) {
  require_same_alphabet(s.alphabet(), t.alphabet(), "equivalent");
  return is_empty(product_boolean(s, t, BoolOp::diff)) && is_empty(product_boolean(t, s, BoolOp::diff));
}

ParitySet empty_set(Alphabet alphabet) {
  return ParitySet(alphabet, 0, std::vector<State>(alphabet.size(), 0), {1});
}

ParitySet full_set(Alphabet alphabet) {
  return ParitySet(alphabet, 0, std::vector<State>(alphabet.size(), 0), {0});
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

ClopenTable::ClopenTable(Alphabet alphabet, std::size_t depth, std::vector<bool> table)
    : alphabet_(alphabet), depth_(depth), table_(std::move(table)) {
  if (table_.size() != ipow(alphabet_.size(), depth_)) {
    throw Error(ErrorKind::invalid_argument, "clopen table must have k^depth entries");
  }
}

std::size_t table_index(Alphabet alphabet, const Word& w, std::size_t depth) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < depth; ++j) i = i * alphabet.size() + w[j];
  return i;
}

bool ClopenTable::contains(const Word& w) const {
  if (w.size() < depth_) throw Error(ErrorKind::invalid_argument, "word shorter than table depth");
  alphabet_.check(w);
  return table_[table_index(alphabet_, w, depth_)];
}

ClopenTable cylinder(Alphabet alphabet, const Word& s) {
  alphabet.check(s);
  std::vector<bool> table(ipow(alphabet.size(), s.size()), false);
  table[table_index(alphabet, s, s.size())] = true;
  return ClopenTable(alphabet, s.size(), std::move(table));
}

ParitySet compile_clopen(const ClopenTable& t) {
  const std::uint32_t k = t.alphabet().size();
  const std::size_t d = t.depth();
  if (d == 0) return t.table()[0] ? full_set(t.alphabet()) : empty_set(t.alphabet());

  // Internal nodes: words of length < d, numbered level by level.
  std::vector<std::size_t> level_offset(d + 1, 0);
  for (std::size_t l = 0; l < d; ++l) level_offset[l + 1] = level_offset[l] + ipow(k, l);
  const auto internal = static_cast<State>(level_offset[d]);
  const State accept = internal;
  const State reject = internal + 1;

  std::vector<State> trans((internal + 2) * static_cast<std::size_t>(k));
  std::vector<Priority> prio(internal + 2, 1);
  prio[accept] = 0;
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t idx = 0; idx < ipow(k, l); ++idx) {
      const auto node = static_cast<State>(level_offset[l] + idx);
      for (Symbol a = 0; a < k; ++a) {
        const std::size_t child = idx * k + a;
        State target;
        if (l + 1 < d) {
          target = static_cast<State>(level_offset[l + 1] + child);
        } else {
          target = t.at_index(child) ? accept : reject;
        }
        trans[node * k + a] = target;
      }
    }
  }
  for (Symbol a = 0; a < k; ++a) {
    trans[accept * k + a] = accept;
    trans[reject * k + a] = reject;
  }
  return prune_unreachable(ParitySet(t.alphabet(), 0, std::move(trans), std::move(prio)));
}

OpenSet::OpenSet(Alphabet alphabet, State start, std::vector<State> transitions, StateMask target)
    : automaton_(alphabet, start, transitions, std::vector<Priority>(target.size(), 1)),
      target_(std::move(target)) {
  const std::uint32_t k = alphabet.size();
  std::vector<Priority> prio(target_.size(), 1);
  for (State q = 0; q < target_.size(); ++q) {
    if (!target_[q]) continue;
    prio[q] = 0;
    for (Symbol a = 0; a < k; ++a) {
      if (!target_[transitions[q * k + a]]) {
        throw Error(ErrorKind::invalid_argument, "open-set target must be closed under transitions");
      }
    }
  }
  automaton_ = ParitySet(alphabet, start, std::move(transitions), std::move(prio));
  StateMask outside(target_.size());
  for (std::size_t q = 0; q < target_.size(); ++q) outside[q] = !target_[q];
  const auto escape = graph::has_infinite_path(automaton_.digraph(), outside);
  surely_.resize(target_.size());
  for (std::size_t q = 0; q < target_.size(); ++q) surely_[q] = !escape[q];
}

OpenSet OpenSet::from_parity(const ParitySet& s) {
  const auto g = s.digraph();
  const auto rejecting = graph::has_run_with_parity(g, s.priorities(), graph::full_mask(s.size()), Parity::odd);
  StateMask target(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) target[q] = !rejecting[q];
  OpenSet candidate(s.alphabet(), s.start(), s.transitions(), std::move(target));
  if (!equivalent(candidate.automaton(), s)) {
    throw Error(ErrorKind::not_open, "set is not open (differs from its interior)");
  }
  return candidate;
}

bool open_subset(const OpenSet& a, const OpenSet& b) {
  return is_empty(product_boolean(a.automaton(), b.automaton(), BoolOp::diff));
}

}  // namespace guess
