#include <doctest.h>

#include "guess/corpus.hpp"
#include "guess/fixtures.hpp"
#include "guess/remainder.hpp"
#include "support/property.hpp"

using namespace guess;

namespace {

const Alphabet binary{2};

StateMask mask(std::initializer_list<bool> bits) { return StateMask(bits); }

Ordinal n(std::uint64_t v) { return Ordinal::finite(v); }

}  // namespace

TEST_CASE("chain of 'some 1'") {
  // q0 (no 1 yet) keeps both kinds of continuation inside {q0, q1}; q1 only
  // accepts. Inside {q0} only the rejecting 0^w remains.
  const RemainderTrace t = remainder_chain(fixtures::one());
  REQUIRE(t.chain.size() == 3);
  CHECK(t.chain[0] == mask({true, true}));
  CHECK(t.chain[1] == mask({true, false}));
  CHECK(t.chain[2] == mask({false, false}));
  CHECK(t.alpha == n(2));
  CHECK(t.state_rank[0] == Rank(n(2)));
  CHECK(t.state_rank[1] == Rank(n(1)));
}

TEST_CASE("chain of the empty set and of 'infinitely many 1s'") {
  const RemainderTrace e = remainder_chain(fixtures::empty());
  REQUIRE(e.chain.size() == 2);
  CHECK_FALSE(graph::any(e.chain[1]));
  CHECK(e.alpha == n(1));

  const RemainderTrace inf = remainder_chain(fixtures::inf1());
  // Already Q_0 = Q_1: every state has both kinds of run.
  REQUIRE(inf.chain.size() == 1);
  CHECK(inf.alpha == n(0));
  CHECK(graph::count(inf.fixpoint()) == 2);
  CHECK_FALSE(inf.state_rank[0].has_value());
}

TEST_CASE("word ranks and stages") {
  const RemainderTrace one = remainder_chain(fixtures::one());
  CHECK(word_rank(one, {}) == Rank(n(2)));
  CHECK(word_rank(one, {0, 1}) == Rank(n(1)));
  CHECK(word_rank(one, {0, 0, 0}) == Rank(n(2)));
  CHECK(in_stage(one, {}, n(1)));
  CHECK_FALSE(in_stage(one, {}, n(2)));
  CHECK(in_stage(one, {1, 1}, n(0)));

  const RemainderTrace inf = remainder_chain(fixtures::inf1());
  for (const auto& w : words_up_to(binary, 4)) CHECK_FALSE(word_rank(inf, w).has_value());
}

TEST_CASE("closure emptiness versus word emptiness") {
  const RemainderTrace one = remainder_chain(fixtures::one());
  CHECK_FALSE(stage_emptiness(one, n(1)).closure_empty);  // 0^w stays in Q_1
  CHECK(stage_emptiness(one, n(2)).closure_empty);
  CHECK(stage_emptiness(remainder_chain(fixtures::empty()), n(1)).closure_empty);
  const RemainderTrace inf = remainder_chain(fixtures::inf1());
  CHECK_FALSE(stage_emptiness(inf, inf.alpha).closure_empty);

  // f(0) = 1: the empty word survives to stage 1 but no branch does.
  const auto cyl = stage_emptiness(remainder_chain(fixtures::cyl1()), n(1));
  CHECK_FALSE(cyl.words_empty);
  CHECK(cyl.closure_empty);
  CHECK(cyl.next_words_empty);
}

TEST_CASE("guessability of the fixtures") {
  CHECK(is_guessable(fixtures::one()));
  CHECK(is_guessable(fixtures::empty()));
  CHECK(is_guessable(fixtures::no11()));
  CHECK_FALSE(is_guessable(fixtures::inf1()));
}

TEST_CASE("unreachable states are pruned before analysis") {
  // State 2 is unreachable and would otherwise sit in the fixpoint.
  const ParitySet s(binary, 0, {0, 1, 1, 1, 2, 2}, {1, 2, 0});
  const RemainderTrace t = remainder_chain(s);
  CHECK(t.subject.size() == 2);
  CHECK(t.original_state == std::vector<State>{0, 1});
}

TEST_CASE("property: chain shape, prefix monotonicity, successor ranks") {
  const auto words = words_up_to(binary, 6);
  testing::for_each_seed(1, 150, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary);
    const RemainderTrace t = remainder_chain(s);
    CHECK(t.chain.size() <= t.subject.size() + 1);
    CHECK(t.alpha == n(t.chain.size() - 1));
    for (std::size_t i = 1; i < t.chain.size(); ++i) {
      CHECK(graph::count(t.chain[i]) < graph::count(t.chain[i - 1]));
      for (State q = 0; q < t.subject.size(); ++q) CHECK((!t.chain[i][q] || t.chain[i - 1][q]));
    }
    for (const auto& r : t.state_rank) {
      if (r) CHECK(r->is_successor());
    }
    for (const auto& w : words) {
      const Rank r = word_rank(t, w);
      if (r) CHECK(r->is_successor());
      if (w.empty()) continue;
      const Word parent(w.begin(), w.end() - 1);
      const Rank rp = word_rank(t, parent);
      // A longer word never ranks higher, and the fixpoint is prefix-closed.
      CHECK_FALSE(rank_less(rp, r));
      if (!r) CHECK_FALSE(rp.has_value());
    }
  });
}

TEST_CASE("property: ranks settle along a point inside the stage below") {
  const auto points = canonical_up_words(binary, 120);
  testing::for_each_seed(200, 150, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary);
    const RemainderTrace t = remainder_chain(s);
    for (const auto& w : points) {
      const std::size_t horizon = w.prefix().size() + w.period().size() * (t.subject.size() + 2);
      const Rank settled = word_rank(t, w.take(horizon));
      if (!settled) continue;
      CHECK(word_rank(t, w.take(horizon + w.period().size())) == settled);
      const Ordinal below = settled->predecessor();
      for (std::size_t i = 0; i <= horizon; ++i) CHECK(in_stage(t, w.take(i), below));
    }
  });
}

TEST_CASE("property: complement has the same chain") {
  testing::for_each_seed(400, 200, [](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary);
    CHECK(remainder_chain(s).chain == remainder_chain(complement(s)).chain);
  });
}
