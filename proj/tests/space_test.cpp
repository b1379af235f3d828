#include <doctest.h>

#include "guess/corpus.hpp"
#include "guess/error.hpp"
#include "guess/fixtures.hpp"
#include "guess/oracle.hpp"
#include "guess/space.hpp"
#include "support/predicates.hpp"
#include "support/property.hpp"

using namespace guess;
using namespace guess::testing;

namespace {

const Alphabet binary{2};

bool apply(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::and_: return a && b;
    case BoolOp::or_: return a || b;
    case BoolOp::xor_: return a != b;
    case BoolOp::diff: return a && !b;
  }
  return false;
}

}  // namespace

TEST_CASE("fixture membership matches direct predicates") {
  const std::vector<std::pair<ParitySet, bool (*)(const UPWord&)>> cases = {
      {fixtures::empty(), pred_empty}, {fixtures::full(), pred_full}, {fixtures::cyl1(), pred_cyl1},
      {fixtures::one(), pred_one},     {fixtures::no11(), pred_no11}, {fixtures::inf1(), pred_inf1},
  };
  for (const auto& w : canonical_up_words(binary, 500)) {
    INFO(to_string(w));
    for (const auto& [set, pred] : cases) CHECK(membership_up(set, w) == pred(w));
  }
}

TEST_CASE("membership examples") {
  CHECK_FALSE(membership_up(fixtures::one(), parse_up_word("(0)")));
  CHECK(membership_up(fixtures::one(), parse_up_word("0001(0)")));
  CHECK(membership_up(fixtures::inf1(), parse_up_word("(10)")));
  CHECK(membership_up(complement(fixtures::cyl1()), parse_up_word("(0)")));
  CHECK(membership_up(compile_clopen(cylinder(binary, {1, 0})), parse_up_word("10(0)")));
  CHECK_THROWS_AS(membership_up(fixtures::one(), parse_up_word("(2)")), Error);
}

TEST_CASE("cylinder tables") {
  const ClopenTable all = cylinder(binary, {});
  CHECK(all.depth() == 0);
  CHECK(all.table() == std::vector<bool>{true});
  CHECK(cylinder(binary, {1}).table() == std::vector<bool>{false, true});
  CHECK(cylinder(binary, {1, 0}).table() == std::vector<bool>{false, false, true, false});
  CHECK_THROWS_AS(cylinder(binary, {2}), Error);
  CHECK(equivalent(compile_clopen(all), fixtures::full()));
  CHECK(equivalent(compile_clopen(cylinder(binary, {1})), fixtures::cyl1()));
}

TEST_CASE("boolean algebra examples") {
  const ParitySet cyl = fixtures::cyl1();
  CHECK(is_empty(product_boolean(cyl, complement(cyl), BoolOp::and_)));
  CHECK(equivalent(product_boolean(fixtures::one(), fixtures::full(), BoolOp::and_), fixtures::one()));
  CHECK(equivalent(complement(complement(fixtures::one())), fixtures::one()));
  CHECK(is_empty(complement(fixtures::full())));
  CHECK(equivalent(fixtures::one(), fixtures::one()));
  CHECK_FALSE(equivalent(fixtures::one(), fixtures::full()));
  // "contains 11" minus "contains 1" is empty.
  CHECK(is_empty(product_boolean(fixtures::contains_11().automaton(), fixtures::one(), BoolOp::diff)));
  CHECK_THROWS_AS(product_boolean(fixtures::one(), full_set(Alphabet(3)), BoolOp::or_), Error);
}

TEST_CASE("open sets") {
  const OpenSet c1 = fixtures::contains_1();
  const OpenSet c11 = fixtures::contains_11();
  CHECK(open_subset(c11, c1));
  CHECK(open_subset(c1, c1));
  CHECK_FALSE(open_subset(c1, c11));
  CHECK(membership_up(c1.automaton(), parse_up_word("1(0)")));
  CHECK_FALSE(membership_up(c11.automaton(), parse_up_word("1(0)")));
  CHECK(equivalent(OpenSet::from_parity(fixtures::one()).automaton(), fixtures::one()));
  try {
    (void)OpenSet::from_parity(fixtures::inf1());
    FAIL("inf1 is not open");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_open);
  }
  // A target that is not closed under successors is rejected.
  CHECK_THROWS_AS(OpenSet(binary, 0, {0, 1, 0, 1}, {false, true}), Error);
}

TEST_CASE("compiled clopen tables agree with table lookup, exhaustively for k = 2") {
  for (std::size_t d = 0; d <= 3; ++d) {
    const auto tables = oracle::exhaustive_tables(2, d);
    const auto points = canonical_up_words(binary, 60);
    std::size_t bound = 0, level = 1;
    for (std::size_t i = 0; i <= d; ++i, level *= 2) bound += level;
    for (std::uint64_t i = 0; i < tables.count(); ++i) {
      const ClopenTable t = tables.nth(i);
      const ParitySet s = compile_clopen(t);
      CHECK(s.size() <= bound + 2);
      for (const auto& w : points) CHECK(membership_up(s, w) == t.contains(w.take(d)));
    }
  }
}

TEST_CASE("property: compiled clopen tables over three symbols") {
  const Alphabet ternary(3);
  const auto points = canonical_up_words(ternary, 80);
  for (std::size_t d = 1; d <= 3; ++d) {
    for_each_seed(10 * d, 40, [&](std::mt19937_64& rng) {
      std::size_t cells = 1;
      for (std::size_t i = 0; i < d; ++i) cells *= 3;
      std::vector<bool> table(cells);
      for (std::size_t c = 0; c < cells; ++c) table[c] = corpus::uniform(rng, 0, 1) == 1;
      const ClopenTable t(ternary, d, table);
      const ParitySet s = compile_clopen(t);
      for (const auto& w : points) CHECK(membership_up(s, w) == t.contains(w.take(d)));
    });
  }
}

TEST_CASE("property: complement negates membership") {
  const auto points = canonical_up_words(binary, 150);
  for_each_seed(1, 150, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary);
    const ParitySet c = complement(s);
    for (const auto& w : points) CHECK(membership_up(c, w) != membership_up(s, w));
  });
}

TEST_CASE("property: products are pointwise") {
  const auto points = canonical_up_words(binary, 150);
  for_each_seed(1000, 150, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary, 4, 4);
    const ParitySet t = corpus::random_parity_set(rng, binary, 4, 4);
    for (BoolOp op : {BoolOp::and_, BoolOp::or_, BoolOp::xor_, BoolOp::diff}) {
      const ParitySet p = product_boolean(s, t, op);
      for (const auto& w : points) {
        CHECK(membership_up(p, w) == apply(op, membership_up(s, w), membership_up(t, w)));
      }
    }
  });
}

TEST_CASE("property: emptiness agrees with a search over UP words") {
  // A nonempty set with n states has a member u(v) with |u| < n and
  // |v| <= n: a path to a simple cycle through its top even state.
  const auto points = canonical_up_words(binary, 5000);
  REQUIRE(points.back().prefix().size() + points.back().period().size() > 7);
  for_each_seed(2000, 300, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary, 4, 4);
    bool member = false;
    for (const auto& w : points) {
      if (membership_up(s, w)) {
        member = true;
        break;
      }
    }
    CHECK(is_empty(s) == !member);
  });
}

TEST_CASE("property: equivalence is an equivalence and respects membership") {
  const auto points = canonical_up_words(binary, 1000);
  std::vector<ParitySet> sets;
  for_each_seed(3000, 25, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary, 4, 3);
    const ParitySet d = corpus::duplicate_state(rng, s);
    CHECK(equivalent(s, d));
    CHECK(equivalent(s, compress_priorities(s)));
    for (const auto& w : points) CHECK(membership_up(s, w) == membership_up(d, w));
    sets.push_back(s);
    sets.push_back(d);
  });
  for (const auto& a : sets) {
    CHECK(equivalent(a, a));
    for (const auto& b : sets) {
      const bool ab = equivalent(a, b);
      CHECK(ab == equivalent(b, a));
      if (!ab) continue;
      for (const auto& c : sets) {
        if (equivalent(b, c)) CHECK(equivalent(a, c));
      }
    }
  }
}
