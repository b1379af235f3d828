#include <doctest.h>

#include "guess/corpus.hpp"
#include "guess/error.hpp"
#include "guess/fixtures.hpp"
#include "guess/guesser.hpp"
#include "support/predicates.hpp"
#include "support/property.hpp"

using namespace guess;

namespace {

const Alphabet binary{2};

Ordinal n(std::uint64_t v) { return Ordinal::finite(v); }

// Mind changes counted straight from the definition, by evaluating every
// prefix separately.
std::size_t count_changes(const MooreGuesser& g, const Word& w) {
  std::size_t out = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const Word a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i - 1));
    const Word b(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (evaluate(g, a) != evaluate(g, b)) ++out;
  }
  return out;
}

// Limit of g on u v^w read off a long enough unrolling. After
// |u| + |v| * |g| symbols the run is periodic with period dividing |v| * |g|.
Limit unrolled_limit(const MooreGuesser& g, const UPWord& w) {
  const std::size_t start = w.prefix().size() + w.period().size() * g.size();
  bool seen0 = false, seen1 = false;
  for (std::size_t i = 0; i < w.period().size() * g.size(); ++i) {
    (evaluate(g, w.take(start + i)) ? seen1 : seen0) = true;
  }
  if (seen0 && seen1) return Limit::diverges;
  return seen1 ? Limit::one : Limit::zero;
}

}  // namespace

TEST_CASE("evaluation and limits") {
  const MooreGuesser last(binary, 0, {0, 1, 0, 1}, {0, 1});
  CHECK_FALSE(evaluate(last, {}));
  CHECK(evaluate(last, {0, 1}));
  CHECK(limit_on_up(last, parse_up_word("(1)")) == Limit::one);
  CHECK(limit_on_up(last, parse_up_word("111(0)")) == Limit::zero);
  CHECK(limit_on_up(last, parse_up_word("(01)")) == Limit::diverges);
  CHECK(verify_on_up(last, fixtures::inf1(), parse_up_word("0(1)")));
  CHECK_FALSE(verify_on_up(last, fixtures::inf1(), parse_up_word("(10)")));
  CHECK(mind_changes(last, {0, 1, 1, 0, 1}) == 3);
  CHECK(to_string(Limit::diverges) == "DIVERGES");
}

TEST_CASE("bound checks") {
  const MooreGuesser seen(binary, 0, {0, 1, 1, 1}, {0, 1});
  CHECK(check_bound({seen, {n(1), n(0)}, n(2)}));
  CHECK_FALSE(check_bound({seen, {n(0), n(0)}, n(2)}));  // flip without a decrease
  CHECK_FALSE(check_bound({seen, {n(1), n(0)}, n(1)}));  // bound not below the codomain
  CHECK_FALSE(check_bound({seen, {n(1), n(2)}, n(3)}));  // bound increases
  CHECK(bound_limit_on_up({seen, {n(1), n(0)}, n(2)}, parse_up_word("(0)")) == n(1));
  CHECK(bound_limit_on_up({seen, {n(1), n(0)}, n(2)}, parse_up_word("0(1)")) == n(0));
}

TEST_CASE("canonical guesser of 'some 1'") {
  const RankedGuesser rg = synthesize(fixtures::one());
  CHECK(rg.guesser.size() == 2);
  CHECK(rg.codomain == n(2));
  CHECK(rg.bound[rg.guesser.start()] == n(1));
  CHECK(rg.bound[rg.guesser.run({1})] == n(0));
  CHECK_FALSE(evaluate(rg.guesser, {0, 0}));
  CHECK(evaluate(rg.guesser, {0, 1}));
  CHECK(check_bound(rg));
  CHECK_FALSE(divergence_witness(rg.guesser, fixtures::one()).has_value());
}

TEST_CASE("canonical guesser of 'exactly one isolated block of 1s'") {
  const RankedGuesser rg = synthesize(fixtures::no11());
  CHECK(rg.guesser.size() == 4);
  CHECK(rg.codomain == n(3));
  CHECK(rg.bound[rg.guesser.start()] == n(2));
  CHECK(rg.bound[rg.guesser.run({1})] == n(1));
  CHECK(rg.bound[rg.guesser.run({1, 1})] == n(0));
  CHECK(mind_changes(rg.guesser, {0, 1, 1, 0}) == 2);
  CHECK(check_bound(rg));
}

TEST_CASE("mind-change ranks and non-guessable input") {
  CHECK(mind_change_rank(fixtures::empty()) == Rank(n(1)));
  CHECK(mind_change_rank(fixtures::cyl1()) == Rank(n(2)));
  CHECK_FALSE(mind_change_rank(fixtures::inf1()).has_value());
  try {
    (void)synthesize(fixtures::inf1());
    FAIL("inf1 is not guessable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_guessable);
  }
}

TEST_CASE("witnesses") {
  // Shortest stem to the accepting state, then its first shortest loop.
  CHECK(divergence_witness(MooreGuesser::constant(binary, false), fixtures::one()) == parse_up_word("1(0)"));
  CHECK(divergence_witness(MooreGuesser::constant(binary, false), fixtures::inf1()) == parse_up_word("(1)"));
  CHECK(divergence_witness(MooreGuesser::constant(binary, true), fixtures::one()) == parse_up_word("(0)"));
  const MooreGuesser last(binary, 0, {0, 1, 0, 1}, {0, 1});
  const auto w = divergence_witness(last, fixtures::inf1());
  REQUIRE(w.has_value());
  CHECK(w == parse_up_word("(10)"));
  CHECK_FALSE(verify_on_up(last, fixtures::inf1(), *w));
  CHECK_THROWS_AS(divergence_witness(last, full_set(Alphabet(3))), Error);
}

TEST_CASE("flip and prune") {
  const RankedGuesser rg = synthesize(fixtures::one());
  const RankedGuesser f = flip_outputs(rg);
  CHECK(check_bound(f));
  CHECK_FALSE(divergence_witness(f.guesser, complement(fixtures::one())).has_value());
  const MooreGuesser padded(binary, 0, {0, 0, 1, 1}, {0, 1});
  std::vector<State> original;
  const MooreGuesser p = prune_unreachable(padded, &original);
  CHECK(p.size() == 1);
  CHECK(original == std::vector<State>{0});
}

TEST_CASE("property: limits agree with long unrollings") {
  const auto points = canonical_up_words(binary, 200);
  testing::for_each_seed(1, 100, [&](std::mt19937_64& rng) {
    const MooreGuesser g = corpus::random_guesser(rng, binary);
    for (const auto& w : points) CHECK(limit_on_up(g, w) == unrolled_limit(g, w));
    for (const auto& w : words_up_to(binary, 6)) CHECK(mind_changes(g, w) == count_changes(g, w));
  });
}

TEST_CASE("property: the canonical guesser is sound and within its bound") {
  const auto points = canonical_up_words(binary, 1000);
  const auto words = words_up_to(binary, 8);
  std::size_t guessable = 0;
  testing::for_each_seed(100, 120, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary);
    if (!is_guessable(s)) return;
    ++guessable;
    const RankedGuesser rg = synthesize(s);
    CHECK(check_bound(rg));
    CHECK(Rank(rg.codomain) == mind_change_rank(s));
    CHECK_FALSE(divergence_witness(rg.guesser, s).has_value());
    for (const auto& w : points) CHECK(verify_on_up(rg.guesser, s, w));
    const std::uint64_t budget = rg.bound[rg.guesser.start()].to_finite();
    for (const auto& w : words) CHECK(mind_changes(rg.guesser, w) <= budget);
  });
  CHECK(guessable > 20);
}

TEST_CASE("property: witnesses are real failures") {
  const auto points = canonical_up_words(binary, 300);
  testing::for_each_seed(500, 200, [&](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary, 4);
    const MooreGuesser g = corpus::random_guesser(rng, binary);
    const auto w = divergence_witness(g, s);
    if (w) {
      CHECK_FALSE(verify_on_up(g, s, *w));
    } else {
      for (const auto& p : points) CHECK(verify_on_up(g, s, p));
    }
  });
}
