#include <doctest.h>

#include <filesystem>

#include "guess/corpus.hpp"
#include "guess/error.hpp"
#include "guess/fixtures.hpp"
#include "guess/text_format.hpp"
#include "support/property.hpp"

using namespace guess;
namespace fs = std::filesystem;

namespace {

const Alphabet binary{2};
const fs::path data_dir{GUESS_DATA_DIR};

ErrorKind kind_of(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("automaton files") {
  CHECK(equivalent(text::load_automaton((data_dir / "one.aut").string()).set, fixtures::one()));
  CHECK(equivalent(text::load_automaton((data_dir / "no11.aut").string()).set, fixtures::no11()));
  CHECK(equivalent(text::load_automaton((data_dir / "no_one.aut").string()).set, complement(fixtures::one())));
  const auto partial = text::load_automaton((data_dir / "cyl1_partial.aut").string());
  CHECK(partial.completed);
  CHECK(equivalent(partial.set, fixtures::cyl1()));
  // min-odd written differently, same set
  CHECK(equivalent(text::load_automaton((data_dir / "inf1_min.aut").string()).set, fixtures::inf1()));
  CHECK(equivalent(text::load_automaton("fixture:F_NO11").set, fixtures::no11()));
  CHECK_THROWS_AS(text::load_automaton("fixture:F_NOPE"), Error);
}

TEST_CASE("automaton parse errors") {
  CHECK(kind_of([] { text::parse_automaton("alphabet 2\nstates 1\nstart 0\npriority 0 x\n"); }) ==
        ErrorKind::parse);
  CHECK(kind_of([] { text::parse_automaton("alphabet 2\nstates 1\nstart 3\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { text::parse_automaton("alphabet 2\nstates 1\nstart 0\nbogus 1\n"); }) == ErrorKind::parse);
  CHECK(kind_of([] { text::parse_automaton("alphabet 2\nstates 1\nstart 0\ntrans 0 5 0\n"); }) ==
        ErrorKind::parse);
  try {
    text::parse_automaton("alphabet 2\nstates 1\n\nstart 0\nwat\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("guesser files") {
  const auto g = text::parse_guesser(text::read_file(data_dir / "seen_one.gsr"));
  REQUIRE(g.ranked.has_value());
  CHECK(check_bound(*g.ranked));
  CHECK(g.ranked->codomain == Ordinal::finite(2));
  CHECK_FALSE(divergence_witness(g.guesser, fixtures::one()).has_value());
  const auto c = text::parse_guesser(text::read_file(data_dir / "constant0.gsr"));
  CHECK_FALSE(c.ranked.has_value());
  CHECK(text::looks_like_guesser(text::read_file(data_dir / "constant0.gsr")));
  CHECK_FALSE(text::looks_like_guesser(text::read_file(data_dir / "one.aut")));
  // Guessers must be total.
  CHECK(kind_of([] { text::parse_guesser("alphabet 2\nstates 1\nstart 0\noutput 0 1\ntrans 0 0 0\n"); }) ==
        ErrorKind::parse);
}

TEST_CASE("chains and families") {
  const OpenChain c = text::load_chain(data_dir / "chain_no11.txt");
  CHECK(c.theta == Ordinal::finite(2));
  CHECK(equivalent(d_theta(c), fixtures::no11()));
  const OpenChain one = text::load_chain(data_dir / "chain_one.txt");
  CHECK(equivalent(d_theta(one), fixtures::one()));

  const fs::path dir = fs::temp_directory_path() / "guess_text_format_test";
  fs::remove_all(dir);
  const fs::path saved = text::save_chain(c, dir);
  CHECK(equivalent(d_theta(text::load_chain(saved)), fixtures::no11()));
  fs::remove_all(dir);

  const OracleFamily f = text::load_family(data_dir / "family_alternating.txt");
  REQUIRE(std::holds_alternative<ExplicitFamily>(f));
  CHECK(std::get<ExplicitFamily>(f).cycle.size() == 2);
  CHECK(std::holds_alternative<CylinderFamily>(text::load_family(data_dir / "family_cylinders.txt")));
}

TEST_CASE("dot output") {
  const std::string dot = text::to_dot(fixtures::one());
  CHECK(dot.rfind("digraph", 0) == 0);
  const RankedGuesser rg = synthesize(fixtures::one());
  CHECK(text::to_dot(rg.guesser, &rg.bound).find("H=1") != std::string::npos);
}

TEST_CASE("property: format and parse round trip") {
  testing::for_each_seed(1, 100, [](std::mt19937_64& rng) {
    const ParitySet s = corpus::random_parity_set(rng, binary);
    const auto back = text::parse_automaton(text::format_automaton(s));
    CHECK_FALSE(back.completed);
    CHECK(back.set == s);

    const MooreGuesser g = corpus::random_guesser(rng, binary);
    CHECK(text::parse_guesser(text::format_guesser(g)).guesser == g);
    if (is_guessable(s)) {
      const RankedGuesser rg = synthesize(s);
      const auto parsed = text::parse_guesser(text::format_guesser(rg));
      REQUIRE(parsed.ranked.has_value());
      CHECK(*parsed.ranked == rg);
    }
  });
}
