// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every check is exact; the time limit is part of each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "guess/based.hpp"
#include "guess/cli.hpp"
#include "guess/corpus.hpp"
#include "guess/diff_hierarchy.hpp"
#include "guess/fixtures.hpp"
#include "guess/guesser.hpp"
#include "guess/remainder.hpp"

using namespace guess;

namespace {

const Alphabet binary{2};
constexpr std::uint64_t corpus_seed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string note;  // sizes of what was checked

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// The seeded corpus shared by criteria 3, 4 and 6.
std::vector<ParitySet> corpus_sets() {
  corpus::Rng rng(corpus_seed);
  std::vector<ParitySet> out;
  for (int i = 0; i < 500; ++i) out.push_back(corpus::random_parity_set(rng, binary, 6, 3));
  return out;
}

bool cli_reports_agreement(const std::vector<std::string>& args, std::size_t tables, Outcome& o) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  const std::string text = "\n" + out.str();
  const auto has = [&](const std::string& line) { return text.find("\n" + line + "\n") != std::string::npos; };
  const bool ok = code == exit_holds && has("tables=" + std::to_string(tables)) && has("ranks=PASS") &&
                  has("guesses=PASS");
  o.require(ok, "oracle check: " + out.str() + err.str());
  return ok;
}

Outcome oracle_equivalence() {
  Outcome o;
  cli_reports_agreement({"oracle", "check", "--k", "2", "--d", "3", "--max-length", "4"}, 256, o);
  cli_reports_agreement(
      {"oracle", "check", "--k", "3", "--d", "2", "--max-length", "4", "--sample", "200", "--seed", "1"}, 200, o);
  return o;
}

Outcome fixture_ranks() {
  Outcome o;
  const std::vector<std::pair<ParitySet, Rank>> expected = {
      {fixtures::empty(), Ordinal::finite(1)}, {fixtures::full(), Ordinal::finite(1)},
      {fixtures::cyl1(), Ordinal::finite(2)},  {fixtures::one(), Ordinal::finite(2)},
      {fixtures::no11(), Ordinal::finite(3)},  {fixtures::inf1(), std::nullopt},
  };
  const auto names = fixtures::all();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& [s, r] = expected[i];
    o.require(mind_change_rank(s) == r, names[i].first + " rank " + to_string(mind_change_rank(s)));
    o.require(mind_change_rank(complement(s)) == r, names[i].first + " complement rank");
  }
  return o;
}

Outcome guessability_consistency(const std::vector<ParitySet>& sets) {
  Outcome o;
  corpus::Rng rng(corpus_seed + 1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const bool g = is_guessable(sets[i]);
    o.require(g == is_guessable(complement(sets[i])), "complement verdict differs, set " + std::to_string(i));
    const ParitySet d = corpus::duplicate_state(rng, sets[i]);
    o.require(equivalent(d, sets[i]), "duplicate not equivalent, set " + std::to_string(i));
    o.require(g == is_guessable(d), "duplicate verdict differs, set " + std::to_string(i));
  }
  return o;
}

Outcome rank_characterisation(const std::vector<ParitySet>& sets) {
  Outcome o;
  std::size_t guessable = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const RemainderTrace t = remainder_chain(sets[i]);
    if (!is_guessable(t)) continue;
    ++guessable;
    const std::string tag = ", set " + std::to_string(i);
    const RankedGuesser rg = synthesize(sets[i]);
    const Rank rank = mind_change_rank(t);
    o.require(rank.has_value() && rg.codomain == *rank, "codomain is not the rank" + tag);
    o.require(check_bound(rg), "check_bound" + tag);
    o.require(!divergence_witness(rg.guesser, sets[i]).has_value(), "witness found" + tag);
    const std::uint64_t r = rank->to_finite();
    o.require(r >= 1 && graph::any(t.chain[r - 1]), "stage before the rank is empty" + tag);
  }
  o.require(guessable > 0, "no guessable corpus sets");
  o.note = std::to_string(guessable) + " guessable sets";

  // Minimality: any correct bounded guesser needs codomain at least the rank.
  corpus::Rng rng(corpus_seed + 2);
  std::size_t found = 0;
  for (std::size_t tries = 0; found < 50 && tries < 200000; ++tries) {
    const ParitySet& s = sets[corpus::uniform(rng, 0, sets.size() - 1)];
    if (!is_guessable(s)) continue;
    RankedGuesser rg = synthesize(s);
    for (std::size_t edits = corpus::uniform(rng, 1, 3); edits > 0; --edits) rg = corpus::perturb(rng, rg);
    if (rg == synthesize(s) || !check_bound(rg) || divergence_witness(rg.guesser, s)) continue;
    ++found;
    o.require(!rank_less(rg.codomain, mind_change_rank(s)), "perturbed guesser beats the rank");
  }
  o.require(found == 50, "only " + std::to_string(found) + " certified perturbed guessers");
  o.note += ", " + std::to_string(found) + " perturbed guessers";
  return o;
}

Outcome chain_round_trips() {
  Outcome o;
  corpus::Rng rng(corpus_seed + 3);
  for (int i = 0; i < 200; ++i) {
    const std::string tag = ", chain " + std::to_string(i);
    const OpenChain c = corpus::random_chain(rng, binary, 3, 4);
    const ParitySet d = d_theta(c);
    const RankedGuesser rg = chain_to_guesser(c);
    o.require(rg.codomain == succ(c.theta) && check_bound(rg), "check_bound" + tag);
    o.require(!divergence_witness(rg.guesser, d).has_value(), "witness found" + tag);
    o.require(equivalent(d_theta(guesser_to_chain(rg)), d), "round trip differs" + tag);
  }
  return o;
}

Outcome witnesses(const std::vector<ParitySet>& sets) {
  Outcome o;
  corpus::Rng rng(corpus_seed + 4);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (is_guessable(sets[i])) continue;
    for (int j = 0; j < 20; ++j) {
      const MooreGuesser g = corpus::random_guesser(rng, binary, 4);
      const auto w = divergence_witness(g, sets[i]);
      ++checked;
      o.require(w.has_value() && !verify_on_up(g, sets[i], *w), "no failing witness, set " + std::to_string(i));
    }
  }
  o.require(checked > 0, "no non-guessable corpus sets");
  o.note = std::to_string(checked / 20) + " non-guessable sets";
  return o;
}

Outcome normal_forms() {
  Outcome o;
  const auto points = canonical_up_words(binary, 100);
  for (const auto& [name, s] : fixtures::all()) {
    if (!is_guessable(s)) continue;
    for (const ParitySet& side : {s, complement(s)}) {
      const RankedGuesser rg = synthesize(side);
      const RankedGuesser nb = normalize_bounds(rg);
      o.require(parity_tracks_output(nb), name + ": parity does not track output");
      o.require(nb.bound[nb.guesser.start()] == rg.bound[rg.guesser.start()], name + ": root bound moved");
      const RankedGuesser a = make_anticongruent(rg);
      o.require(check_bound(a), name + ": anticongruent bound invalid");
      for (const auto& w : points) o.require(congruence_dichotomy_holds(a, w), name + ": dichotomy at " + to_string(w));
    }
  }
  return o;
}

Outcome based_guessing() {
  Outcome o;
  const auto points = canonical_up_words(binary, 200);
  const auto sets = fixtures::all();
  std::vector<std::pair<std::string, OracleFamily>> families;
  for (const auto& [a, sa] : sets) {
    families.emplace_back(a, ExplicitFamily{{}, {sa}});
    for (const auto& [b, sb] : sets) {
      if (a < b) families.emplace_back(a + "," + b, ExplicitFamily{{sb}, {sa, sb}});
    }
  }
  const MooreGuesser last = last_bit_guesser();
  std::size_t agreeing = 0;
  for (const auto& [fname, f] : families) {
    for (const auto& [sname, s] : sets) {
      for (const auto& w : points) {
        if (!limsup_liminf_check(f, s, w)) continue;
        ++agreeing;
        o.require(verify_based(last, f, s, w), fname + " / " + sname + " at " + to_string(w));
      }
    }
  }
  o.require(agreeing > 0, "no family agrees with any set");
  o.note = std::to_string(agreeing) + " agreeing (family, set, point) triples";
  const auto first = canonical_up_words(binary, 100);
  for (const auto& s : {fixtures::one(), fixtures::no11()}) {
    const MooreGuesser sim = cylinder_simulator(synthesize(s).guesser);
    for (const auto& w : first) o.require(verify_based(sim, CylinderFamily{binary}, s, w), "simulation at " + to_string(w));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<ParitySet> sets = corpus_sets();
  struct Criterion {
    const char* name;
    double seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"oracle equivalence on clopen tables", 30, oracle_equivalence},
      {"fixture rank table", 1, fixture_ranks},
      {"guessability respects complement and equivalence", 60, [&] { return guessability_consistency(sets); }},
      {"canonical guesser meets its rank, and the rank is minimal", 60, [&] { return rank_characterisation(sets); }},
      {"chain / guesser round trips", 120, chain_round_trips},
      {"witnesses against non-guessable sets", 60, [&] { return witnesses(sets); }},
      {"normalized and anticongruent bounds", 30, normal_forms},
      {"guessing from oracle answers", 30, based_guessing},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(took < criteria[i].seconds, "took " + std::to_string(took) + " s");
    const std::string& extra = o.pass ? o.note : o.detail;
    std::printf("%s  %zu  %-58s %.2fs%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, took,
                extra.empty() ? "" : "  ", extra.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
