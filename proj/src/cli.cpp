#include "guess/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "guess/based.hpp"
#include "guess/diff_hierarchy.hpp"
#include "guess/error.hpp"
#include "guess/fixtures.hpp"
#include "guess/guesser.hpp"
#include "guess/oracle.hpp"
#include "guess/remainder.hpp"
#include "guess/text_format.hpp"

namespace guess {

namespace {

namespace fs = std::filesystem;

class Report {
 public:
  Report(std::ostream& out, bool human) : out_(out), human_(human) {}

  template <typename T>
  void kv(std::string_view key, const T& value) {
    out_ << key << (human_ ? ": " : "=") << value << "\n";
  }
  void kv(std::string_view key, bool value) { kv(key, std::string_view(value ? "true" : "false")); }
  void line(std::string_view text) { out_ << text << "\n"; }
  void raw(std::string_view text) { out_ << text; }

 private:
  std::ostream& out_;
  bool human_;
};

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string rank_text(const Rank& r) { return r ? to_string(*r) : std::string("NOT_GUESSABLE"); }

std::string state_set(const StateMask& m, const std::vector<State>& original) {
  std::string s = "{";
  bool first = true;
  for (State q = 0; q < m.size(); ++q) {
    if (!m[q]) continue;
    if (!first) s += ',';
    s += std::to_string(original[q]);
    first = false;
  }
  return s + "}";
}

struct LoadedGuesser {
  MooreGuesser guesser;
  std::optional<RankedGuesser> ranked;
};

LoadedGuesser load_guesser(const std::string& path) {
  try {
    auto parsed = text::parse_guesser(text::read_file(path));
    return {std::move(parsed.guesser), std::move(parsed.ranked)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

ParitySet load_set(const std::string& source, Report& report) {
  auto parsed = text::load_automaton(source);
  if (parsed.completed) report.kv("completed_with_sink", true);
  return std::move(parsed.set);
}

void print_stages(Report& report, const RemainderTrace& trace) {
  for (std::size_t i = 0; i < trace.chain.size(); ++i) {
    report.line("Q[" + std::to_string(i) + "] = " + state_set(trace.chain[i], trace.original_state));
  }
}

// ---- subcommands ----------------------------------------------------------

int cmd_rank(Report& report, const std::string& input, bool trace_stages) {
  const ParitySet s = load_set(input, report);
  const RemainderTrace trace = remainder_chain(s);
  const Rank r = mind_change_rank(trace);
  report.kv("guessable", r.has_value());
  report.kv("rank", rank_text(r));
  report.kv("alpha_S", to_string(trace.alpha));
  if (trace_stages) print_stages(report, trace);
  return exit_holds;
}

int cmd_remainder(Report& report, const std::string& input) {
  const ParitySet s = load_set(input, report);
  const RemainderTrace trace = remainder_chain(s);
  print_stages(report, trace);
  report.line("alpha(S) = " + to_string(trace.alpha));
  report.line(std::string("S_infty_empty = ") + (is_guessable(trace) ? "true" : "false"));
  // Stages whose words are nonempty while no infinite branch stays inside.
  for (std::size_t i = 0; i < trace.chain.size(); ++i) {
    const auto e = stage_emptiness(trace, Ordinal::finite(i));
    if (!e.words_empty && e.closure_empty) report.kv("thin_stage", i);
  }
  return exit_holds;
}

int cmd_synthesize(Report& report, const std::string& input, const std::string& output) {
  const ParitySet s = load_set(input, report);
  if (!is_guessable(s)) {
    report.kv("guessable", false);
    return exit_counterexample;
  }
  const RankedGuesser rg = synthesize(s);
  const auto witness = divergence_witness(rg.guesser, s);
  if (output.empty()) {
    report.raw(text::format_guesser(rg));
  } else {
    text::write_file(output, text::format_guesser(rg));
    report.kv("rank", to_string(rg.codomain));
    report.kv("states", rg.guesser.size());
    report.kv("bound_ok", check_bound(rg));
    report.kv("witness", witness ? to_string(*witness) : std::string("NONE"));
    report.kv("written", output);
  }
  return witness || !check_bound(rg) ? exit_counterexample : exit_holds;
}

int cmd_verify(Report& report, const std::string& guesser_path, const std::string& set_path, std::size_t words,
               bool witness_only) {
  const LoadedGuesser g = load_guesser(guesser_path);
  const ParitySet s = load_set(set_path, report);
  require_same_alphabet(g.guesser.alphabet(), s.alphabet(), "guesser and set");
  const auto witness = divergence_witness(g.guesser, s);
  bool ok = !witness;
  if (!witness_only) {
    std::size_t failures = 0;
    for (const auto& w : canonical_up_words(s.alphabet(), words)) failures += verify_on_up(g.guesser, s, w) ? 0 : 1;
    report.kv("checked_words", words);
    report.kv("up_failures", failures);
    if (g.ranked) {
      const bool bound_ok = check_bound(*g.ranked);
      report.kv("bound_ok", bound_ok);
      ok = ok && bound_ok;
    }
  }
  report.kv("witness", witness ? to_string(*witness) : std::string("NONE"));
  return ok ? exit_holds : exit_counterexample;
}

int cmd_diff_build(Report& report, const std::string& chain_path, const std::string& output) {
  const OpenChain chain = text::load_chain(chain_path);
  const ParitySet d = d_theta(chain);
  if (output.empty()) {
    report.raw(text::format_automaton(d));
    return exit_holds;
  }
  text::write_file(output, text::format_automaton(d));
  report.kv("theta", to_string(chain.theta));
  report.kv("states", d.size());
  report.kv("written", output);
  return exit_holds;
}

int cmd_diff_extract(Report& report, const std::string& guesser_path, const std::string& dir,
                     const std::string& against) {
  const LoadedGuesser g = load_guesser(guesser_path);
  if (!g.ranked) throw Error(ErrorKind::invalid_argument, "diff extract needs bound lines");
  const OpenChain chain = guesser_to_chain(*g.ranked);
  report.kv("theta", to_string(chain.theta));
  report.kv("written", text::save_chain(chain, dir).string());
  if (!against.empty()) {
    const ParitySet s = load_set(against, report);
    const bool same = equivalent(d_theta(chain), s);
    report.kv("equivalent", same);
    return same ? exit_holds : exit_counterexample;
  }
  return exit_holds;
}

void report_chain(Report& report, std::string_view key, const std::optional<OpenChain>& chain) {
  report.kv(key, chain ? std::to_string(chain->sets.size()) : std::string("NONE"));
}

int cmd_classify(Report& report, const std::string& input, const std::string& dir) {
  const ParitySet s = load_set(input, report);
  const Classification c = classify(s);
  report.kv("rank", rank_text(c.rank));
  if (c.rank) report.kv("level", to_string(c.level));
  report.kv("side", to_string(c.side));
  report_chain(report, "chain", c.chain);
  report_chain(report, "complement_chain", c.complement_chain);
  if (!dir.empty()) {
    if (c.chain) report.kv("written", text::save_chain(*c.chain, fs::path(dir) / "self").string());
    if (c.complement_chain) {
      report.kv("written", text::save_chain(*c.complement_chain, fs::path(dir) / "complement").string());
    }
  }
  return c.rank && c.side == Side::neither ? exit_counterexample : exit_holds;
}

int cmd_convert_to_chain(Report& report, const std::string& input, const std::string& dir) {
  const ParitySet s = load_set(input, report);
  const Classification c = classify(s);
  report.kv("rank", rank_text(c.rank));
  report.kv("side", to_string(c.side));
  if (c.side == Side::neither) return exit_counterexample;
  const bool self = c.chain.has_value();
  const OpenChain& chain = self ? *c.chain : *c.complement_chain;
  const ParitySet target = self ? s : complement(s);
  const bool roundtrip = equivalent(d_theta(chain), target);
  const RankedGuesser back = chain_to_guesser(chain);
  const bool bound_ok = check_bound(back);
  report.kv("level", to_string(c.level));
  report.kv("chain_length", chain.sets.size());
  report.kv("chain_side", self ? "SELF" : "COMPLEMENT");
  report.kv("roundtrip_equivalent", roundtrip);
  report.kv("bound_ok", bound_ok);
  report.kv("written", text::save_chain(chain, dir).string());
  return roundtrip && bound_ok ? exit_holds : exit_counterexample;
}

int cmd_convert_to_guesser(Report& report, const std::string& input, const std::string& output) {
  const OpenChain chain = text::load_chain(input);
  const ParitySet s = d_theta(chain);
  const RankedGuesser rg = chain_to_guesser(chain);
  const bool bound_ok = check_bound(rg);
  const auto witness = divergence_witness(rg.guesser, s);
  // Back to a chain: directly when G(empty) = 0, else through the complement.
  const bool root_zero = !rg.guesser.output(rg.guesser.start());
  const OpenChain back = guesser_to_chain(root_zero ? rg : flip_outputs(rg));
  const bool roundtrip = equivalent(d_theta(back), root_zero ? s : complement(s));
  text::write_file(output, text::format_guesser(rg));
  report.kv("codomain", to_string(rg.codomain));
  report.kv("states", rg.guesser.size());
  report.kv("bound_ok", bound_ok);
  report.kv("witness", witness ? to_string(*witness) : std::string("NONE"));
  report.kv("roundtrip_equivalent", roundtrip);
  report.kv("written", output);
  return bound_ok && !witness && roundtrip ? exit_holds : exit_counterexample;
}

int cmd_based_verify(Report& report, const std::string& family_path, const std::string& set_path,
                     const std::string& guesser_path, const std::string& simulate_path, std::size_t words) {
  const OracleFamily family = text::load_family(family_path);
  const ParitySet s = load_set(set_path, report);
  require_same_alphabet(family_alphabet(family), s.alphabet(), "family and set");
  MooreGuesser g = last_bit_guesser();
  std::string which = "last_bit";
  if (!simulate_path.empty()) {
    if (!std::holds_alternative<CylinderFamily>(family)) {
      throw Error(ErrorKind::invalid_argument, "--simulate needs a cylinders family");
    }
    const LoadedGuesser inner = load_guesser(simulate_path);
    require_same_alphabet(inner.guesser.alphabet(), s.alphabet(), "simulated guesser and set");
    g = cylinder_simulator(inner.guesser);
    which = "cylinder_simulation";
  } else if (!guesser_path.empty()) {
    g = load_guesser(guesser_path).guesser;
    which = guesser_path;
  }
  const bool explicit_family = std::holds_alternative<ExplicitFamily>(family);
  std::size_t failures = 0;
  std::size_t limits_hold = 0;
  std::optional<UPWord> first_failure;
  for (const auto& w : canonical_up_words(s.alphabet(), words)) {
    if (!verify_based(g, family, s, w)) {
      ++failures;
      if (!first_failure) first_failure = w;
    }
    if (explicit_family && limsup_liminf_check(family, s, w)) ++limits_hold;
  }
  report.kv("guesser", which);
  report.kv("checked_words", words);
  if (explicit_family) report.kv("limsup_liminf_hold", limits_hold);
  report.kv("failures", failures);
  report.kv("first_failure", first_failure ? to_string(*first_failure) : std::string("NONE"));
  return failures == 0 ? exit_holds : exit_counterexample;
}

int cmd_oracle_check(Report& report, std::uint32_t k, std::size_t d, std::optional<std::size_t> max_length,
                     std::size_t sample, std::uint64_t seed) {
  const auto sweep = oracle::sweep(k, d, max_length.value_or(d + 1), sample, seed);
  // The clopen fixtures, by automaton and by table, against their known ranks.
  struct ClopenFixture {
    ParitySet set;
    ClopenTable table;
    std::size_t rank;
  };
  const Alphabet binary(2);
  const std::vector<ClopenFixture> clopen = {
      {fixtures::empty(), ClopenTable(binary, 0, {false}), 1},
      {fixtures::full(), ClopenTable(binary, 0, {true}), 1},
      {fixtures::cyl1(), cylinder(binary, {1}), 2},
  };
  bool fixtures_ok = true;
  for (const auto& f : clopen) {
    const auto expected = Rank(Ordinal::finite(f.rank));
    fixtures_ok = fixtures_ok && mind_change_rank(f.set) == expected &&
                  oracle::TruncatedTree(f.table).least_empty_stage() == f.rank;
  }
  report.kv("tables", sweep.tables);
  report.kv("ranks", pass(sweep.rank_failures == 0));
  report.kv("guesses", pass(sweep.guess_failures == 0));
  report.kv("least_empty_stage", pass(sweep.stage_failures == 0));
  report.kv("fixture_ranks", pass(fixtures_ok));
  report.kv("max_rank", sweep.max_rank);
  report.kv("thin_stage_tables", sweep.thin_stage_tables);
  return sweep.ok() && fixtures_ok ? exit_holds : exit_counterexample;
}

int cmd_export_dot(Report& report, const std::string& input, const std::string& output) {
  std::string dot;
  const bool is_file = input.rfind("fixture:", 0) != 0;
  if (is_file && text::looks_like_guesser(text::read_file(input))) {
    const LoadedGuesser g = load_guesser(input);
    dot = text::to_dot(g.guesser, g.ranked ? &g.ranked->bound : nullptr);
  } else {
    dot = text::to_dot(load_set(input, report));
  }
  if (output.empty()) {
    report.raw(dot);
  } else {
    text::write_file(output, dot);
    report.kv("written", output);
  }
  return exit_holds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guessable sets, remainder chains and mind-change bounds on parity automata", "guess"};
  app.require_subcommand(1);
  std::string format = "kv";
  app.add_option("--format", format, "Output style")->check(CLI::IsMember({"kv", "human"}));

  std::string input, second, output, extra, simulate;
  bool trace = false;
  std::size_t words = 100;
  std::string to;
  std::uint32_t k = 2;
  std::size_t d = 3;
  std::optional<std::size_t> max_length;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  const auto positive = CLI::Range(std::size_t{1}, std::size_t{1'000'000});

  auto* rank = app.add_subcommand("rank", "Mind-change rank of a set");
  rank->add_option("automaton", input, "Automaton file or fixture:<name>")->required();
  rank->add_flag("--trace", trace, "Print the remainder stages");

  auto* remainder = app.add_subcommand("remainder", "Remainder chain on states");
  remainder->add_option("automaton", input)->required();
  remainder->add_flag("--trace", trace, "Print the remainder stages (always on)");

  auto* synth = app.add_subcommand("synthesize", "Canonical guesser with its bound");
  synth->add_option("automaton", input)->required();
  synth->add_option("-o,--output", output, "Write the guesser here and print a summary");

  auto* verify = app.add_subcommand("verify", "Certify that a guesser guesses a set");
  verify->add_option("guesser", input)->required();
  verify->add_option("automaton", second)->required();
  verify->add_option("--words", words, "Canonical UP words to spot-check")->check(positive);

  auto* witness = app.add_subcommand("witness", "A point where a guesser fails, if any");
  witness->add_option("guesser", input)->required();
  witness->add_option("automaton", second)->required();

  auto* diff = app.add_subcommand("diff", "Difference hierarchy");
  diff->require_subcommand(1);
  auto* build = diff->add_subcommand("build", "Automaton of D_theta of a chain");
  build->add_option("chain", input)->required();
  build->add_option("-o,--output", output);
  auto* extract = diff->add_subcommand("extract", "Open chain from a ranked guesser with G(empty) = 0");
  extract->add_option("guesser", input)->required();
  extract->add_option("-o,--output", output, "Directory for the chain")->required();
  extract->add_option("--against", extra, "Check D_theta of the chain against this set");

  auto* classify_cmd = app.add_subcommand("classify", "Place a set in the difference hierarchy");
  classify_cmd->add_option("automaton", input)->required();
  classify_cmd->add_option("-o,--output", output, "Directory for the witnessing chains");

  auto* convert = app.add_subcommand("convert", "Convert between sets, chains and guessers");
  convert->add_option("input", input)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"chain", "guesser"}));
  convert->add_option("-o,--output", output, "Chain directory or guesser file")->required();

  auto* based = app.add_subcommand("based", "Guessing from oracle answers");
  based->require_subcommand(1);
  auto* based_verify = based->add_subcommand("verify", "Check a bit guesser against a set");
  based_verify->add_option("family", input)->required();
  based_verify->add_option("automaton", second)->required();
  auto* guesser_opt = based_verify->add_option("--guesser", extra, "Bit guesser file (default: last bit)");
  based_verify->add_option("--simulate", simulate, "Guesser to run on decoded cylinder answers")
      ->excludes(guesser_opt);
  based_verify->add_option("--words", words)->check(positive);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-validation");
  oracle_cmd->require_subcommand(1);
  auto* check = oracle_cmd->add_subcommand("check", "Compare the automaton pipeline with the tree oracle");
  check->add_option("--k", k, "Alphabet size")->check(CLI::Range(2u, 36u));
  check->add_option("--d", d, "Table depth");
  check->add_option("--max-length", max_length, "Compare words up to this length (default d+1)");
  check->add_option("--sample", sample, "Random tables to draw (0: all)");
  check->add_option("--seed", seed);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of an automaton or guesser");
  dot->add_option("input", input)->required();
  dot->add_option("-o,--output", output);

  std::vector<const char*> argv{"guess"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }

  Report report(out, format == "human");
  try {
    if (rank->parsed()) return cmd_rank(report, input, trace);
    if (remainder->parsed()) return cmd_remainder(report, input);
    if (synth->parsed()) return cmd_synthesize(report, input, output);
    if (verify->parsed()) return cmd_verify(report, input, second, words, false);
    if (witness->parsed()) return cmd_verify(report, input, second, words, true);
    if (build->parsed()) return cmd_diff_build(report, input, output);
    if (extract->parsed()) return cmd_diff_extract(report, input, output, extra);
    if (classify_cmd->parsed()) return cmd_classify(report, input, output);
    if (convert->parsed()) {
      return to == "chain" ? cmd_convert_to_chain(report, input, output)
                           : cmd_convert_to_guesser(report, input, output);
    }
    if (based_verify->parsed()) return cmd_based_verify(report, input, second, extra, simulate, words);
    if (check->parsed()) return cmd_oracle_check(report, k, d, max_length, sample, seed);
    if (dot->parsed()) return cmd_export_dot(report, input, output);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_input_error;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace guess
