#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "guess/based.hpp"
#include "guess/diff_hierarchy.hpp"
#include "guess/guesser.hpp"
#include "guess/space.hpp"

// Line-oriented text formats. `#` starts a comment; blank lines are
// ignored. Errors are Error(parse) with the offending line number.
//
// Automaton:
//   alphabet 2
//   states 3
//   start 0
//   parity max even        (optional; any of max|min, even|odd)
//   priority <state> <n>
//   trans <state> <symbol> <state>
//
// Guesser: alphabet/states/start/trans as above, plus
//   output <state> <0|1>
//   bound <state> <ordinal>   (optional, every state or none)
//   codomain <ordinal>        (optional; default max bound + 1)
//
// Chain: `theta <n>` then `set <i> <automaton file>` for i < n.
// Family: `family cylinders <k>`, or `family explicit` followed by
// `prefix <file>` and `cycle <file>` lines in order.
// Paths inside chain and family files are relative to that file.
namespace guess::text {

struct ParsedAutomaton {
  ParitySet set;
  bool completed = false;  // missing transitions went to an added rejecting sink
};

ParsedAutomaton parse_automaton(std::string_view text);
std::string format_automaton(const ParitySet& s);

struct ParsedGuesser {
  MooreGuesser guesser;
  std::optional<RankedGuesser> ranked;  // when bounds were given
};

ParsedGuesser parse_guesser(std::string_view text);
std::string format_guesser(const MooreGuesser& g);
std::string format_guesser(const RankedGuesser& rg);

// True iff the text has `output` lines.
bool looks_like_guesser(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// `fixture:<name>` loads a built-in set by its fixture name (e.g.
// fixture:F_ONE); anything else is a path to an automaton file.
ParsedAutomaton load_automaton(const std::string& source);

OpenChain load_chain(const std::filesystem::path& path);
// Writes set_<i>.aut files and chain.txt into `dir`; returns chain.txt.
std::filesystem::path save_chain(const OpenChain& chain, const std::filesystem::path& dir);

OracleFamily load_family(const std::filesystem::path& path);

std::string to_dot(const ParitySet& s);
std::string to_dot(const MooreGuesser& g, const std::vector<Ordinal>* bound = nullptr);

}  // namespace guess::text
