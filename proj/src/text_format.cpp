#include "guess/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "guess/error.hpp"
#include "guess/fixtures.hpp"

namespace guess::text {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
  std::string_view rest_after(std::size_t i) const;  // raw text from token i on
  std::string_view raw;
};

std::string_view Line::rest_after(std::size_t i) const {
  const auto pos = static_cast<std::size_t>(tokens[i].data() - raw.data());
  auto rest = raw.substr(pos);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.remove_suffix(1);
  return rest;
}

// Line 0 marks a whole-file problem.
[[noreturn]] void fail(std::size_t line, const std::string& message) {
  if (line == 0) throw Error(ErrorKind::parse, message);
  throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}, raw};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t number(const Line& line, std::size_t i) {
  if (i >= line.tokens.size()) fail(line.number, "missing argument");
  const auto tok = line.tokens[i];
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line.number, "expected a number, got '" + std::string(tok) + "'");
  }
  return v;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    fail(line.number, "'" + std::string(line.tokens[0]) + "' takes " + std::to_string(n - 1) + " arguments");
  }
}

// The parts shared by automaton and guesser files.
struct Skeleton {
  std::optional<std::uint32_t> alphabet;
  std::optional<std::size_t> states;
  std::optional<State> start;
  std::vector<std::optional<State>> trans;

  std::size_t n(const Line& line) const {
    if (!alphabet || !states) fail(line.number, "alphabet and states must come first");
    return *states;
  }
  State state(const Line& line, std::size_t i) const {
    const auto q = number(line, i);
    if (q >= n(line)) fail(line.number, "state " + std::to_string(q) + " out of range");
    return static_cast<State>(q);
  }

  // Returns true if the line was a skeleton line.
  bool take(const Line& line) {
    const auto key = line.tokens[0];
    if (key == "alphabet") {
      expect_arity(line, 2);
      if (alphabet) fail(line.number, "duplicate alphabet");
      const auto k = number(line, 1);
      if (k < 2 || k > Alphabet::max_size) fail(line.number, "alphabet size must be 2..36");
      alphabet = static_cast<std::uint32_t>(k);
    } else if (key == "states") {
      expect_arity(line, 2);
      if (states) fail(line.number, "duplicate states");
      const auto s = number(line, 1);
      if (s == 0 || s > 1'000'000) fail(line.number, "state count out of range");
      states = static_cast<std::size_t>(s);
    } else if (key == "start") {
      expect_arity(line, 2);
      if (start) fail(line.number, "duplicate start");
      start = state(line, 1);
    } else if (key == "trans") {
      expect_arity(line, 4);
      const State q = state(line, 1);
      const auto a = number(line, 2);
      if (a >= *alphabet) fail(line.number, "symbol " + std::to_string(a) + " out of range");
      const State r = state(line, 3);
      trans.resize(n(line) * *alphabet);
      auto& slot = trans[q * *alphabet + a];
      if (slot) fail(line.number, "duplicate transition");
      slot = r;
    } else {
      return false;
    }
    return true;
  }

  void finish() {
    if (!alphabet) fail(0, "missing alphabet");
    if (!states) fail(0, "missing states");
    if (!start) fail(0, "missing start");
    trans.resize(*states * *alphabet);
  }
};

void require_all(std::size_t count, std::size_t states, const char* what) {
  if (count != states) fail(0, std::string("every state needs a ") + what + " line");
}

}  // namespace

ParsedAutomaton parse_automaton(std::string_view text) {
  Skeleton sk;
  std::vector<std::optional<Priority>> prio;
  bool max_kind = true;
  bool even = true;
  for (const auto& line : split_lines(text)) {
    if (sk.take(line)) continue;
    const auto key = line.tokens[0];
    if (key == "priority") {
      expect_arity(line, 3);
      const State q = sk.state(line, 1);
      prio.resize(sk.n(line));
      if (prio[q]) fail(line.number, "duplicate priority");
      const auto p = number(line, 2);
      if (p > 1'000'000) fail(line.number, "priority too large");
      prio[q] = static_cast<Priority>(p);
    } else if (key == "parity") {
      expect_arity(line, 3);
      if (line.tokens[1] != "max" && line.tokens[1] != "min") fail(line.number, "parity takes max|min");
      if (line.tokens[2] != "even" && line.tokens[2] != "odd") fail(line.number, "parity takes even|odd");
      max_kind = line.tokens[1] == "max";
      even = line.tokens[2] == "even";
    } else if (key == "output" || key == "bound" || key == "codomain") {
      fail(line.number, "'" + std::string(key) + "' belongs in a guesser file");
    } else {
      fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  sk.finish();
  prio.resize(*sk.states);
  std::vector<Priority> priorities;
  for (const auto& p : prio) {
    if (!p) fail(0, "every state needs a priority line");
    priorities.push_back(*p);
  }
  // Convert to max-even. For min conditions reflect through an even
  // ceiling, which keeps each priority's parity.
  Priority top = 0;
  for (Priority p : priorities) top = std::max(top, p);
  if (top % 2 != 0) ++top;
  for (auto& p : priorities) {
    if (!max_kind) p = top - p;
    if (!even) p += 1;
  }
  const std::uint32_t k = *sk.alphabet;
  const auto sink = static_cast<State>(*sk.states);
  bool completed = false;
  std::vector<State> trans;
  for (const auto& t : sk.trans) {
    completed = completed || !t;
    trans.push_back(t ? *t : sink);
  }
  if (completed) {
    for (std::uint32_t a = 0; a < k; ++a) trans.push_back(sink);
    priorities.push_back(1);
  }
  return {ParitySet(Alphabet(k), *sk.start, std::move(trans), std::move(priorities)), completed};
}

std::string format_automaton(const ParitySet& s) {
  std::ostringstream os;
  const std::uint32_t k = s.alphabet().size();
  os << "alphabet " << k << "\nstates " << s.size() << "\nstart " << s.start() << "\n";
  for (State q = 0; q < s.size(); ++q) os << "priority " << q << ' ' << s.priority(q) << "\n";
  for (State q = 0; q < s.size(); ++q) {
    for (Symbol a = 0; a < k; ++a) os << "trans " << q << ' ' << a << ' ' << s.next(q, a) << "\n";
  }
  return os.str();
}

ParsedGuesser parse_guesser(std::string_view text) {
  Skeleton sk;
  std::vector<std::optional<std::uint8_t>> out;
  std::vector<std::optional<Ordinal>> bound;
  std::optional<Ordinal> codomain;
  for (const auto& line : split_lines(text)) {
    if (sk.take(line)) continue;
    const auto key = line.tokens[0];
    if (key == "output") {
      expect_arity(line, 3);
      const State q = sk.state(line, 1);
      out.resize(sk.n(line));
      if (out[q]) fail(line.number, "duplicate output");
      const auto b = number(line, 2);
      if (b > 1) fail(line.number, "output must be 0 or 1");
      out[q] = static_cast<std::uint8_t>(b);
    } else if (key == "bound") {
      if (line.tokens.size() < 3) fail(line.number, "bound takes a state and an ordinal");
      const State q = sk.state(line, 1);
      bound.resize(sk.n(line));
      if (bound[q]) fail(line.number, "duplicate bound");
      try {
        bound[q] = parse_ordinal(line.rest_after(2));
      } catch (const Error& e) {
        fail(line.number, e.what());
      }
    } else if (key == "codomain") {
      if (line.tokens.size() < 2) fail(line.number, "codomain takes an ordinal");
      if (codomain) fail(line.number, "duplicate codomain");
      try {
        codomain = parse_ordinal(line.rest_after(1));
      } catch (const Error& e) {
        fail(line.number, e.what());
      }
    } else if (key == "priority" || key == "parity") {
      fail(line.number, "'" + std::string(key) + "' belongs in an automaton file");
    } else {
      fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  sk.finish();
  std::vector<State> trans;
  for (const auto& t : sk.trans) {
    if (!t) fail(0, "guesser transitions must be total");
    trans.push_back(*t);
  }
  out.resize(*sk.states);
  std::vector<std::uint8_t> outputs;
  for (const auto& o : out) {
    if (!o) fail(0, "every state needs an output line");
    outputs.push_back(*o);
  }
  ParsedGuesser result{MooreGuesser(Alphabet(*sk.alphabet), *sk.start, std::move(trans), std::move(outputs)),
                       std::nullopt};
  std::size_t given = 0;
  for (const auto& b : bound) given += b ? 1 : 0;
  if (given == 0) {
    if (codomain) fail(0, "codomain without bound lines");
    return result;
  }
  bound.resize(*sk.states);
  require_all(given, *sk.states, "bound");
  std::vector<Ordinal> bounds;
  Ordinal top = Ordinal::finite(0);
  for (const auto& b : bound) {
    bounds.push_back(*b);
    if (top < *b) top = *b;
  }
  result.ranked = RankedGuesser{result.guesser, std::move(bounds), codomain ? *codomain : succ(top)};
  return result;
}

std::string format_guesser(const MooreGuesser& g) {
  std::ostringstream os;
  const std::uint32_t k = g.alphabet().size();
  os << "alphabet " << k << "\nstates " << g.size() << "\nstart " << g.start() << "\n";
  for (State p = 0; p < g.size(); ++p) os << "output " << p << ' ' << (g.output(p) ? 1 : 0) << "\n";
  for (State p = 0; p < g.size(); ++p) {
    for (Symbol a = 0; a < k; ++a) os << "trans " << p << ' ' << a << ' ' << g.next(p, a) << "\n";
  }
  return os.str();
}

std::string format_guesser(const RankedGuesser& rg) {
  std::ostringstream os;
  os << format_guesser(rg.guesser);
  for (State p = 0; p < rg.guesser.size(); ++p) os << "bound " << p << ' ' << to_string(rg.bound[p]) << "\n";
  os << "codomain " << to_string(rg.codomain) << "\n";
  return os.str();
}

bool looks_like_guesser(std::string_view text) {
  for (const auto& line : split_lines(text)) {
    if (line.tokens[0] == "output") return true;
  }
  return false;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
  out << text;
}

ParsedAutomaton load_automaton(const std::string& source) {
  constexpr std::string_view prefix = "fixture:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    for (auto& [fixture_name, set] : fixtures::all()) {
      if (fixture_name == name) return {set, false};
    }
    throw Error(ErrorKind::parse, "unknown fixture '" + name + "'");
  }
  try {
    return parse_automaton(read_file(source));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, source + ": " + e.what());
  }
}

namespace {

std::filesystem::path relative_to(const std::filesystem::path& file, std::string_view name) {
  std::filesystem::path p{std::string(name)};
  return p.is_absolute() ? p : file.parent_path() / p;
}

}  // namespace

OpenChain load_chain(const std::filesystem::path& path) {
  std::optional<std::size_t> theta;
  std::map<std::size_t, OpenSet> sets;
  const std::string text = read_file(path);
  for (const auto& line : split_lines(text)) {
    const auto key = line.tokens[0];
    if (key == "theta") {
      expect_arity(line, 2);
      if (theta) fail(line.number, "duplicate theta");
      theta = number(line, 1);
    } else if (key == "set") {
      expect_arity(line, 3);
      const auto i = number(line, 1);
      if (sets.count(i)) fail(line.number, "duplicate set index");
      const auto file = relative_to(path, line.tokens[2]);
      sets.emplace(i, OpenSet::from_parity(load_automaton(file.string()).set));
    } else {
      fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!theta) fail(0, "missing theta");
  OpenChain chain{Ordinal::finite(*theta), {}};
  for (std::size_t i = 0; i < *theta; ++i) {
    auto it = sets.find(i);
    if (it == sets.end()) fail(0, "missing set " + std::to_string(i));
    chain.sets.push_back(it->second);
  }
  if (sets.size() != *theta) fail(0, "set index beyond theta");
  return chain;
}

std::filesystem::path save_chain(const OpenChain& chain, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream index;
  index << "theta " << chain.sets.size() << "\n";
  for (std::size_t i = 0; i < chain.sets.size(); ++i) {
    const std::string name = "set_" + std::to_string(i) + ".aut";
    write_file(dir / name, format_automaton(chain.sets[i].automaton()));
    index << "set " << i << ' ' << name << "\n";
  }
  const auto path = dir / "chain.txt";
  write_file(path, index.str());
  return path;
}

OracleFamily load_family(const std::filesystem::path& path) {
  std::optional<OracleFamily> family;
  const std::string text = read_file(path);
  for (const auto& line : split_lines(text)) {
    const auto key = line.tokens[0];
    if (key == "family") {
      if (family) fail(line.number, "duplicate family line");
      if (line.tokens.size() == 2 && line.tokens[1] == "explicit") {
        family = ExplicitFamily{};
      } else if (line.tokens.size() == 3 && line.tokens[1] == "cylinders") {
        const auto k = number(line, 2);
        if (k < 2 || k > Alphabet::max_size) fail(line.number, "alphabet size must be 2..36");
        family = CylinderFamily{Alphabet(static_cast<std::uint32_t>(k))};
      } else {
        fail(line.number, "expected 'family explicit' or 'family cylinders <k>'");
      }
    } else if (key == "prefix" || key == "cycle") {
      expect_arity(line, 2);
      auto* ex = family ? std::get_if<ExplicitFamily>(&*family) : nullptr;
      if (!ex) fail(line.number, "'" + std::string(key) + "' needs a preceding 'family explicit'");
      auto set = load_automaton(relative_to(path, line.tokens[1]).string()).set;
      (key == "prefix" ? ex->prefix : ex->cycle).push_back(std::move(set));
    } else {
      fail(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!family) fail(0, "missing family line");
  family_alphabet(*family);
  return *family;
}

std::string to_dot(const ParitySet& s) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n  init -> q" << s.start() << ";\n";
  for (State q = 0; q < s.size(); ++q) {
    os << "  q" << q << " [label=\"" << q << " : " << s.priority(q) << "\"";
    if (s.priority(q) % 2 == 0) os << ", peripheries=2";
    os << "];\n";
  }
  for (State q = 0; q < s.size(); ++q) {
    std::map<State, std::string> labels;
    for (Symbol a = 0; a < s.alphabet().size(); ++a) {
      auto& l = labels[s.next(q, a)];
      if (!l.empty()) l += ',';
      l += symbol_char(a);
    }
    for (const auto& [r, l] : labels) os << "  q" << q << " -> q" << r << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const MooreGuesser& g, const std::vector<Ordinal>* bound) {
  std::ostringstream os;
  os << "digraph guesser {\n  rankdir=LR;\n  init [shape=point];\n  init -> p" << g.start() << ";\n";
  for (State p = 0; p < g.size(); ++p) {
    os << "  p" << p << " [label=\"" << p << " / " << (g.output(p) ? 1 : 0);
    if (bound) os << " H=" << to_string((*bound)[p]);
    os << "\"];\n";
  }
  for (State p = 0; p < g.size(); ++p) {
    std::map<State, std::string> labels;
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
      auto& l = labels[g.next(p, a)];
      if (!l.empty()) l += ',';
      l += symbol_char(a);
    }
    for (const auto& [r, l] : labels) os << "  p" << p << " -> p" << r << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace guess::text
