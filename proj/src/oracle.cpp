#include "guess/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "guess/error.hpp"
#include "guess/guesser.hpp"

namespace guess::oracle {

TruncatedTree::TruncatedTree(ClopenTable table) : table_(std::move(table)) {}

bool TruncatedTree::in_stage(std::size_t beta, const Word& sigma) {
  if (beta == 0) return true;
  if (sigma.size() >= table_.depth()) return false;
  const auto key = std::make_pair(beta, sigma);
  if (auto it = stage_memo_.find(key); it != stage_memo_.end()) return it->second;
  const bool in = in_stage(beta - 1, sigma) && has_extension(beta - 1, sigma, true) &&
                  has_extension(beta - 1, sigma, false);
  stage_memo_.emplace(key, in);
  return in;
}

bool TruncatedTree::has_extension(std::size_t beta, const Word& sigma, bool member) {
  // The branch passes through every prefix of sigma as well.
  for (std::size_t n = 0; n < sigma.size(); ++n) {
    if (!in_stage(beta, Word(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(n)))) return false;
  }
  return path(beta, sigma, member);
}

bool TruncatedTree::path(std::size_t beta, const Word& sigma, bool member) {
  if (!in_stage(beta, sigma)) return false;
  if (sigma.size() >= table_.depth()) {
    // Every node below is deep, so inside S_beta exactly when sigma is.
    return table_.contains(sigma) == member;
  }
  const auto key = std::make_tuple(beta, sigma, member);
  if (auto it = path_memo_.find(key); it != path_memo_.end()) return it->second;
  bool found = false;
  Word child = sigma;
  child.push_back(0);
  for (Symbol a = 0; a < table_.alphabet().size() && !found; ++a) {
    child.back() = a;
    found = path(beta, child, member);
  }
  path_memo_.emplace(key, found);
  return found;
}

std::size_t TruncatedTree::rank(const Word& sigma) {
  std::size_t beta = 0;
  while (in_stage(beta, sigma)) ++beta;
  return beta;
}

std::size_t TruncatedTree::least_empty_stage() {
  // S_beta is empty iff no word of length <= depth is in it; deeper words
  // leave at stage 1 together with those of length depth.
  const auto words = words_up_to(table_.alphabet(), table_.depth());
  for (std::size_t beta = 0;; ++beta) {
    const bool empty = std::none_of(words.begin(), words.end(), [&](const Word& w) { return in_stage(beta, w); });
    if (empty) return beta;
  }
}

bool TruncatedTree::guess(const Word& sigma) {
  if (auto it = guess_memo_.find(sigma); it != guess_memo_.end()) return it->second;
  const std::size_t below = rank(sigma) - 1;
  const bool to_member = has_extension(below, sigma, true);
  const bool to_non_member = has_extension(below, sigma, false);
  if (to_member && to_non_member) {
    throw Error(ErrorKind::invalid_argument, "oracle: extensions of both kinds below the rank");
  }
  bool g;
  if (to_member) {
    g = true;
  } else if (to_non_member) {
    g = false;
  } else if (sigma.empty()) {
    g = false;
  } else {
    g = guess(Word(sigma.begin(), sigma.end() - 1));
  }
  guess_memo_.emplace(sigma, g);
  return g;
}

std::map<Word, std::size_t> truncated_remainder(const ClopenTable& t, std::size_t max_length) {
  TruncatedTree tree(t);
  std::map<Word, std::size_t> out;
  for (const auto& w : words_up_to(t.alphabet(), max_length)) out.emplace(w, tree.rank(w));
  return out;
}

std::map<Word, bool> truncated_guesser(const ClopenTable& t, std::size_t max_length) {
  TruncatedTree tree(t);
  std::map<Word, bool> out;
  for (const auto& w : words_up_to(t.alphabet(), max_length)) out.emplace(w, tree.guess(w));
  return out;
}

TableEnumeration::TableEnumeration(Alphabet alphabet, std::size_t depth)
    : alphabet_(alphabet), depth_(depth), cells_(1), count_(0) {
  for (std::size_t i = 0; i < depth; ++i) {
    cells_ *= alphabet.size();
    if (cells_ > 16) {
      throw Error(ErrorKind::budget_exceeded, "exhaustive_tables: k^d must be at most 16");
    }
  }
  count_ = std::uint64_t{1} << cells_;
}

ClopenTable TableEnumeration::nth(std::uint64_t i) const {
  if (i >= count_) throw Error(ErrorKind::invalid_argument, "table index out of range");
  std::vector<bool> table(cells_);
  for (std::size_t c = 0; c < cells_; ++c) table[c] = ((i >> c) & 1) != 0;
  return ClopenTable(alphabet_, depth_, std::move(table));
}

TableEnumeration exhaustive_tables(std::uint32_t k, std::size_t depth) {
  return TableEnumeration(Alphabet(k), depth);
}

TableCheck cross_check(const ClopenTable& t, std::size_t max_length) {
  TableCheck out;
  TruncatedTree tree(t);
  const ParitySet s = compile_clopen(t);
  const RemainderTrace trace = remainder_chain(s);
  const RankedGuesser g = synthesize(s);
  for (const auto& w : words_up_to(t.alphabet(), max_length)) {
    const Rank r = word_rank(trace, w);
    if (out.ranks_agree && (!r || *r != Ordinal::finite(tree.rank(w)))) {
      out.ranks_agree = false;
      out.rank_mismatch = w;
    }
    if (out.guesses_agree && evaluate(g.guesser, w) != tree.guess(w)) {
      out.guesses_agree = false;
      out.guess_mismatch = w;
    }
  }
  const Rank mcr = mind_change_rank(trace);
  out.least_stage_agrees = mcr && *mcr == Ordinal::finite(tree.least_empty_stage());
  return out;
}

SweepReport sweep(std::uint32_t k, std::size_t depth, std::size_t max_length, std::size_t sample,
                  std::uint64_t seed) {
  const TableEnumeration tables = exhaustive_tables(k, depth);
  std::vector<std::uint64_t> indices(tables.count());
  std::iota(indices.begin(), indices.end(), std::uint64_t{0});
  if (sample != 0 && sample < indices.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(indices.begin(), indices.end(), rng);
    indices.resize(sample);
    std::sort(indices.begin(), indices.end());
  }
  SweepReport report;
  for (std::uint64_t i : indices) {
    const ClopenTable t = tables.nth(i);
    const TableCheck check = cross_check(t, max_length);
    ++report.tables;
    report.rank_failures += check.ranks_agree ? 0 : 1;
    report.guess_failures += check.guesses_agree ? 0 : 1;
    report.stage_failures += check.least_stage_agrees ? 0 : 1;
    TruncatedTree tree(t);
    report.max_rank = std::max(report.max_rank, tree.least_empty_stage());
    const bool stage1_nonempty = tree.in_stage(1, {});
    const bool branch_in_stage1 = tree.has_extension(1, {}, true) || tree.has_extension(1, {}, false);
    if (stage1_nonempty && !branch_in_stage1) ++report.thin_stage_tables;
  }
  return report;
}

}  // namespace guess::oracle
