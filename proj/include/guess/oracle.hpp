#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "guess/remainder.hpp"
#include "guess/space.hpp"

// Brute-force reference computations on clopen tables, straight from the
// definitions on finite words. Nothing here goes through automata.
namespace guess::oracle {

// The remainder recursion on the tree of words for a depth-d table.
// Below depth d every subtree is membership-constant, so a node of length
// >= d lies in S_beta iff beta = 0; shorter nodes are decided by the
// literal step rule, quantifying over infinite branches of the tree.
class TruncatedTree {
 public:
  explicit TruncatedTree(ClopenTable table);

  const ClopenTable& table() const noexcept { return table_; }

  bool in_stage(std::size_t beta, const Word& sigma);
  // Some infinite extension of sigma with every prefix in S_beta and
  // membership `member`.
  bool has_extension(std::size_t beta, const Word& sigma, bool member);
  // Least beta with sigma outside S_beta (always finite for clopen sets).
  std::size_t rank(const Word& sigma);
  // Least beta with S_beta empty.
  std::size_t least_empty_stage();
  // G_S by its four cases.
  bool guess(const Word& sigma);

 private:
  bool path(std::size_t beta, const Word& sigma, bool member);

  ClopenTable table_;
  std::map<std::pair<std::size_t, Word>, bool> stage_memo_;
  std::map<std::tuple<std::size_t, Word, bool>, bool> path_memo_;
  std::map<Word, bool> guess_memo_;
};

// beta(sigma) for every word of length <= max_length, shortlex order.
std::map<Word, std::size_t> truncated_remainder(const ClopenTable& t, std::size_t max_length);
std::map<Word, bool> truncated_guesser(const ClopenTable& t, std::size_t max_length);

// Every depth-d table over k symbols, addressed by index. Throws
// Error(budget_exceeded) when k^d > 16.
class TableEnumeration {
 public:
  TableEnumeration(Alphabet alphabet, std::size_t depth);

  std::uint64_t count() const noexcept { return count_; }
  // Bit c of i is the entry of the c-th depth-d word in base-k order.
  ClopenTable nth(std::uint64_t i) const;

 private:
  Alphabet alphabet_;
  std::size_t depth_;
  std::size_t cells_;
  std::uint64_t count_;
};

TableEnumeration exhaustive_tables(std::uint32_t k, std::size_t depth);

struct TableCheck {
  bool ranks_agree = true;
  bool guesses_agree = true;
  bool least_stage_agrees = true;
  std::optional<Word> rank_mismatch;
  std::optional<Word> guess_mismatch;
};

// Oracle against remainder_chain / synthesize on compile_clopen(t), on
// every word of length <= max_length.
TableCheck cross_check(const ClopenTable& t, std::size_t max_length);

struct SweepReport {
  std::size_t tables = 0;
  std::size_t rank_failures = 0;
  std::size_t guess_failures = 0;
  std::size_t stage_failures = 0;
  std::size_t max_rank = 0;
  // Tables whose stage 1 is nonempty while no branch stays inside it.
  std::size_t thin_stage_tables = 0;

  bool ok() const noexcept { return rank_failures == 0 && guess_failures == 0 && stage_failures == 0; }
};

// All tables when `sample` is 0 or at least the table count; otherwise
// `sample` indices drawn with a seeded generator.
SweepReport sweep(std::uint32_t k, std::size_t depth, std::size_t max_length, std::size_t sample,
                  std::uint64_t seed);

}  // namespace guess::oracle
