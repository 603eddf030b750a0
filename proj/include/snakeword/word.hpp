#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snakeword/error.hpp"
#include "snakeword/trie.hpp"

namespace snakeword {

/// Upper bound on the length of inputs handed to the brute-force oracles.
/// They enumerate 2^d subsets, so anything past this is refused outright.
inline constexpr std::size_t default_oracle_cap = 20;

/// A finite word over {0,1} that is empty or starts with 1.
///
/// Letters are addressed 1-based through at(), so w.at(1) is the first
/// letter. Words order by length first and then lexicographically, which is
/// the iteration order of every enumeration in this library.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Bit> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Bit at(std::size_t i) const;
  std::span<const Bit> letters() const noexcept { return letters_; }

  /// Returns this word with `letter` appended.
  BinaryWord appended(Bit letter) const;

  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b);

 private:
  std::vector<Bit> letters_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

BinaryWord parse_word(std::string_view text);

struct Block {
  Bit letter;
  std::size_t length;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Maximal runs u_1 ... u_M of equal letters. An absent trailing 0-run is
/// simply not listed.
struct BlockFactorization {
  std::vector<Block> blocks;

  std::size_t count() const noexcept { return blocks.size(); }
  /// 1-based index of the last letter of each block.
  std::vector<std::size_t> ends() const;
  std::string str() const;
};

BlockFactorization factor_blocks(const BinaryWord& w);

bool is_subword(const BinaryWord& s, const BinaryWord& w);

/// Closed range [first, last] of consecutive 1-based host indices.
struct IndexRun {
  std::size_t first;
  std::size_t last;

  friend bool operator==(const IndexRun&, const IndexRun&) = default;
};

struct Embedding {
  std::vector<std::size_t> indices;
  /// Maximal runs of consecutive values in `indices`.
  std::vector<IndexRun> runs;
};

/// Greedy embedding of a nonempty subword: every index is the smallest one
/// available after its predecessor.
Embedding leftmost_embedding(const BinaryWord& s, const BinaryWord& w);

/// Splits a strictly increasing index sequence into maximal consecutive runs.
std::vector<IndexRun> consecutive_runs(std::span<const std::size_t> indices);

/// Every distinct subword of w, the empty word included, by subset
/// enumeration. Throws CapExceeded when w is longer than `cap`.
std::set<BinaryWord> enumerate_subwords(const BinaryWord& w,
                                        std::size_t cap = default_oracle_cap);

/// Node payload of a subword trie: the word spelled from the root.
using SubwordTrie = Trie<BinaryWord>;

/// Prefix tree over enumerate_subwords(w). At every node the left child
/// appends the host letter immediately after the node's leftmost embedding
/// and the right child appends the other letter.
SubwordTrie naive_subword_trie(const BinaryWord& w, std::size_t cap = default_oracle_cap);

/// The vertical-spine-plus-copies construction of the trie of subwords.
SubwordTrie lrs_subword_trie(const BinaryWord& w);

/// All nonempty binary words (leading 1) of length exactly `length`, in
/// increasing numeric order.
std::vector<BinaryWord> words_of_length(std::size_t length);

}  // namespace snakeword
