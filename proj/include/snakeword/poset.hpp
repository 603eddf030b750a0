#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "snakeword/trie.hpp"
#include "snakeword/word.hpp"

namespace snakeword {

/// Direction of the Hasse edge between P_{i-1} and P_i.
enum class Slope { Up, Down };

/// The zigzag poset on 1..d read off a word: letter w_i = 1 makes P_{i-1}
/// covered by P_i, letter 0 the reverse.
class PiecewisePoset {
 public:
  /// `slopes[k]` is the slope of the edge entering element k + 2.
  explicit PiecewisePoset(std::vector<Slope> slopes);

  std::size_t size() const noexcept { return slopes_.size() + 1; }
  std::span<const Slope> slopes() const noexcept { return slopes_; }

  /// Slope of the edge between i - 1 and i, for 2 <= i <= d.
  Slope slope(std::size_t i) const;
  /// Letter carried by that edge: 1 for Up, 0 for Down.
  Bit edge_label(std::size_t i) const { return slope(i) == Slope::Up ? 1 : 0; }

  bool comparable(std::size_t i, std::size_t j) const;
  bool less_or_equal(std::size_t i, std::size_t j) const;

  /// Covering pairs (lower, upper), one per Hasse edge.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// The word this poset came from.
  BinaryWord word() const;

 private:
  void check_index(std::size_t i) const;

  std::vector<Slope> slopes_;
};

PiecewisePoset poset_from_word(const BinaryWord& w);

/// Positions E_0 < E_1 < ... < E_{N+1} of the local minima and maxima of
/// the zigzag, endpoints included. A one-element poset has the single entry
/// (1) and N = -1.
struct ExtremaList {
  std::vector<std::size_t> points;

  long n() const noexcept { return static_cast<long>(points.size()) - 2; }
};

ExtremaList extrema(const PiecewisePoset& p);

/// First extremum strictly greater than i, if any.
std::optional<std::size_t> next_extremum(const ExtremaList& e, std::size_t i);

/// Sorted, duplicate-free element lists. Both order by size first, then
/// lexicographically.
struct Antichain {
  std::vector<std::size_t> elements;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend std::strong_ordering operator<=>(const Antichain& a, const Antichain& b);
};

struct OrderFilter {
  std::vector<std::size_t> elements;

  friend bool operator==(const OrderFilter&, const OrderFilter&) = default;
  friend std::strong_ordering operator<=>(const OrderFilter& a, const OrderFilter& b);
};

std::string format_set(std::span<const std::size_t> elements);

bool is_antichain(const PiecewisePoset& p, std::span<const std::size_t> elements);
bool is_order_filter(const PiecewisePoset& p, std::span<const std::size_t> elements);

std::set<Antichain> enumerate_antichains(const PiecewisePoset& p,
                                         std::size_t cap = default_oracle_cap);
std::set<OrderFilter> enumerate_order_filters(const PiecewisePoset& p,
                                              std::size_t cap = default_oracle_cap);

OrderFilter up_closure(const PiecewisePoset& p, const Antichain& a);
Antichain min_elements(const PiecewisePoset& p, const OrderFilter& f);

/// For a strictly increasing label path starting at 0, the largest member
/// of each maximal run of consecutive integers, the run {0} dropped.
Antichain antichain_of_path(std::span<const std::size_t> path);

struct AntichainNode {
  std::size_t label = 0;
  Antichain antichain;
};

using AntichainTrie = Trie<AntichainNode>;

/// Spine 0..d with copies of the subtree below E_n + 1 grafted as right
/// children onto the spine nodes E_{n-1} <= i < E_n, for n = N down to 1.
/// The edge into a node labelled L carries the letter w_L.
AntichainTrie antichain_trie(const PiecewisePoset& p);

}  // namespace snakeword
