#pragma once

#include <cstddef>
#include <vector>

#include "snakeword/poset.hpp"
#include "snakeword/snake.hpp"
#include "snakeword/word.hpp"

namespace snakeword {

struct FImage {
  BinaryWord subword;
  /// M_1, ..., M_{r-1}: the first extremum after each antichain element but
  /// the last.
  std::vector<std::size_t> jump_points;
};

/// Antichain -> subword. Emits 1, then the edge letters from P_1 up to A_1,
/// then for each later element the letters from the first extremum past
/// the previous element up to it.
FImage f_detail(const PiecewisePoset& p, const BinaryWord& w, const Antichain& a);
BinaryWord f(const PiecewisePoset& p, const BinaryWord& w, const Antichain& a);

/// Subword -> antichain: the last host index of each maximal run of the
/// leftmost embedding.
Antichain f_inverse(const BinaryWord& w, const BinaryWord& s);

struct CorrespondenceRecord {
  BinaryWord word;
  BinaryWord subword;
  Embedding embedding;  // empty for the empty subword
  Antichain antichain;
  OrderFilter filter;
  Matching matching;
  PmDetail detail;
};

/// Everything attached to (w, s), cross-checked: fil(s) must equal the
/// up-closure of f_inverse(s), and the matching must be perfect.
CorrespondenceRecord full_correspondence(const BinaryWord& w, const BinaryWord& s);

}  // namespace snakeword
