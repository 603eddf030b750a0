#pragma once

#include <map>
#include <optional>
#include <string>

#include "snakeword/bijections.hpp"
#include "snakeword/poset.hpp"
#include "snakeword/snake.hpp"
#include "snakeword/word.hpp"

namespace snakeword {

// Every emitter is a pure function of its arguments; output is byte-stable.
// JSON documents carry a "schema" key, see docs/formats.md.

std::string trie_to_dot(const SubwordTrie& t, const BinaryWord& w);
std::string trie_to_dot(const AntichainTrie& t, const BinaryWord& w);
std::string trie_to_json(const SubwordTrie& t, const BinaryWord& w);
std::string trie_to_json(const AntichainTrie& t, const BinaryWord& w);
std::string trie_to_ascii(const SubwordTrie& t);
std::string trie_to_ascii(const AntichainTrie& t);

/// Grid position used by the ASCII drawing: every vertical branch gets its
/// own column, placed as far left as the rows it spans allow.
struct TrieCell {
  std::size_t column;
  std::size_t depth;

  friend bool operator==(const TrieCell&, const TrieCell&) = default;
};

std::map<NodeId, TrieCell> trie_layout(const SubwordTrie& t);
std::map<NodeId, TrieCell> trie_layout(const AntichainTrie& t);

std::string hasse_to_dot(const PiecewisePoset& p);
std::string poset_to_json(const PiecewisePoset& p);
std::string hasse_to_ascii(const PiecewisePoset& p);

/// Optional overlay for snake renderings: pm(s) thickened, fil(s) shaded.
struct SnakeOverlay {
  BinaryWord subword;
  PmDetail detail;
};

SnakeOverlay make_overlay(const BinaryWord& w, const BinaryWord& s);

std::string snake_to_dot(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay = {});
std::string snake_to_svg(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay = {});
std::string snake_to_json(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay = {});
std::string snake_to_ascii(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay = {});

std::string matching_to_json(const Matching& m);
std::string record_to_json(const CorrespondenceRecord& r);

/// Tiles are named a, b, c, ... in order; past z they fall back to "t27" etc.
std::string tile_name(std::size_t i);

}  // namespace snakeword
