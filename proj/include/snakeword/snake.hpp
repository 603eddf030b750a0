#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "snakeword/poset.hpp"
#include "snakeword/word.hpp"

namespace snakeword {

enum class Move { East, North };
enum class Side { South, East, North, West };
enum class Orientation { Horizontal, Vertical };

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A unit lattice segment keyed by its lower-left endpoint and orientation.
struct Edge {
  Point origin;
  Orientation orientation = Orientation::Horizontal;

  Point end() const {
    return orientation == Orientation::Horizontal ? Point{origin.x + 1, origin.y}
                                                  : Point{origin.x, origin.y + 1};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string format_edge(const Edge& e);

/// A connected run of unit tiles, each glued to the north or east of the
/// previous one. Tiles are 1-based and identified by their lower-left corner;
/// tile 1 sits at the origin.
class SnakeGraph {
 public:
  explicit SnakeGraph(std::vector<Move> moves);

  std::size_t size() const noexcept { return tiles_.size(); }
  std::span<const Point> tiles() const noexcept { return tiles_; }
  std::span<const Move> moves() const noexcept { return moves_; }

  Point tile(std::size_t i) const;
  Edge tile_edge(std::size_t i, Side side) const;
  /// Edge shared by tiles k and k + 1.
  Edge interior_edge(std::size_t k) const;

  /// Sorted.
  std::vector<Point> vertices() const;
  /// Sorted.
  std::vector<Edge> edges() const;
  /// Sorted.
  std::vector<Edge> boundary_edges() const;
  /// In tile order: interior_edge(1), ..., interior_edge(d - 1).
  std::vector<Edge> interior_edges() const;

  bool has_edge(const Edge& e) const;
  bool is_interior(const Edge& e) const;

  /// Tile whose south or west side is `e`, i.e. the tile immediately
  /// north or east of it; 0 if there is none.
  std::size_t tile_north_east_of(const Edge& e) const;

 private:
  std::vector<Move> moves_;
  std::vector<Point> tiles_;
};

/// Move i goes North exactly when w_{i+1} equals the north sign of tile i,
/// which alternates 1, 0, 1, ... under the sign function fixed by
/// south(tile 1) = 0.
SnakeGraph snake_from_word(const BinaryWord& w);

struct SignAssignment {
  std::map<Edge, Bit> signs;

  Bit sign(const Edge& e) const { return signs.at(e); }
  SignAssignment complemented() const;
};

/// The sign function with south(tile 1) = 0, propagated tile by tile.
SignAssignment sign_assignment(const SnakeGraph& g);

/// West sign of tile 1 followed by the interior signs in tile order.
std::vector<Bit> sign_sequence(const SnakeGraph& g, const SignAssignment& s);

/// Edge of G that carries letter i of the sign sequence: the west side of
/// tile 1 for i = 1, the interior edge between tiles i - 1 and i otherwise.
Edge sign_edge(const SnakeGraph& g, std::size_t i);

struct Matching {
  std::set<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool contains(const Edge& e) const { return edges.contains(e); }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

bool is_matching(const SnakeGraph& g, const Matching& m);
bool is_perfect_matching(const SnakeGraph& g, const Matching& m);

/// Perfect matching of boundary edges through south(tile 1), built by
/// repeatedly taking the only boundary edge left at some uncovered vertex.
Matching minimal_matching(const SnakeGraph& g);

/// Backtracking over vertices in lexicographic order.
std::set<Matching> enumerate_perfect_matchings(const SnakeGraph& g,
                                               std::size_t cap = default_oracle_cap);

struct TileRegion {
  std::set<std::size_t> tiles;

  friend bool operator==(const TileRegion&, const TileRegion&) = default;
};

/// Edges lying on exactly one tile of the region.
std::set<Edge> region_boundary(const SnakeGraph& g, const TileRegion& r);

/// Smallest run of consecutive tiles containing t whose boundary edges
/// outside `minimal` perfectly match the run's vertices. Ties go to the
/// leftmost run.
TileRegion fil_block(const SnakeGraph& g, std::size_t t, const Matching& minimal);

struct BlockFill {
  IndexRun block;      // run of circled sign-sequence positions
  std::size_t square;  // tile north/east of the run's last circled edge
  TileRegion region;   // fil_block of that tile
};

struct PmDetail {
  Matching minimal;
  std::vector<BlockFill> blocks;
  TileRegion filter;  // union of the block regions
  Matching matching;
};

PmDetail pm_detail(const BinaryWord& w, const BinaryWord& s);

/// Perfect matching of G(w) assigned to the subword s.
Matching pm(const BinaryWord& w, const BinaryWord& s);

}  // namespace snakeword
