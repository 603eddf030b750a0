#include "snakeword/snake.hpp"

#include <algorithm>
#include <iterator>

namespace snakeword {

std::string format_edge(const Edge& e) {
  return std::string(e.orientation == Orientation::Horizontal ? "H" : "V") + "(" +
         std::to_string(e.origin.x) + "," + std::to_string(e.origin.y) + ")";
}

SnakeGraph::SnakeGraph(std::vector<Move> moves) : moves_(std::move(moves)) {
  Point p{0, 0};
  tiles_.push_back(p);
  for (Move m : moves_) {
    if (m == Move::East) {
      ++p.x;
    } else {
      ++p.y;
    }
    tiles_.push_back(p);
  }
}

Point SnakeGraph::tile(std::size_t i) const {
  if (i < 1 || i > tiles_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "tile " + std::to_string(i));
  }
  return tiles_[i - 1];
}

Edge SnakeGraph::tile_edge(std::size_t i, Side side) const {
  const Point c = tile(i);
  switch (side) {
    case Side::South: return Edge{c, Orientation::Horizontal};
    case Side::North: return Edge{{c.x, c.y + 1}, Orientation::Horizontal};
    case Side::West: return Edge{c, Orientation::Vertical};
    case Side::East: return Edge{{c.x + 1, c.y}, Orientation::Vertical};
  }
  return {};
}

Edge SnakeGraph::interior_edge(std::size_t k) const {
  if (k < 1 || k >= tiles_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "interior edge " + std::to_string(k));
  }
  return tile_edge(k, moves_[k - 1] == Move::North ? Side::North : Side::East);
}

std::vector<Point> SnakeGraph::vertices() const {
  std::set<Point> out;
  for (const Point& c : tiles_) {
    out.insert({c.x, c.y});
    out.insert({c.x + 1, c.y});
    out.insert({c.x, c.y + 1});
    out.insert({c.x + 1, c.y + 1});
  }
  return {out.begin(), out.end()};
}

std::vector<Edge> SnakeGraph::edges() const {
  std::set<Edge> out;
  for (std::size_t i = 1; i <= size(); ++i) {
    for (Side s : {Side::South, Side::East, Side::North, Side::West}) out.insert(tile_edge(i, s));
  }
  return {out.begin(), out.end()};
}

std::vector<Edge> SnakeGraph::boundary_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges()) {
    if (!is_interior(e)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> SnakeGraph::interior_edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 1; k < size(); ++k) out.push_back(interior_edge(k));
  return out;
}

bool SnakeGraph::has_edge(const Edge& e) const {
  const auto all = edges();
  return std::binary_search(all.begin(), all.end(), e);
}

bool SnakeGraph::is_interior(const Edge& e) const {
  for (std::size_t k = 1; k < size(); ++k) {
    if (interior_edge(k) == e) return true;
  }
  return false;
}

std::size_t SnakeGraph::tile_north_east_of(const Edge& e) const {
  for (std::size_t i = 1; i <= size(); ++i) {
    if (tile_edge(i, Side::South) == e || tile_edge(i, Side::West) == e) return i;
  }
  return 0;
}

SnakeGraph snake_from_word(const BinaryWord& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "the empty word has no snake graph");
  std::vector<Move> moves;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const Bit north_sign = i % 2 == 1 ? 1 : 0;
    moves.push_back(w.at(i + 1) == north_sign ? Move::North : Move::East);
  }
  return SnakeGraph(std::move(moves));
}

SignAssignment SignAssignment::complemented() const {
  SignAssignment out;
  for (const auto& [e, b] : signs) out.signs.emplace(e, static_cast<Bit>(1 - b));
  return out;
}

SignAssignment sign_assignment(const SnakeGraph& g) {
  SignAssignment out;
  Bit north = 1;  // north = west, south = east = 1 - north
  for (std::size_t i = 1; i <= g.size(); ++i) {
    if (i > 1) {
      const Bit shared = out.signs.at(g.interior_edge(i - 1));
      // Glued on top, the shared edge is this tile's south; glued to the
      // right, it is this tile's west.
      north = g.moves()[i - 2] == Move::North ? static_cast<Bit>(1 - shared) : shared;
    }
    const Bit south = static_cast<Bit>(1 - north);
    out.signs[g.tile_edge(i, Side::North)] = north;
    out.signs[g.tile_edge(i, Side::West)] = north;
    out.signs[g.tile_edge(i, Side::South)] = south;
    out.signs[g.tile_edge(i, Side::East)] = south;
  }
  return out;
}

Edge sign_edge(const SnakeGraph& g, std::size_t i) {
  if (i == 1) return g.tile_edge(1, Side::West);
  return g.interior_edge(i - 1);
}

std::vector<Bit> sign_sequence(const SnakeGraph& g, const SignAssignment& s) {
  std::vector<Bit> out;
  for (std::size_t i = 1; i <= g.size(); ++i) out.push_back(s.sign(sign_edge(g, i)));
  return out;
}

bool is_matching(const SnakeGraph& g, const Matching& m) {
  std::set<Point> seen;
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e)) return false;
    if (!seen.insert(e.origin).second || !seen.insert(e.end()).second) return false;
  }
  return true;
}

bool is_perfect_matching(const SnakeGraph& g, const Matching& m) {
  return is_matching(g, m) && 2 * m.size() == g.vertices().size();
}

Matching minimal_matching(const SnakeGraph& g) {
  const std::vector<Edge> boundary = g.boundary_edges();
  const std::vector<Point> vertices = g.vertices();
  Matching m;
  std::set<Point> covered;
  auto take = [&](const Edge& e) {
    m.edges.insert(e);
    covered.insert(e.origin);
    covered.insert(e.end());
  };
  take(g.tile_edge(1, Side::South));

  while (covered.size() < vertices.size()) {
    bool progressed = false;
    for (const Point& v : vertices) {
      if (covered.contains(v)) continue;
      std::vector<Edge> options;
      for (const Edge& e : boundary) {
        if (e.origin == v && !covered.contains(e.end())) options.push_back(e);
        if (e.end() == v && !covered.contains(e.origin)) options.push_back(e);
      }
      if (options.empty()) {
        throw Error(ErrorCode::Internal, "boundary matching stuck at a vertex");
      }
      if (options.size() == 1) {
        take(options.front());
        progressed = true;
        break;
      }
    }
    if (!progressed) throw Error(ErrorCode::Internal, "boundary matching is not forced");
  }
  return m;
}

namespace {

void extend_matchings(const std::vector<Point>& vertices,
                      const std::map<Point, std::vector<Edge>>& incident, std::set<Point>& covered,
                      std::set<Edge>& current, std::set<Matching>& out) {
  const auto it = std::find_if(vertices.begin(), vertices.end(),
                               [&](const Point& v) { return !covered.contains(v); });
  if (it == vertices.end()) {
    out.insert(Matching{current});
    return;
  }
  for (const Edge& e : incident.at(*it)) {
    const Point other = e.origin == *it ? e.end() : e.origin;
    if (covered.contains(other)) continue;
    covered.insert(*it);
    covered.insert(other);
    current.insert(e);
    extend_matchings(vertices, incident, covered, current, out);
    current.erase(e);
    covered.erase(other);
    covered.erase(*it);
  }
}

}  // namespace

std::set<Matching> enumerate_perfect_matchings(const SnakeGraph& g, std::size_t cap) {
  if (g.size() > cap) {
    throw Error(ErrorCode::CapExceeded, "snake graph with " + std::to_string(g.size()) +
                                            " tiles exceeds oracle cap " + std::to_string(cap));
  }
  const std::vector<Point> vertices = g.vertices();
  std::map<Point, std::vector<Edge>> incident;
  for (const Edge& e : g.edges()) {
    incident[e.origin].push_back(e);
    incident[e.end()].push_back(e);
  }
  std::set<Matching> out;
  std::set<Point> covered;
  std::set<Edge> current;
  extend_matchings(vertices, incident, covered, current, out);
  return out;
}

std::set<Edge> region_boundary(const SnakeGraph& g, const TileRegion& r) {
  std::map<Edge, int> count;
  for (std::size_t t : r.tiles) {
    for (Side s : {Side::South, Side::East, Side::North, Side::West}) ++count[g.tile_edge(t, s)];
  }
  std::set<Edge> out;
  for (const auto& [e, c] : count) {
    if (c == 1) out.insert(e);
  }
  return out;
}

namespace {

bool perfectly_matches_region(const SnakeGraph& g, const TileRegion& r, const std::set<Edge>& edges) {
  std::set<Point> vertices;
  for (std::size_t t : r.tiles) {
    const Point c = g.tile(t);
    vertices.insert({c.x, c.y});
    vertices.insert({c.x + 1, c.y});
    vertices.insert({c.x, c.y + 1});
    vertices.insert({c.x + 1, c.y + 1});
  }
  std::set<Point> seen;
  for (const Edge& e : edges) {
    if (!seen.insert(e.origin).second || !seen.insert(e.end()).second) return false;
  }
  return seen == vertices;
}

}  // namespace

TileRegion fil_block(const SnakeGraph& g, std::size_t t, const Matching& minimal) {
  const std::size_t d = g.size();
  if (t < 1 || t > d) throw Error(ErrorCode::IndexOutOfRange, "tile " + std::to_string(t));
  for (std::size_t len = 1; len <= d; ++len) {
    const std::size_t lo = t >= len ? t - len + 1 : 1;
    const std::size_t hi = std::min(t, d - len + 1);
    for (std::size_t start = std::max<std::size_t>(lo, 1); start <= hi; ++start) {
      TileRegion r;
      for (std::size_t k = start; k < start + len; ++k) r.tiles.insert(k);
      std::set<Edge> outside;
      for (const Edge& e : region_boundary(g, r)) {
        if (!minimal.contains(e)) outside.insert(e);
      }
      if (perfectly_matches_region(g, r, outside)) return r;
    }
  }
  throw Error(ErrorCode::NoQualifyingRegion, "no tile run around " + std::to_string(t));
}

PmDetail pm_detail(const BinaryWord& w, const BinaryWord& s) {
  const SnakeGraph g = snake_from_word(w);
  PmDetail out;
  out.minimal = minimal_matching(g);
  if (s.empty()) {
    out.matching = out.minimal;
    return out;
  }
  const Embedding emb = leftmost_embedding(s, w);
  for (const IndexRun& run : emb.runs) {
    const std::size_t square = g.tile_north_east_of(sign_edge(g, run.last));
    if (square == 0) throw Error(ErrorCode::Internal, "circled edge has no tile north/east");
    TileRegion region = fil_block(g, square, out.minimal);
    out.filter.tiles.insert(region.tiles.begin(), region.tiles.end());
    out.blocks.push_back(BlockFill{run, square, std::move(region)});
  }
  const std::set<Edge> boundary = region_boundary(g, out.filter);
  std::set_symmetric_difference(boundary.begin(), boundary.end(), out.minimal.edges.begin(),
                                out.minimal.edges.end(),
                                std::inserter(out.matching.edges, out.matching.edges.end()));
  if (!is_perfect_matching(g, out.matching)) {
    throw Error(ErrorCode::Internal, "pm(" + s.str() + ") of " + w.str() + " is not perfect");
  }
  return out;
}

Matching pm(const BinaryWord& w, const BinaryWord& s) { return pm_detail(w, s).matching; }

}  // namespace snakeword
