#include "snakeword/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json_format.hpp"

namespace snakeword {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kTrieSchema = "snakeword.trie/1";
constexpr const char* kPosetSchema = "snakeword.poset/1";
constexpr const char* kSnakeSchema = "snakeword.snake/1";
constexpr const char* kMatchingSchema = "snakeword.matching/1";
constexpr const char* kRecordSchema = "snakeword.record/1";

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string word_or_epsilon(const BinaryWord& w) { return w.empty() ? "ε" : w.str(); }

ordered_json edge_json(const Edge& e) { return format_edge(e); }

ordered_json edges_json(const std::set<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

template <typename T>
ordered_json set_json(const T& values) {
  ordered_json out = ordered_json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

// --- tries ------------------------------------------------------------------

struct TrieStyle {
  std::function<std::string(NodeId)> id;     // stable DOT identifier
  std::function<std::string(NodeId)> label;  // DOT label
  std::function<std::string(NodeId)> cell;   // ASCII cell text
};

template <typename P>
std::string trie_dot(const Trie<P>& t, const std::string& name, const TrieStyle& style) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  os << "  ordering=out;\n";
  os << "  node [shape=circle, fontname=\"Helvetica\", fontsize=10];\n";
  os << "  edge [fontname=\"Helvetica\", fontsize=10];\n";
  const auto order = t.preorder();
  for (NodeId id : order) {
    os << "  " << quoted(style.id(id)) << " [label=" << quoted(style.label(id)) << "];\n";
  }
  for (NodeId id : order) {
    const auto& n = t.node(id);
    for (const auto& [child, side] : {std::pair{n.left, "left"}, std::pair{n.right, "right"}}) {
      if (!child) continue;
      const auto& e = t.node(*child).edge;
      os << "  " << quoted(style.id(id)) << " -> " << quoted(style.id(*child)) << " [";
      if (e) os << "label=\"" << int(*e) << "\", style=" << (*e == 0 ? "dotted" : "solid") << ", ";
      os << "branch=" << side << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

template <typename P>
std::map<NodeId, TrieCell> layout(const Trie<P>& t) {
  // Each vertical branch (a left-chain starting at the root or at a right
  // child) gets a column; branches are placed depth-first, deepest
  // attachment first, in the leftmost column free over their rows.
  std::map<NodeId, TrieCell> cells;
  std::set<std::pair<std::size_t, std::size_t>> used;  // (column, grid row)

  std::function<void(NodeId, std::optional<std::size_t>)> place = [&](NodeId start,
                                                                       std::optional<std::size_t> parent_col) {
    std::vector<NodeId> chain{start};
    while (auto next = t.node(chain.back()).left) chain.push_back(*next);
    const std::size_t top = t.depth(start);
    const std::size_t bottom = top + chain.size() - 1;
    const std::size_t first_row = parent_col ? 2 * top - 1 : 0;
    std::size_t col = parent_col ? *parent_col + 1 : 0;
    auto free = [&](std::size_t c) {
      for (std::size_t r = first_row; r <= 2 * bottom; ++r) {
        if (used.contains({c, r})) return false;
      }
      return true;
    };
    while (!free(col)) ++col;
    for (std::size_t r = first_row; r <= 2 * bottom; ++r) used.insert({col, r});
    for (std::size_t k = 0; k < chain.size(); ++k) cells[chain[k]] = TrieCell{col, top + k};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (auto right = t.node(*it).right) place(*right, col);
    }
  };
  place(t.root(), std::nullopt);
  return cells;
}

template <typename P>
std::string trie_ascii(const Trie<P>& t, const std::function<std::string(NodeId)>& cell) {
  const std::map<NodeId, TrieCell> cells = layout(t);
  std::map<NodeId, std::size_t> column;
  std::size_t max_depth = 0;
  for (const auto& [id, c] : cells) {
    column[id] = c.column;
    max_depth = std::max(max_depth, c.depth);
  }

  std::size_t width = 1;
  std::size_t columns = 0;
  for (const auto& [id, col] : column) {
    width = std::max(width, display_width(cell(id)));
    columns = std::max(columns, col + 1);
  }
  width += 3;

  std::vector<std::vector<std::string>> node_rows(max_depth + 1, std::vector<std::string>(columns));
  std::vector<std::string> links(max_depth, std::string(columns * width, ' '));
  for (const auto& [id, col] : column) {
    const std::size_t depth = t.depth(id);
    node_rows[depth][col] = cell(id);
    const auto& n = t.node(id);
    if (n.left) links[depth][col * width] = '|';
    if (n.right) {
      const std::size_t target = column.at(*n.right);
      if (!n.left) links[depth][col * width] = '`';
      for (std::size_t k = col * width + 1; k < target * width; ++k) links[depth][k] = '-';
      links[depth][target * width] = '.';
    }
  }

  std::ostringstream os;
  auto emit = [&](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  };
  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    std::string line;
    for (const std::string& c : node_rows[depth]) {
      line += c;
      line += std::string(width - display_width(c), ' ');
    }
    emit(line);
    if (depth < max_depth) emit(links[depth]);
  }
  return os.str();
}

std::string subword_id(const SubwordTrie& t, NodeId id) { return "w" + t.payload(id).str(); }

std::string antichain_id(const AntichainTrie& t, NodeId id) {
  std::string s = "p";
  for (NodeId n : t.path_to(id)) {
    if (n != t.root()) s += "_";
    s += std::to_string(t.payload(n).label);
  }
  return s;
}

template <typename P, typename F>
ordered_json trie_node_json(const Trie<P>& t, NodeId id, const F& fill) {
  ordered_json j;
  fill(j, id);
  const auto& n = t.node(id);
  j["edge"] = n.edge ? ordered_json(int(*n.edge)) : ordered_json(nullptr);
  j["left"] = n.left ? trie_node_json(t, *n.left, fill) : ordered_json(nullptr);
  j["right"] = n.right ? trie_node_json(t, *n.right, fill) : ordered_json(nullptr);
  return j;
}

}  // namespace

std::string trie_to_dot(const SubwordTrie& t, const BinaryWord& w) {
  TrieStyle style;
  style.id = [&](NodeId id) { return subword_id(t, id); };
  style.label = [&](NodeId id) { return word_or_epsilon(t.payload(id)); };
  return trie_dot(t, "subword_trie_" + w.str(), style);
}

std::string trie_to_dot(const AntichainTrie& t, const BinaryWord& w) {
  TrieStyle style;
  style.id = [&](NodeId id) { return antichain_id(t, id); };
  style.label = [&](NodeId id) {
    const auto& p = t.payload(id);
    return std::to_string(p.label) + "\\n" + format_set(p.antichain.elements);
  };
  return trie_dot(t, "antichain_trie_" + w.str(), style);
}

std::string trie_to_json(const SubwordTrie& t, const BinaryWord& w) {
  ordered_json doc;
  doc["schema"] = kTrieSchema;
  doc["kind"] = "subword-trie";
  doc["word"] = w.str();
  doc["size"] = t.size();
  doc["root"] = trie_node_json(t, t.root(), [&](ordered_json& j, NodeId id) { j["label"] = t.payload(id).str(); });
  return detail::dump_json(doc);
}

std::string trie_to_json(const AntichainTrie& t, const BinaryWord& w) {
  ordered_json doc;
  doc["schema"] = kTrieSchema;
  doc["kind"] = "antichain-trie";
  doc["word"] = w.str();
  doc["size"] = t.size();
  doc["root"] = trie_node_json(t, t.root(), [&](ordered_json& j, NodeId id) {
    j["label"] = t.payload(id).label;
    j["antichain"] = set_json(t.payload(id).antichain.elements);
  });
  return detail::dump_json(doc);
}

std::map<NodeId, TrieCell> trie_layout(const SubwordTrie& t) { return layout(t); }
std::map<NodeId, TrieCell> trie_layout(const AntichainTrie& t) { return layout(t); }

std::string trie_to_ascii(const SubwordTrie& t) {
  return trie_ascii(t, [&](NodeId id) {
    const auto& e = t.node(id).edge;
    return e ? std::to_string(*e) : std::string("ε");
  });
}

std::string trie_to_ascii(const AntichainTrie& t) {
  return trie_ascii(t, [&](NodeId id) {
    const auto& p = t.payload(id);
    return std::to_string(p.label) + " " + format_set(p.antichain.elements);
  });
}

// --- posets -------------------------------------------------------------------

namespace {

std::vector<int> heights(const PiecewisePoset& p) {
  std::vector<int> h{0};
  for (std::size_t i = 2; i <= p.size(); ++i) h.push_back(h.back() + (p.slope(i) == Slope::Up ? 1 : -1));
  return h;
}

}  // namespace

std::string hasse_to_dot(const PiecewisePoset& p) {
  const auto h = heights(p);
  std::ostringstream os;
  os << "graph " << quoted("hasse_" + p.word().str()) << " {\n";
  os << "  node [shape=plaintext, fontname=\"Helvetica\"];\n";
  os << "  edge [fontname=\"Helvetica\", fontsize=10];\n";
  for (std::size_t i = 1; i <= p.size(); ++i) {
    os << "  " << i << " [pos=\"" << i - 1 << "," << h[i - 1] << "!\"];\n";
  }
  for (std::size_t i = 2; i <= p.size(); ++i) {
    os << "  " << i - 1 << " -- " << i << " [label=\"" << int(p.edge_label(i)) << "\", slope="
       << (p.slope(i) == Slope::Up ? "up" : "down") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string poset_to_json(const PiecewisePoset& p) {
  ordered_json doc;
  doc["schema"] = kPosetSchema;
  doc["word"] = p.word().str();
  doc["d"] = p.size();
  ordered_json slopes = ordered_json::array();
  for (Slope s : p.slopes()) slopes.push_back(s == Slope::Up ? "up" : "down");
  doc["slopes"] = slopes;
  const ExtremaList e = extrema(p);
  doc["extrema"] = set_json(e.points);
  doc["N"] = e.n();
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back(ordered_json::array({lo, hi}));
  doc["covers"] = covers;
  return detail::dump_json(doc);
}

std::string hasse_to_ascii(const PiecewisePoset& p) {
  const auto h = heights(p);
  const int top = *std::max_element(h.begin(), h.end());
  const int bottom = *std::min_element(h.begin(), h.end());
  constexpr std::size_t kStep = 4;
  const std::size_t rows = static_cast<std::size_t>(2 * (top - bottom) + 1);
  std::vector<std::string> canvas(rows, std::string(kStep * p.size() + 2, ' '));
  auto row_of = [&](int height2) { return static_cast<std::size_t>(2 * top - height2); };
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const std::string label = std::to_string(i);
    canvas[row_of(2 * h[i - 1])].replace(kStep * (i - 1), label.size(), label);
    if (i > 1) {
      canvas[row_of(h[i - 2] + h[i - 1])][kStep * (i - 1) - 2] = p.slope(i) == Slope::Up ? '/' : '\\';
    }
  }
  std::ostringstream os;
  for (std::string line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

// --- snake graphs ---------------------------------------------------------------

std::string tile_name(std::size_t i) {
  if (i >= 1 && i <= 26) return std::string(1, static_cast<char>('a' + i - 1));
  return "t" + std::to_string(i);
}

SnakeOverlay make_overlay(const BinaryWord& w, const BinaryWord& s) {
  if (!is_subword(s, w)) throw Error(ErrorCode::NotASubword, s.str() + " is not a subword of " + w.str());
  return SnakeOverlay{s, pm_detail(w, s)};
}

namespace {

std::string point_id(const Point& p) { return std::to_string(p.x) + "," + std::to_string(p.y); }

}  // namespace

std::string snake_to_dot(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay) {
  const SnakeGraph g = snake_from_word(w);
  const SignAssignment signs = sign_assignment(g);
  std::ostringstream os;
  os << "graph " << quoted("snake_" + w.str()) << " {\n";
  if (overlay) os << "  // matching pm(" << word_or_epsilon(overlay->subword) << ")\n";
  os << "  node [shape=point, width=0.05];\n";
  os << "  edge [fontname=\"Helvetica\", fontsize=9];\n";
  for (const Point& v : g.vertices()) {
    os << "  " << quoted(point_id(v)) << " [pos=\"" << v.x << "," << v.y << "!\"];\n";
  }
  for (std::size_t i = 1; i <= g.size(); ++i) {
    const Point c = g.tile(i);
    const bool shaded = overlay && overlay->detail.filter.tiles.contains(i);
    os << "  " << quoted("tile" + std::to_string(i)) << " [shape=plaintext, label=" << quoted(tile_name(i))
       << ", pos=\"" << c.x << ".5," << c.y << ".5!\"" << (shaded ? ", fontcolor=\"gray40\", fil=true" : "")
       << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << quoted(point_id(e.origin)) << " -- " << quoted(point_id(e.end())) << " [label=\""
       << int(signs.sign(e)) << "\"";
    if (g.is_interior(e)) os << ", style=dashed";
    if (overlay && overlay->detail.matching.contains(e)) os << ", penwidth=4";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string snake_to_svg(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay) {
  const SnakeGraph g = snake_from_word(w);
  constexpr int kUnit = 40;
  constexpr int kMargin = 20;
  int max_x = 0;
  int max_y = 0;
  for (const Point& c : g.tiles()) {
    max_x = std::max(max_x, c.x + 1);
    max_y = std::max(max_y, c.y + 1);
  }
  const int width = max_x * kUnit + 2 * kMargin;
  const int height = max_y * kUnit + 2 * kMargin;
  auto px = [&](int x) { return kMargin + x * kUnit; };
  auto py = [&](int y) { return kMargin + (max_y - y) * kUnit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <title>snake graph of " << w.str();
  if (overlay) os << ", pm(" << word_or_epsilon(overlay->subword) << ")";
  os << "</title>\n";
  os << "  <g id=\"tiles\">\n";
  for (std::size_t i = 1; i <= g.size(); ++i) {
    const Point c = g.tile(i);
    const bool shaded = overlay && overlay->detail.filter.tiles.contains(i);
    os << "    <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y + 1) << "\" width=\"" << kUnit << "\" height=\""
       << kUnit << "\" fill=\"" << (shaded ? "#c8c8c8" : "#ffffff") << "\"/>\n";
    os << "    <text x=\"" << px(c.x) + kUnit / 2 << "\" y=\"" << py(c.y) - kUnit / 2 + 5
       << "\" text-anchor=\"middle\" font-family=\"Helvetica\" font-size=\"14\">" << tile_name(i)
       << "</text>\n";
  }
  os << "  </g>\n";
  os << "  <g id=\"edges\" stroke=\"#000000\" stroke-linecap=\"round\">\n";
  for (const Edge& e : g.edges()) {
    const bool thick = overlay && overlay->detail.matching.contains(e);
    const Point b = e.end();
    os << "    <line x1=\"" << px(e.origin.x) << "\" y1=\"" << py(e.origin.y) << "\" x2=\"" << px(b.x)
       << "\" y2=\"" << py(b.y) << "\" stroke-width=\"" << (thick ? 5 : 1) << "\"/>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

std::string snake_to_json(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay) {
  const SnakeGraph g = snake_from_word(w);
  const SignAssignment signs = sign_assignment(g);
  ordered_json doc;
  doc["schema"] = kSnakeSchema;
  doc["word"] = w.str();
  ordered_json tiles = ordered_json::array();
  for (const Point& c : g.tiles()) tiles.push_back(ordered_json::array({c.x, c.y}));
  doc["tiles"] = tiles;
  ordered_json moves = ordered_json::array();
  for (Move m : g.moves()) moves.push_back(m == Move::North ? "N" : "E");
  doc["moves"] = moves;
  ordered_json sign_list = ordered_json::object();
  for (const auto& [e, b] : signs.signs) sign_list[format_edge(e)] = int(b);
  doc["signs"] = sign_list;
  ordered_json sequence = ordered_json::array();
  for (Bit b : sign_sequence(g, signs)) sequence.push_back(int(b));
  doc["sign_sequence"] = sequence;
  ordered_json interior = ordered_json::array();
  for (const Edge& e : g.interior_edges()) interior.push_back(edge_json(e));
  doc["interior"] = interior;
  ordered_json matchings;
  matchings["minimal"] = edges_json(minimal_matching(g).edges);
  if (overlay) {
    ordered_json pm_json;
    pm_json["subword"] = overlay->subword.str();
    pm_json["edges"] = edges_json(overlay->detail.matching.edges);
    pm_json["fil"] = set_json(overlay->detail.filter.tiles);
    matchings["pm"] = pm_json;
  }
  doc["matchings"] = matchings;
  return detail::dump_json(doc);
}

std::string snake_to_ascii(const BinaryWord& w, const std::optional<SnakeOverlay>& overlay) {
  const SnakeGraph g = snake_from_word(w);
  int max_x = 0;
  int max_y = 0;
  for (const Point& c : g.tiles()) {
    max_x = std::max(max_x, c.x + 1);
    max_y = std::max(max_y, c.y + 1);
  }
  constexpr int kCell = 4;
  std::vector<std::string> canvas(static_cast<std::size_t>(2 * max_y + 1),
                                  std::string(static_cast<std::size_t>(kCell * max_x + 1), ' '));
  auto at = [&](int col, int row) -> char& {
    return canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  };
  auto row_of = [&](int y) { return 2 * (max_y - y); };
  for (const Edge& e : g.edges()) {
    const bool thick = overlay && overlay->detail.matching.contains(e);
    const int col = kCell * e.origin.x;
    const int row = row_of(e.origin.y);
    if (e.orientation == Orientation::Horizontal) {
      for (int k = 1; k < kCell; ++k) at(col + k, row) = thick ? '=' : '-';
      at(col, row) = '+';
      at(col + kCell, row) = '+';
    } else {
      at(col, row - 1) = thick ? '#' : '|';
      at(col, row) = '+';
      at(col, row - 2) = '+';
    }
  }
  for (std::size_t i = 1; i <= g.size(); ++i) {
    const Point c = g.tile(i);
    std::string name = tile_name(i);
    if (overlay && overlay->detail.filter.tiles.contains(i)) {
      std::transform(name.begin(), name.end(), name.begin(), [](char ch) { return static_cast<char>(std::toupper(ch)); });
    }
    if (name.size() == 1) at(kCell * c.x + kCell / 2, row_of(c.y) - 1) = name[0];
  }
  std::ostringstream os;
  for (std::string line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string matching_to_json(const Matching& m) {
  ordered_json doc;
  doc["schema"] = kMatchingSchema;
  doc["edges"] = edges_json(m.edges);
  return detail::dump_json(doc);
}

std::string record_to_json(const CorrespondenceRecord& r) {
  ordered_json doc;
  doc["schema"] = kRecordSchema;
  doc["word"] = r.word.str();
  doc["subword"] = r.subword.str();
  ordered_json emb;
  emb["indices"] = set_json(r.embedding.indices);
  ordered_json sigma = ordered_json::array();
  for (const IndexRun& run : r.embedding.runs) sigma.push_back(ordered_json::array({run.first, run.last}));
  emb["sigma"] = sigma;
  doc["embedding"] = emb;
  doc["antichain"] = set_json(r.antichain.elements);
  doc["filter"] = set_json(r.filter.elements);
  doc["matching"] = edges_json(r.matching.edges);
  ordered_json blocks = ordered_json::array();
  for (const BlockFill& b : r.detail.blocks) {
    ordered_json entry;
    entry["block"] = ordered_json::array({b.block.first, b.block.last});
    entry["square"] = b.square;
    entry["fil"] = set_json(b.region.tiles);
    blocks.push_back(entry);
  }
  doc["fil_blocks"] = blocks;
  doc["fil"] = set_json(r.detail.filter.tiles);
  return detail::dump_json(doc);
}

}  // namespace snakeword
