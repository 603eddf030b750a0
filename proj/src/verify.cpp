#include "snakeword/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json_format.hpp"
#include "snakeword/bijections.hpp"
#include "snakeword/poset.hpp"
#include "snakeword/snake.hpp"

namespace snakeword {

namespace {

/// Per-word cache; every structure is built on first use. Not shared
/// between threads.
class Context {
 public:
  Context(BinaryWord w, std::size_t cap) : word_(std::move(w)), cap_(cap) {}

  const BinaryWord& word() const { return word_; }
  std::size_t cap() const { return cap_; }

  const PiecewisePoset& poset() { return get(poset_, [&] { return poset_from_word(word_); }); }
  const std::set<BinaryWord>& subwords() {
    return get(subwords_, [&] { return enumerate_subwords(word_, cap_); });
  }
  const std::set<Antichain>& antichains() {
    return get(antichains_, [&] { return enumerate_antichains(poset(), cap_); });
  }
  const std::set<OrderFilter>& filters() {
    return get(filters_, [&] { return enumerate_order_filters(poset(), cap_); });
  }
  const SubwordTrie& lrs() { return get(lrs_, [&] { return lrs_subword_trie(word_); }); }
  const SubwordTrie& naive() { return get(naive_, [&] { return naive_subword_trie(word_, cap_); }); }
  const AntichainTrie& antichain_trie_of() {
    return get(antichain_trie_, [&] { return antichain_trie(poset()); });
  }
  const SnakeGraph& snake() { return get(snake_, [&] { return snake_from_word(word_); }); }
  const Matching& minimal() { return get(minimal_, [&] { return minimal_matching(snake()); }); }
  const std::set<Matching>& matchings() {
    return get(matchings_, [&] { return enumerate_perfect_matchings(snake(), cap_); });
  }

 private:
  template <typename T, typename F>
  const T& get(std::optional<T>& slot, F make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  BinaryWord word_;
  std::size_t cap_;
  std::optional<PiecewisePoset> poset_;
  std::optional<std::set<BinaryWord>> subwords_;
  std::optional<std::set<Antichain>> antichains_;
  std::optional<std::set<OrderFilter>> filters_;
  std::optional<SubwordTrie> lrs_;
  std::optional<SubwordTrie> naive_;
  std::optional<AntichainTrie> antichain_trie_;
  std::optional<SnakeGraph> snake_;
  std::optional<Matching> minimal_;
  std::optional<std::set<Matching>> matchings_;
};

/// nullopt on success, otherwise a short description of the first violation.
using Check = std::function<std::optional<std::string>(Context&)>;

struct Property {
  PropertyInfo info;
  Check check;
};

// --- word ----------------------------------------------------------------------

std::optional<std::string> check_lrs_equals_naive(Context& c) {
  if (!ordered_isomorphic(c.lrs(), c.naive())) return "LRS trie and naive trie differ as ordered trees";
  return std::nullopt;
}

std::optional<std::string> check_trie_paths(Context& c) {
  const SubwordTrie& t = c.lrs();
  std::set<BinaryWord> spelled;
  for (NodeId id : t.preorder()) {
    const BinaryWord w = parse_word(t.edge_path(id));
    if (w != t.payload(id)) return "node payload " + t.payload(id).str() + " differs from its path " + w.str();
    if (!spelled.insert(w).second) return "subword " + w.str() + " spelled twice";
  }
  if (spelled != c.subwords()) {
    return "trie spells " + std::to_string(spelled.size()) + " subwords, oracle has " +
           std::to_string(c.subwords().size());
  }
  return std::nullopt;
}

std::optional<std::string> check_leftmost_greedy(Context& c) {
  const BinaryWord& w = c.word();
  for (const BinaryWord& s : c.subwords()) {
    if (s.empty()) continue;
    const Embedding e = leftmost_embedding(s, w);
    if (e.indices.size() != s.size()) return "embedding of " + s.str() + " has the wrong length";
    std::size_t previous = 0;
    for (std::size_t k = 0; k < e.indices.size(); ++k) {
      const std::size_t idx = e.indices[k];
      if (idx <= previous || idx > w.size()) return "embedding of " + s.str() + " is not increasing";
      if (w.at(idx) != s.at(k + 1)) return "embedding of " + s.str() + " reads the wrong letter";
      for (std::size_t j = previous + 1; j < idx; ++j) {
        if (w.at(j) == s.at(k + 1)) return "embedding of " + s.str() + " skips host index " + std::to_string(j);
      }
      previous = idx;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_sigma_partition(Context& c) {
  for (const BinaryWord& s : c.subwords()) {
    if (s.empty()) continue;
    const Embedding e = leftmost_embedding(s, c.word());
    std::vector<std::size_t> covered;
    for (std::size_t k = 0; k < e.runs.size(); ++k) {
      const IndexRun& r = e.runs[k];
      if (r.first > r.last) return "empty run in the embedding of " + s.str();
      if (k > 0 && r.first <= e.runs[k - 1].last + 1) return "runs of " + s.str() + " are not separated";
      for (std::size_t i = r.first; i <= r.last; ++i) covered.push_back(i);
    }
    if (covered != e.indices) return "runs of " + s.str() + " do not cover its indices";
  }
  return std::nullopt;
}

// --- poset ---------------------------------------------------------------------

std::optional<std::string> check_comparability(Context& c) {
  const PiecewisePoset& p = c.poset();
  const std::size_t d = p.size();
  std::vector<std::vector<bool>> reach(d + 1, std::vector<bool>(d + 1, false));
  for (std::size_t i = 1; i <= d; ++i) reach[i][i] = true;
  for (const auto& [lo, hi] : p.covers()) reach[lo][hi] = true;
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = 1; j <= d; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) {
      if (p.less_or_equal(i, j) != reach[i][j]) {
        return "less_or_equal(" + std::to_string(i) + "," + std::to_string(j) + ") disagrees with the closure";
      }
      if (p.comparable(i, j) != (reach[i][j] || reach[j][i])) {
        return "comparable(" + std::to_string(i) + "," + std::to_string(j) + ") disagrees with the closure";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_filters_correspond(Context& c) {
  const PiecewisePoset& p = c.poset();
  if (c.antichains().size() != c.filters().size()) return "antichain and filter counts differ";
  for (const Antichain& a : c.antichains()) {
    const OrderFilter f = up_closure(p, a);
    if (!is_order_filter(p, f.elements)) return "up-closure of " + format_set(a.elements) + " is not a filter";
    if (!c.filters().contains(f)) return "up-closure of " + format_set(a.elements) + " missing from the oracle";
    if (min_elements(p, f) != a) return "min_elements does not invert up_closure at " + format_set(a.elements);
  }
  for (const OrderFilter& f : c.filters()) {
    if (up_closure(p, min_elements(p, f)) != f) return "up_closure does not invert min_elements at " + format_set(f.elements);
  }
  return std::nullopt;
}

std::optional<std::string> check_antichain_payloads_distinct(Context& c) {
  const AntichainTrie& t = c.antichain_trie_of();
  std::set<Antichain> seen;
  for (NodeId id : t.preorder()) {
    const Antichain& a = t.payload(id).antichain;
    if (!is_antichain(c.poset(), a.elements)) return format_set(a.elements) + " is not an antichain";
    if (!seen.insert(a).second) return format_set(a.elements) + " appears twice";
    std::vector<std::size_t> labels;
    for (NodeId n : t.path_to(id)) labels.push_back(t.payload(n).label);
    if (antichain_of_path(labels) != a) return "payload " + format_set(a.elements) + " differs from its path";
  }
  return std::nullopt;
}

std::optional<std::string> check_antichain_coverage(Context& c) {
  std::set<Antichain> payloads;
  const AntichainTrie& t = c.antichain_trie_of();
  for (NodeId id : t.preorder()) payloads.insert(t.payload(id).antichain);
  if (payloads != c.antichains()) {
    return "trie holds " + std::to_string(payloads.size()) + " antichains, oracle has " +
           std::to_string(c.antichains().size());
  }
  return std::nullopt;
}

std::optional<std::string> check_branch_moves(Context& c) {
  const AntichainTrie& t = c.antichain_trie_of();
  for (NodeId id : t.preorder()) {
    const AntichainNode& v = t.payload(id);
    if (const auto left = t.node(id).left) {
      const AntichainNode& u = t.payload(*left);
      std::vector<std::size_t> expected;
      for (std::size_t x : v.antichain.elements) {
        if (x != v.label) expected.push_back(x);
      }
      expected.push_back(v.label + 1);
      std::sort(expected.begin(), expected.end());
      if (u.label != v.label + 1 || u.antichain.elements != expected) {
        return "left step from label " + std::to_string(v.label) + " breaks the shift rule";
      }
    }
    if (const auto right = t.node(id).right) {
      const AntichainNode& u = t.payload(*right);
      std::vector<std::size_t> expected = v.antichain.elements;
      expected.push_back(u.label);
      std::sort(expected.begin(), expected.end());
      if (u.label <= v.label + 1 || u.antichain.elements != expected) {
        return "right step from label " + std::to_string(v.label) + " breaks the append rule";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_antichain_trie_matches(Context& c) {
  if (!ordered_isomorphic(c.antichain_trie_of(), c.lrs())) {
    return "antichain trie and subword trie differ as ordered edge-labelled trees";
  }
  return std::nullopt;
}

// --- snake ---------------------------------------------------------------------

std::optional<std::string> check_snake_shape(Context& c) {
  const SnakeGraph& g = c.snake();
  const std::size_t d = c.word().size();
  if (g.size() != d) return "tile count differs from word length";
  if (g.vertices().size() != 2 * d + 2) return "vertex count is not 2d+2";
  if (g.edges().size() != 3 * d + 1) return "edge count is not 3d+1";
  for (std::size_t i = 2; i <= d; ++i) {
    const Point a = g.tile(i - 1);
    const Point b = g.tile(i);
    const bool east = b.x == a.x + 1 && b.y == a.y;
    const bool north = b.x == a.x && b.y == a.y + 1;
    if (!east && !north) return "tile " + std::to_string(i) + " is not glued north or east";
  }
  return std::nullopt;
}

std::optional<std::string> check_sign_invariants(Context& c) {
  const SnakeGraph& g = c.snake();
  const SignAssignment s = sign_assignment(g);
  for (const SignAssignment& candidate : {s, s.complemented()}) {
    for (std::size_t i = 1; i <= g.size(); ++i) {
      const Bit n = candidate.sign(g.tile_edge(i, Side::North));
      const Bit w = candidate.sign(g.tile_edge(i, Side::West));
      const Bit so = candidate.sign(g.tile_edge(i, Side::South));
      const Bit e = candidate.sign(g.tile_edge(i, Side::East));
      if (n != w || so != e || n == so) return "tile " + std::to_string(i) + " violates the sign rule";
    }
  }
  const auto sequence = sign_sequence(g, s);
  const auto letters = c.word().letters();
  if (!std::equal(sequence.begin(), sequence.end(), letters.begin(), letters.end())) {
    return "sign sequence differs from the word";
  }
  return std::nullopt;
}

/// Union-find with parity: each edge sign is a variable, each tile forces
/// equalities and one inequality. One consistent component means exactly two
/// solutions.
std::optional<std::string> check_two_sign_functions(Context& c) {
  const SnakeGraph& g = c.snake();
  const std::vector<Edge> edges = g.edges();
  std::map<Edge, std::size_t> index;
  for (std::size_t k = 0; k < edges.size(); ++k) index[edges[k]] = k;
  std::vector<std::size_t> parent(edges.size());
  std::vector<int> parity(edges.size(), 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<std::size_t, int>(std::size_t)> find = [&](std::size_t x) -> std::pair<std::size_t, int> {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  };
  bool consistent = true;
  auto unite = [&](const Edge& a, const Edge& b, int differ) {
    auto [ra, pa] = find(index.at(a));
    auto [rb, pb] = find(index.at(b));
    if (ra == rb) {
      if ((pa ^ pb) != differ) consistent = false;
      return;
    }
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ differ;
  };
  for (std::size_t i = 1; i <= g.size(); ++i) {
    unite(g.tile_edge(i, Side::North), g.tile_edge(i, Side::West), 0);
    unite(g.tile_edge(i, Side::South), g.tile_edge(i, Side::East), 0);
    unite(g.tile_edge(i, Side::North), g.tile_edge(i, Side::South), 1);
  }
  if (!consistent) return "sign constraints are contradictory";
  std::set<std::size_t> roots;
  for (std::size_t k = 0; k < edges.size(); ++k) roots.insert(find(k).first);
  if (roots.size() != 1) return std::to_string(std::size_t{1} << roots.size()) + " sign functions instead of 2";
  return std::nullopt;
}

std::optional<std::string> check_minimal_matching(Context& c) {
  const SnakeGraph& g = c.snake();
  const Matching& m = c.minimal();
  if (!is_perfect_matching(g, m)) return "P_min is not perfect";
  for (const Edge& e : m.edges) {
    if (g.is_interior(e)) return "P_min uses interior edge " + format_edge(e);
  }
  const Edge first_south = g.tile_edge(1, Side::South);
  if (!m.contains(first_south)) return "P_min misses the south edge of the first tile";
  if (c.word().size() > uniqueness_max_length) return std::nullopt;
  std::size_t boundary_only = 0;
  for (const Matching& candidate : c.matchings()) {
    if (!candidate.contains(first_south)) continue;
    const bool all_boundary = std::none_of(candidate.edges.begin(), candidate.edges.end(),
                                           [&](const Edge& e) { return g.is_interior(e); });
    if (!all_boundary) continue;
    ++boundary_only;
    if (candidate != m) return "another boundary matching contains the first south edge";
  }
  if (boundary_only != 1) return "oracle finds " + std::to_string(boundary_only) + " boundary matchings";
  return std::nullopt;
}

std::optional<std::string> check_matching_count(Context& c) {
  if (c.matchings().size() != c.subwords().size()) {
    return std::to_string(c.matchings().size()) + " matchings vs " + std::to_string(c.subwords().size()) + " subwords";
  }
  return std::nullopt;
}

// --- bijections ----------------------------------------------------------------

std::optional<std::string> check_pm_bijection(Context& c) {
  std::set<Matching> images;
  for (const BinaryWord& s : c.subwords()) {
    if (!images.insert(pm(c.word(), s)).second) return "pm collides at " + s.str();
  }
  if (images != c.matchings()) return "pm image differs from the matching enumeration";
  return std::nullopt;
}

std::optional<std::string> check_pm_perfect(Context& c) {
  const std::size_t d = c.word().size();
  for (const BinaryWord& s : c.subwords()) {
    const Matching m = pm(c.word(), s);
    if (!is_perfect_matching(c.snake(), m) || m.size() != d + 1) return "pm(" + s.str() + ") is not perfect";
  }
  return std::nullopt;
}

std::optional<std::string> check_fil_closure(Context& c) {
  for (const BinaryWord& s : c.subwords()) {
    if (s.empty()) continue;
    const PmDetail detail = pm_detail(c.word(), s);
    const OrderFilter expected = up_closure(c.poset(), f_inverse(c.word(), s));
    const std::vector<std::size_t> fil(detail.filter.tiles.begin(), detail.filter.tiles.end());
    if (fil != expected.elements) {
      return "fil(" + s.str() + ") = " + format_set(fil) + ", up-closure " + format_set(expected.elements);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_finv_then_f(Context& c) {
  for (const BinaryWord& s : c.subwords()) {
    const Antichain a = f_inverse(c.word(), s);
    if (!is_antichain(c.poset(), a.elements)) return "f_inverse(" + s.str() + ") is not an antichain";
    if (f(c.poset(), c.word(), a) != s) return "f(f_inverse(" + s.str() + ")) differs";
  }
  return std::nullopt;
}

std::optional<std::string> check_f_then_finv(Context& c) {
  for (const Antichain& a : c.antichains()) {
    const BinaryWord s = f(c.poset(), c.word(), a);
    if (f_inverse(c.word(), s) != a) return "f_inverse(f(" + format_set(a.elements) + ")) differs";
  }
  return std::nullopt;
}

std::optional<std::string> check_f_image(Context& c) {
  std::set<BinaryWord> image;
  for (const Antichain& a : c.antichains()) {
    const BinaryWord s = f(c.poset(), c.word(), a);
    if (!is_subword(s, c.word())) return "f(" + format_set(a.elements) + ") is not a subword";
    image.insert(s);
  }
  if (image != c.subwords()) return "image of f differs from the subword enumeration";
  return std::nullopt;
}

std::optional<std::string> check_jump_points(Context& c) {
  const ExtremaList e = extrema(c.poset());
  for (const Antichain& a : c.antichains()) {
    const FImage img = f_detail(c.poset(), c.word(), a);
    if (a.elements.size() > 1 && img.jump_points.size() != a.elements.size() - 1) {
      return "wrong number of jump points for " + format_set(a.elements);
    }
    for (std::size_t k = 0; k < img.jump_points.size(); ++k) {
      const std::size_t m = img.jump_points[k];
      const bool is_extremum = std::find(e.points.begin(), e.points.end(), m) != e.points.end();
      const bool between = a.elements[k] < m && m < a.elements[k + 1];
      const bool outside = std::find(a.elements.begin(), a.elements.end(), m) == a.elements.end();
      if (!is_extremum || !between || !outside) {
        return "jump point " + std::to_string(m) + " misplaced for " + format_set(a.elements);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_records(Context& c) {
  for (const BinaryWord& s : c.subwords()) {
    const CorrespondenceRecord r = full_correspondence(c.word(), s);
    if (r.word != c.word() || r.subword != s) return "record fields mismatch at " + s.str();
    if (r.matching != pm(c.word(), s)) return "record matching differs from pm at " + s.str();
    if (r.filter != up_closure(c.poset(), r.antichain)) return "record filter inconsistent at " + s.str();
  }
  return std::nullopt;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {{"word", "lrs_trie_equals_naive_trie"}, check_lrs_equals_naive},
      {{"word", "trie_paths_are_the_subwords"}, check_trie_paths},
      {{"word", "leftmost_embedding_is_greedy"}, check_leftmost_greedy},
      {{"word", "sigma_blocks_partition_indices"}, check_sigma_partition},
      {{"poset", "comparability_matches_hasse_closure"}, check_comparability},
      {{"poset", "filters_and_antichains_correspond"}, check_filters_correspond},
      {{"poset", "antichain_trie_payloads_distinct"}, check_antichain_payloads_distinct},
      {{"poset", "antichain_trie_covers_all_antichains"}, check_antichain_coverage},
      {{"poset", "antichain_trie_branch_moves"}, check_branch_moves},
      {{"poset", "antichain_trie_matches_subword_trie"}, check_antichain_trie_matches},
      {{"snake", "snake_shape_counts"}, check_snake_shape},
      {{"snake", "sign_function_invariants"}, check_sign_invariants},
      {{"snake", "exactly_two_sign_functions"}, check_two_sign_functions},
      {{"snake", "minimal_matching_is_unique_boundary_matching"}, check_minimal_matching},
      {{"snake", "matching_count_equals_subword_count"}, check_matching_count},
      {{"bijections", "pm_is_a_bijection"}, check_pm_bijection},
      {{"bijections", "pm_outputs_are_perfect"}, check_pm_perfect},
      {{"bijections", "fil_equals_up_closure"}, check_fil_closure},
      {{"bijections", "f_inverse_then_f_is_identity"}, check_finv_then_f},
      {{"bijections", "f_then_f_inverse_is_identity"}, check_f_then_finv},
      {{"bijections", "f_image_is_all_subwords"}, check_f_image},
      {{"bijections", "jump_points_are_extrema_between"}, check_jump_points},
      {{"bijections", "correspondence_records_consistent"}, check_records},
  };
  return all;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

std::vector<PropertyInfo> property_catalog() {
  std::vector<PropertyInfo> out;
  for (const Property& p : properties()) out.push_back(p.info);
  return out;
}

StructureCounts count_structures(const BinaryWord& w, std::size_t cap) {
  const PiecewisePoset p = poset_from_word(w);
  StructureCounts out;
  out.subwords = enumerate_subwords(w, cap).size();
  out.antichains = enumerate_antichains(p, cap).size();
  out.filters = enumerate_order_filters(p, cap).size();
  out.matchings = enumerate_perfect_matchings(snake_from_word(w), cap).size();
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<const Property*> selected;
  for (const Property& p : properties()) {
    if (options.only.empty() ||
        std::find(options.only.begin(), options.only.end(), p.info.name) != options.only.end()) {
      selected.push_back(&p);
    }
  }
  for (const std::string& name : options.only) {
    const auto& all = properties();
    if (std::none_of(all.begin(), all.end(), [&](const Property& p) { return p.info.name == name; })) {
      throw std::invalid_argument("unknown property: " + name);
    }
  }

  std::vector<BinaryWord> words;
  if (options.word) {
    if (options.word->empty()) throw Error(ErrorCode::EmptyWord, "verify needs a nonempty word");
    words.push_back(*options.word);
  } else {
    for (std::size_t len = 1; len <= options.max_length; ++len) {
      for (BinaryWord& w : words_of_length(len)) words.push_back(std::move(w));
    }
  }
  const std::size_t longest = words.empty() ? 0 : words.back().size();
  if (longest > options.cap) {
    throw Error(ErrorCode::CapExceeded, "words of length " + std::to_string(longest) +
                                            " exceed oracle cap " + std::to_string(options.cap));
  }

  VerifyReport report;
  for (const Property* p : selected) {
    PropertyResult r;
    r.module = p->info.module;
    r.name = p->info.name;
    report.properties.push_back(std::move(r));
  }
  report.words_checked = words.size();

  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < words.size(); k = next++) {
      Context context(words[k], options.cap);
      std::vector<std::optional<std::string>> failures;
      for (const Property* p : selected) {
        try {
          failures.push_back(p->check(context));
        } catch (const std::exception& e) {
          failures.push_back(std::string("exception: ") + e.what());
        }
      }
      const std::lock_guard guard(lock);
      for (std::size_t i = 0; i < selected.size(); ++i) {
        PropertyResult& r = report.properties[i];
        ++r.words_checked;
        if (!failures[i]) continue;
        r.passed = false;
        if (!r.counterexample || words[k] < *r.counterexample) {
          r.counterexample = words[k];
          r.message = *failures[i];
        }
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(words.size(), 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  if (options.word) report.counts = count_structures(*options.word, options.cap);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = "snakeword.verify/1";
  doc["passed"] = report.passed();
  doc["words_checked"] = report.words_checked;
  if (report.counts) {
    doc["counts"] = {{"subwords", report.counts->subwords},
                     {"antichains", report.counts->antichains},
                     {"filters", report.counts->filters},
                     {"matchings", report.counts->matchings}};
  }
  nlohmann::ordered_json props = nlohmann::ordered_json::array();
  for (const PropertyResult& r : report.properties) {
    nlohmann::ordered_json entry;
    entry["module"] = r.module;
    entry["name"] = r.name;
    entry["passed"] = r.passed;
    entry["words_checked"] = r.words_checked;
    entry["counterexample"] = r.counterexample ? nlohmann::ordered_json(r.counterexample->str()) : nullptr;
    if (!r.passed) entry["message"] = r.message;
    props.push_back(entry);
  }
  doc["properties"] = props;
  doc["seconds"] = report.seconds;
  return detail::dump_json(doc);
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const PropertyResult& r : report.properties) {
    os << (r.passed ? "PASS " : "FAIL ") << r.module << "/" << r.name << " (" << r.words_checked << " words)";
    if (!r.passed) os << ": counterexample " << r.counterexample->str() << ": " << r.message;
    os << "\n";
  }
  if (report.counts) {
    os << "counts: " << report.counts->subwords << "/" << report.counts->antichains << "/"
       << report.counts->filters << "/" << report.counts->matchings << "\n";
  }
  const auto failed = std::count_if(report.properties.begin(), report.properties.end(),
                                    [](const PropertyResult& r) { return !r.passed; });
  os << report.words_checked << " words, " << report.properties.size() << " properties, " << failed
     << " failed\n";
  return os.str();
}

}  // namespace snakeword
