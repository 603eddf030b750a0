// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "figures.hpp"
#include "golden_cases.hpp"
#include "snakeword/render.hpp"
#include "snakeword/verify.hpp"

using namespace snakeword;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string read_golden(const std::string& file) {
  std::ifstream in(std::string(SNAKEWORD_GOLDEN_DIR) + "/" + file, std::ios::binary);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome counts_criterion() {
  Outcome o;
  std::vector<std::string> lines;
  for (const auto& [text, expected] : std::vector<std::pair<std::string, std::size_t>>{{"10010111", 32}, {"101110", 16}}) {
    const auto start = Clock::now();
    const BinaryWord w = parse_word(text);
    const PiecewisePoset p = poset_from_word(w);
    const std::size_t subwords = lrs_subword_trie(w).size();
    const std::size_t antichains = antichain_trie(p).size();
    const std::size_t filters = enumerate_order_filters(p).size();
    const std::size_t matchings = enumerate_perfect_matchings(snake_from_word(w)).size();
    const double took = seconds_since(start);
    std::ostringstream line;
    line << text << ": " << subwords << "/" << antichains << "/" << filters << "/" << matchings << " in " << took
         << " s";
    if (subwords != expected || antichains != expected || filters != expected || matchings != expected) {
      o.fail(line.str());
    } else if (took >= 1.0) {
      o.fail(line.str() + " (too slow)");
    }
    lines.push_back(line.str());
  }
  if (o.passed) o.detail = lines[0] + "; " + lines[1];
  return o;
}

template <typename P>
bool matches_drawing(const Trie<P>& t, const std::vector<figures::TrieNode>& nodes,
                     const std::vector<figures::TrieEdge>& edges,
                     const std::function<bool(NodeId, const figures::TrieNode&)>& same_node) {
  std::map<std::pair<std::size_t, std::size_t>, NodeId> at;
  for (const auto& [id, cell] : trie_layout(t)) {
    if (!at.emplace(std::pair{cell.column, cell.depth}, id).second) return false;
  }
  if (at.size() != nodes.size()) return false;
  for (const auto& n : nodes) {
    if (!at.contains({n.column, n.depth}) || !same_node(at.at({n.column, n.depth}), n)) return false;
  }
  for (const auto& e : edges) {
    if (!at.contains({e.column, e.depth}) || !at.contains({e.to_column, e.depth + 1})) return false;
    const NodeId parent = at.at({e.column, e.depth});
    const NodeId child = at.at({e.to_column, e.depth + 1});
    const auto& link = e.column == e.to_column ? t.node(parent).left : t.node(parent).right;
    if (link != std::optional<NodeId>(child)) return false;
    if (t.node(child).edge != std::optional<Bit>(static_cast<Bit>(e.letter))) return false;
  }
  return edges.size() + 1 == nodes.size();
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome golden_criterion() {
  Outcome o;
  for (const GoldenCase& c : golden_cases()) {
    const std::string stored = read_golden(c.file);
    if (stored.empty()) o.fail(c.file + " missing");
    else if (stored != c.render()) o.fail(c.file + " differs from the current rendering");
  }
  if (!o.passed) return o;

  const std::string hasse = read_golden("hasse_101110.dot");
  for (std::size_t i = 1; i <= 6; ++i) {
    const std::string pos = std::to_string(i) + " [pos=\"" + std::to_string(i - 1) + "," +
                            std::to_string(figures::hasse_101110_heights[i - 1]) + "!\"]";
    if (hasse.find(pos) == std::string::npos) o.fail("Hasse vertex misplaced: " + pos);
  }

  const auto check_tries = [&](const std::string& text, const auto& nodes, const auto& edges) {
    const BinaryWord w = parse_word(text);
    const AntichainTrie a = antichain_trie(poset_from_word(w));
    const bool antichain_ok = matches_drawing<AntichainNode>(a, nodes, edges, [&](NodeId id, const figures::TrieNode& n) {
      return a.payload(id).label == n.label && a.payload(id).antichain.elements == n.antichain;
    });
    if (!antichain_ok) o.fail("antichain trie of " + text + " differs from the drawing");
    const SubwordTrie s = lrs_subword_trie(w);
    const bool subword_ok = matches_drawing<BinaryWord>(
        s, nodes, edges, [&](NodeId id, const figures::TrieNode& n) { return s.payload(id).size() == n.depth; });
    if (!subword_ok) o.fail("subword trie of " + text + " differs from the drawing");
  };
  check_tries("101110", figures::trie_101110, figures::trie_101110_edges);
  check_tries("10010111", figures::trie_10010111, figures::trie_10010111_edges);

  const json snake = json::parse(read_golden("snake_1011101100.json"));
  std::vector<std::pair<int, int>> tiles;
  for (const auto& t : snake["tiles"]) tiles.emplace_back(t[0].get<int>(), t[1].get<int>());
  if (tiles != figures::snake_1011101100_tiles) o.fail("snake tiles differ from the drawing");
  if (snake["sign_sequence"] != json({1, 0, 1, 1, 1, 0, 1, 1, 0, 0})) o.fail("sign sequence differs");
  if (sorted(snake["matchings"]["minimal"].get<std::vector<std::string>>()) != sorted(figures::minimal_1011101100)) {
    o.fail("minimal matching differs from the drawing");
  }

  const auto check_pm = [&](const std::string& file, const std::vector<std::string>& edges,
                            const std::vector<std::size_t>& fil) {
    const json doc = json::parse(read_golden(file));
    if (sorted(doc["matchings"]["pm"]["edges"].get<std::vector<std::string>>()) != sorted(edges)) {
      o.fail(file + ": matching differs from the drawing");
    }
    if (doc["matchings"]["pm"]["fil"].get<std::vector<std::size_t>>() != fil) o.fail(file + ": region differs");
  };
  check_pm("snake_1011101100_11010.json", figures::pm_11010, figures::fil_11010);
  check_pm("snake_1011101100_101101100.json", figures::pm_101101100, figures::fil_101101100);

  const json record = json::parse(read_golden("record_1011101100_101101100.json"));
  if (record["fil_blocks"].size() != 2 || record["fil_blocks"][0]["fil"] != json({4, 5}) ||
      record["fil_blocks"][1]["fil"] != json({8, 9, 10})) {
    o.fail("regions of 101101100 are not {d,e} and {h,i,j}");
  }
  if (o.passed) o.detail = std::to_string(golden_cases().size()) + " files match; drawings reproduced";
  return o;
}

Outcome sweep_criterion(std::size_t max_length, const std::vector<std::string>& only, double budget_seconds) {
  Outcome o;
  VerifyOptions options;
  options.max_length = max_length;
  options.only = only;
  options.jobs = 1;
  const VerifyReport report = run_verification(options);
  for (const PropertyResult& r : report.properties) {
    if (!r.passed) o.fail(r.module + "/" + r.name + " fails at " + r.counterexample->str() + ": " + r.message);
  }
  if (report.seconds >= budget_seconds) o.fail("took " + std::to_string(report.seconds) + " s");
  if (o.passed) {
    std::ostringstream line;
    line << report.words_checked << " words, " << report.properties.size() << " properties, " << report.seconds
         << " s";
    o.detail = line.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"counts for 10010111 and 101110", counts_criterion},
      {"golden figures", golden_criterion},
      {"exhaustive bijection suite (length <= 10)",
       [] {
         return sweep_criterion(10,
                                {"lrs_trie_equals_naive_trie", "antichain_trie_payloads_distinct",
                                 "antichain_trie_covers_all_antichains", "f_inverse_then_f_is_identity",
                                 "f_then_f_inverse_is_identity", "f_image_is_all_subwords", "pm_is_a_bijection",
                                 "pm_outputs_are_perfect", "fil_equals_up_closure"},
                                300);
       }},
      {"sign-function invariant suite (length <= 12)",
       [] {
         return sweep_criterion(12,
                                {"sign_function_invariants", "exactly_two_sign_functions",
                                 "minimal_matching_is_unique_boundary_matching"},
                                600);
       }},
      {"full property suite (length <= 10)", [] { return sweep_criterion(10, {}, 600); }},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " (" << o.detail << ")" << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
