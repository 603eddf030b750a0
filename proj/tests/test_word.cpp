#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "snakeword/word.hpp"
#include "trie_shape.hpp"

using namespace snakeword;

namespace {

BinaryWord w(const char* text) { return parse_word(text); }

std::vector<std::size_t> indices_of_runs(const std::vector<IndexRun>& runs) {
  std::vector<std::size_t> out;
  for (const IndexRun& r : runs) {
    out.push_back(r.first);
    out.push_back(r.last);
  }
  return out;
}

}  // namespace

TEST(ParseWord, AcceptsBinaryWords) {
  const BinaryWord x = w("101110");
  EXPECT_EQ(x.size(), 6u);
  EXPECT_EQ(x.at(1), 1);
  EXPECT_EQ(x.at(2), 0);
  EXPECT_EQ(x.str(), "101110");
}

TEST(ParseWord, EmptyStringIsTheEmptyWord) {
  const BinaryWord x = w("");
  EXPECT_TRUE(x.empty());
  EXPECT_EQ(x.str(), "");
}

TEST(ParseWord, RejectsLeadingZero) {
  try {
    parse_word("0101");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LeadingZero);
  }
}

TEST(ParseWord, RejectsForeignCharacters) {
  try {
    parse_word("1021");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCharacter);
  }
}

TEST(BinaryWord, AtIsOneBasedAndChecked) {
  const BinaryWord x = w("10");
  EXPECT_THROW(x.at(0), Error);
  EXPECT_THROW(x.at(3), Error);
}

TEST(BinaryWord, LengthLexOrder) {
  EXPECT_LT(w(""), w("1"));
  EXPECT_LT(w("11"), w("100"));
  EXPECT_LT(w("100"), w("101"));
}

TEST(FactorBlocks, WordWithFourBlocks) {
  const BlockFactorization f = factor_blocks(w("101110"));
  ASSERT_EQ(f.count(), 4u);
  EXPECT_EQ(f.blocks, (std::vector<Block>{{1, 1}, {0, 1}, {1, 3}, {0, 1}}));
  EXPECT_EQ(f.ends(), (std::vector<std::size_t>{1, 2, 5, 6}));
  EXPECT_EQ(f.str(), "1^1 0^1 1^3 0^1");
}

TEST(FactorBlocks, WordWithFiveBlocks) {
  const BlockFactorization f = factor_blocks(w("10010111"));
  EXPECT_EQ(f.blocks, (std::vector<Block>{{1, 1}, {0, 2}, {1, 1}, {0, 1}, {1, 3}}));
  EXPECT_EQ(f.count(), 5u);
}

TEST(FactorBlocks, SingleLetter) {
  EXPECT_EQ(factor_blocks(w("1")).blocks, (std::vector<Block>{{1, 1}}));
}

TEST(FactorBlocks, EmptyWordIsAnError) { EXPECT_THROW(factor_blocks(w("")), Error); }

TEST(IsSubword, Examples) {
  EXPECT_TRUE(is_subword(w("11010"), w("1011101100")));
  EXPECT_TRUE(is_subword(w(""), w("1011")));
  EXPECT_FALSE(is_subword(w("11"), w("10")));
}

TEST(IsSubword, AgreesWithBruteForce) {
  for (const std::string& host : oracle::words_up_to(6)) {
    const auto expected = oracle::subwords(host);
    for (const std::string& cand : oracle::words_up_to(6)) {
      EXPECT_EQ(is_subword(w(cand.c_str()), w(host.c_str())), expected.contains(cand)) << cand << " in " << host;
    }
  }
}

TEST(LeftmostEmbedding, FourRuns) {
  const Embedding e = leftmost_embedding(w("11010"), w("1011101100"));
  EXPECT_EQ(e.indices, (std::vector<std::size_t>{1, 3, 6, 7, 9}));
  EXPECT_EQ(indices_of_runs(e.runs), (std::vector<std::size_t>{1, 1, 3, 3, 6, 7, 9, 9}));
}

TEST(LeftmostEmbedding, SingleLetter) {
  const Embedding e = leftmost_embedding(w("1"), w("1011"));
  EXPECT_EQ(e.indices, (std::vector<std::size_t>{1}));
  EXPECT_EQ(indices_of_runs(e.runs), (std::vector<std::size_t>{1, 1}));
}

TEST(LeftmostEmbedding, TwoLongRuns) {
  // Greedy scan: 1->1, 0->2, 1->3, 1->4, 0->6, 1->7, 1->8, 0->9, 0->10.
  const Embedding e = leftmost_embedding(w("101101100"), w("1011101100"));
  EXPECT_EQ(e.indices, (std::vector<std::size_t>{1, 2, 3, 4, 6, 7, 8, 9, 10}));
  EXPECT_EQ(indices_of_runs(e.runs), (std::vector<std::size_t>{1, 4, 6, 10}));
}

TEST(LeftmostEmbedding, NotASubwordThrows) {
  try {
    leftmost_embedding(w("11"), w("10"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubword);
  }
}

TEST(ConsecutiveRuns, SplitsAtGaps) {
  const std::vector<std::size_t> idx{2, 3, 5, 8, 9, 10};
  EXPECT_EQ(indices_of_runs(consecutive_runs(idx)), (std::vector<std::size_t>{2, 3, 5, 5, 8, 10}));
}

TEST(EnumerateSubwords, WorkedExampleCounts) {
  EXPECT_EQ(enumerate_subwords(w("101110")).size(), 16u);
  EXPECT_EQ(enumerate_subwords(w("10010111")).size(), 32u);
  EXPECT_EQ(enumerate_subwords(w("1")), (std::set<BinaryWord>{w(""), w("1")}));
}

TEST(EnumerateSubwords, MatchesIndependentCounts) {
  for (const std::string& host : oracle::words_up_to(10)) {
    EXPECT_EQ(enumerate_subwords(w(host.c_str())).size(), oracle::subword_count(host)) << host;
  }
}

TEST(EnumerateSubwords, MatchesBruteForceSets) {
  for (const std::string& host : oracle::words_up_to(7)) {
    std::set<std::string> got;
    for (const BinaryWord& s : enumerate_subwords(w(host.c_str()))) got.insert(s.str());
    EXPECT_EQ(got, oracle::subwords(host)) << host;
  }
}

TEST(EnumerateSubwords, CapIsEnforced) {
  try {
    enumerate_subwords(w("1010101"), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(SubwordTrie, SingleLetterWord) {
  const SubwordTrie t = lrs_subword_trie(w("1"));
  ASSERT_EQ(t.size(), 2u);
  const auto child = t.node(t.root()).left;
  ASSERT_TRUE(child);
  EXPECT_EQ(t.node(*child).edge, Bit{1});
  EXPECT_FALSE(t.node(t.root()).right);
}

TEST(SubwordTrie, NodeCountsForWorkedExamples) {
  EXPECT_EQ(lrs_subword_trie(w("101110")).size(), 16u);
  EXPECT_EQ(lrs_subword_trie(w("10010111")).size(), 32u);
  EXPECT_EQ(naive_subword_trie(w("10010111")).size(), 32u);
}

// Shape of the trie of subwords of 101110: the spine, one single-node copy
// on three spine nodes, and a four-node copy hanging right of "1" that
// carries two more single nodes.
TEST(SubwordTrie, ShapeFor101110) {
  const SubwordTrie t = lrs_subword_trie(w("101110"));
  const auto nodes = nodes_by_branch_path(t);
  const std::map<std::string, std::string> expected = {
      {"", ""},           {"L", "1"},          {"LL", "10"},     {"LLL", "101"},    {"LLLL", "1011"},
      {"LLLLL", "10111"}, {"LLLLLL", "101110"}, {"LLR", "100"},   {"LLLR", "1010"},  {"LLLLR", "10110"},
      {"LR", "11"},       {"LRL", "111"},       {"LRLL", "1111"}, {"LRLLL", "11110"}, {"LRR", "110"},
      {"LRLR", "1110"},
  };
  ASSERT_EQ(nodes.size(), expected.size());
  for (const auto& [path, word] : expected) {
    ASSERT_TRUE(nodes.contains(path)) << path;
    EXPECT_EQ(t.payload(nodes.at(path)).str(), word) << path;
  }
}

TEST(SubwordTrie, LrsEqualsNaiveExhaustively) {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const BinaryWord& x : words_of_length(len)) {
      const SubwordTrie a = lrs_subword_trie(x);
      const SubwordTrie b = naive_subword_trie(x);
      ASSERT_TRUE(ordered_isomorphic(a, b)) << x;
      ASSERT_EQ(a.size(), oracle::subword_count(x.str())) << x;
    }
  }
}

TEST(SubwordTrie, PayloadsSpellTheirPaths) {
  const SubwordTrie t = lrs_subword_trie(w("10010111"));
  std::set<std::string> seen;
  for (NodeId id : t.preorder()) {
    EXPECT_EQ(t.edge_path(id), t.payload(id).str());
    EXPECT_TRUE(seen.insert(t.edge_path(id)).second);
  }
}

TEST(WordsOfLength, CountsAndOrder) {
  EXPECT_EQ(words_of_length(1), (std::vector<BinaryWord>{w("1")}));
  const auto four = words_of_length(4);
  ASSERT_EQ(four.size(), 8u);
  EXPECT_EQ(four.front(), w("1000"));
  EXPECT_EQ(four.back(), w("1111"));
}
