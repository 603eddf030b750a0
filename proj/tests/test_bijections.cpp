#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snakeword/bijections.hpp"

using namespace snakeword;

namespace {

const BinaryWord host = parse_word("1011101100");

BinaryWord apply_f(const BinaryWord& w, std::vector<std::size_t> a) {
  return f(poset_from_word(w), w, Antichain{std::move(a)});
}

}  // namespace

TEST(F, FigureExamples) {
  EXPECT_EQ(apply_f(host, {4, 10}).str(), "101101100");
  EXPECT_EQ(apply_f(host, {1, 3, 7, 9}).str(), "11010");
  EXPECT_TRUE(apply_f(host, {}).empty());
}

TEST(F, SingleElementAntichains) {
  EXPECT_EQ(apply_f(host, {1}).str(), "1");
  EXPECT_EQ(apply_f(host, {4}).str(), "1011");
}

TEST(F, JumpPoints) {
  const FImage img = f_detail(poset_from_word(host), host, Antichain{{1, 3, 7, 9}});
  const ExtremaList e = extrema(poset_from_word(host));
  ASSERT_EQ(img.jump_points.size(), 3u);
  for (std::size_t m : img.jump_points) {
    EXPECT_NE(std::find(e.points.begin(), e.points.end(), m), e.points.end()) << m;
  }
  EXPECT_LT(1u, img.jump_points[0]);
  EXPECT_LT(img.jump_points[0], 3u);
}

TEST(F, RejectsBadInput) {
  const PiecewisePoset p = poset_from_word(host);
  try {
    f(p, host, Antichain{{2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnAntichain);
  }
  try {
    f(poset_from_word(parse_word("101")), host, Antichain{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PosetMismatch);
  }
}

TEST(FInverse, Examples) {
  EXPECT_EQ(f_inverse(host, parse_word("11010")).elements, (std::vector<std::size_t>{1, 3, 7, 9}));
  EXPECT_EQ(f_inverse(host, parse_word("101101100")).elements, (std::vector<std::size_t>{4, 10}));
  EXPECT_TRUE(f_inverse(host, BinaryWord{}).elements.empty());
  EXPECT_THROW(f_inverse(parse_word("10"), parse_word("11")), Error);
}

TEST(Bijection, RoundTripsExhaustively) {
  for (const std::string& text : oracle::words_up_to(10)) {
    const BinaryWord w = parse_word(text);
    const PiecewisePoset p = poset_from_word(w);
    const auto subwords = enumerate_subwords(w);
    std::set<BinaryWord> image;
    for (const Antichain& a : enumerate_antichains(p)) {
      const BinaryWord s = f(p, w, a);
      ASSERT_TRUE(subwords.contains(s)) << text;
      ASSERT_EQ(f_inverse(w, s), a) << text;
      image.insert(s);
    }
    ASSERT_EQ(image, subwords) << text;
    for (const BinaryWord& s : subwords) ASSERT_EQ(f(p, w, f_inverse(w, s)), s) << text;
  }
}

TEST(Bijection, FilterIdentityAgainstIndependentClosure) {
  for (const std::string& text : oracle::words_up_to(9)) {
    const BinaryWord w = parse_word(text);
    for (const BinaryWord& s : enumerate_subwords(w)) {
      const PmDetail d = pm_detail(w, s);
      const std::vector<std::size_t> fil(d.filter.tiles.begin(), d.filter.tiles.end());
      ASSERT_EQ(fil, oracle::up_closure(text, f_inverse(w, s).elements)) << text << " " << s;
    }
  }
}

TEST(FullCorrespondence, FigureRecord) {
  const CorrespondenceRecord r = full_correspondence(host, parse_word("11010"));
  EXPECT_EQ(r.embedding.indices, (std::vector<std::size_t>{1, 3, 6, 7, 9}));
  EXPECT_EQ(r.antichain.elements, (std::vector<std::size_t>{1, 3, 7, 9}));
  EXPECT_EQ(r.filter.elements, (std::vector<std::size_t>{1, 3, 4, 5, 7, 8, 9}));
  EXPECT_EQ(r.matching, pm(host, parse_word("11010")));
}

TEST(FullCorrespondence, EmptySubword) {
  const CorrespondenceRecord r = full_correspondence(host, BinaryWord{});
  EXPECT_TRUE(r.antichain.elements.empty());
  EXPECT_TRUE(r.filter.elements.empty());
  EXPECT_EQ(r.matching, minimal_matching(snake_from_word(host)));
}
