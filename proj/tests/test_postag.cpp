#include <gtest/gtest.h>

#include <random>

#include "paratask/postag/ngram_profile.hpp"
#include "paratask/postag/tagger.hpp"
#include "paratask/textcore/text.hpp"
#include "support.hpp"

namespace paratask::postag {
namespace {

PosNgram gram(std::initializer_list<PosTag> tags) {
  PosNgram g;
  g.order = static_cast<std::uint8_t>(tags.size());
  std::size_t i = 0;
  for (auto t : tags) g.tags[i++] = t;
  return g;
}

std::vector<PosTag> tag_text(const Tagger& t, std::string_view s) {
  return t.tag(textcore::tokenize(textcore::normalize(s)));
}

TEST(Tagger, CascadeExamples) {
  const auto& t = CascadeTagger::bundled();
  EXPECT_EQ(t.tag_form("the"), PosTag::DET);
  EXPECT_EQ(t.tag_form("running"), PosTag::VERB);
  EXPECT_EQ(t.tag_form("flibbertigib"), PosTag::NOUN);
  EXPECT_EQ(t.tag_form("quickly"), PosTag::ADV);
  EXPECT_EQ(t.tag_form("famous"), PosTag::ADJ);
  EXPECT_EQ(t.tag_form("happiness"), PosTag::NOUN);
  EXPECT_EQ(t.tag_form("."), PosTag::PUNCT);
  EXPECT_EQ(t.tag_form("3.5"), PosTag::NUM);
  EXPECT_EQ(t.tag_form("1,000"), PosTag::NUM);
}

TEST(Tagger, SuffixNeedsAStem) {
  const auto& t = CascadeTagger::bundled();
  // -ing wants three letters of stem
  EXPECT_EQ(t.tag_form("ing"), PosTag::NOUN);
  EXPECT_EQ(t.tag_form("zing"), PosTag::NOUN);
  EXPECT_EQ(t.tag_form("zapping"), PosTag::VERB);
}

TEST(Tagger, OneTagPerToken) {
  const auto& t = CascadeTagger::bundled();
  auto tags = tag_text(t, "The nation's future is in your hands, 100%!");
  EXPECT_EQ(tags.size(), textcore::tokenize(textcore::normalize("The nation's future is in your hands, 100%!")).size());
  EXPECT_EQ(tags.front(), PosTag::DET);
  EXPECT_EQ(tags.back(), PosTag::PUNCT);
}

TEST(Tagger, VersionReflectsTables) {
  const auto& bundled = CascadeTagger::bundled();
  CascadeTagger small("# version\t1\nthe\tDET\n", "# version\t1\ning\tVERB\t3\n");
  EXPECT_NE(bundled.version(), small.version());
  EXPECT_EQ(small.tag_form("the"), PosTag::DET);
  EXPECT_EQ(small.tag_form("walking"), PosTag::VERB);
  EXPECT_EQ(small.tag_form("quickly"), PosTag::NOUN);
}

TEST(Tagger, RejectsMalformedTables) {
  EXPECT_PT_ERROR(CascadeTagger("# version\t1\nthe\tARTICLE\n", "# version\t1\n"), ErrorCode::ParseError);
}

TEST(Profile, HandCountedExample) {
  auto p = pos_ngram_profile(std::vector<PosTag>{PosTag::DET, PosTag::NOUN, PosTag::VERB});
  EXPECT_EQ(p.order(1).size(), 3u);
  EXPECT_DOUBLE_EQ(p.frequency(gram({PosTag::DET})), 1.0 / 3);
  EXPECT_DOUBLE_EQ(p.frequency(gram({PosTag::VERB})), 1.0 / 3);
  EXPECT_DOUBLE_EQ(p.frequency(gram({PosTag::DET, PosTag::NOUN})), 0.5);
  EXPECT_DOUBLE_EQ(p.frequency(gram({PosTag::NOUN, PosTag::VERB})), 0.5);
  EXPECT_DOUBLE_EQ(p.frequency(gram({PosTag::DET, PosTag::NOUN, PosTag::VERB})), 1.0);
  EXPECT_TRUE(p.order(4).empty());
  EXPECT_EQ(p.frequency(gram({PosTag::ADJ})), 0.0);
}

TEST(Profile, EmptyAndRepeated) {
  auto empty = pos_ngram_profile(std::vector<PosTag>{});
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(empty.order(n).empty());
  auto nn = pos_ngram_profile(std::vector<PosTag>{PosTag::NOUN, PosTag::NOUN});
  EXPECT_DOUBLE_EQ(nn.frequency(gram({PosTag::NOUN})), 1.0);
  EXPECT_DOUBLE_EQ(nn.frequency(gram({PosTag::NOUN, PosTag::NOUN})), 1.0);
}

TEST(Profile, RandomSequencesSumToOne) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> tag(0, kNumPosTags - 1);
  std::uniform_int_distribution<int> len(0, 30);
  for (int i = 0; i < 200; ++i) {
    std::vector<PosTag> tags(len(rng));
    for (auto& t : tags) t = static_cast<PosTag>(tag(rng));
    auto p = pos_ngram_profile(tags);
    auto distinct = distinct_ngrams(tags);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto& m = p.order(n);
      EXPECT_LE(m.size(), tags.size() >= n ? tags.size() - n + 1 : 0);
      EXPECT_EQ(m.size(), distinct[n - 1].size());
      if (m.empty()) continue;
      double sum = 0;
      for (const auto& [g, f] : m) {
        EXPECT_GT(f, 0.0);
        EXPECT_LE(f, 1.0);
        sum += f;
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(PosNgram, StringRoundTripAndOrdering) {
  auto g = gram({PosTag::DET, PosTag::NOUN});
  EXPECT_EQ(g.to_string(), "DET NOUN");
  EXPECT_EQ(PosNgram::parse("DET NOUN"), g);
  EXPECT_FALSE(PosNgram::parse("DET FOO"));
  EXPECT_LT(gram({PosTag::NOUN}), gram({PosTag::DET}));  // by tag code within an order
}

}  // namespace
}  // namespace paratask::postag
