#include "support.hpp"

#include <gtest/gtest.h>

namespace braidkit {
namespace {

using testing::Rng;

TEST(Word, ParseAlpha) {
  const auto w = parse("aBabacABABAbbCB");
  EXPECT_EQ(w.size(), 15u);
  EXPECT_EQ(w.strands(), 4);
  EXPECT_EQ(w[0], sigma(1, 1));
  EXPECT_EQ(w[1], sigma(2, -1));
}

TEST(Word, ParseEmptyWithStrands) {
  const auto w = parse("", WordFormat::alpha, 4);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(w.strands(), 4);
  EXPECT_EQ(parse("").strands(), 2);
}

TEST(Word, ParseIntlist) {
  const auto w = parse("1 -2 1", WordFormat::intlist);
  EXPECT_EQ(w.strands(), 3);
  EXPECT_EQ(w, BraidWord(3, {sigma(1), sigma(2, -1), sigma(1)}));
  EXPECT_EQ(render(w, WordFormat::intlist), "1 -2 1");
}

TEST(Word, ParseSeparatorDots) {
  EXPECT_EQ(parse("ABACBA.ac"), parse("ABACBAac"));
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(parse("ab1"), InvalidArgument);
  EXPECT_THROW(parse("az"), InvalidArgument);  // z is past the 25 letters
  EXPECT_THROW(parse("1 0", WordFormat::intlist), InvalidArgument);
  EXPECT_THROW(parse("1 x", WordFormat::intlist), InvalidArgument);
  EXPECT_THROW(parse("c", WordFormat::alpha, 3), InvalidArgument);
  EXPECT_THROW(BraidWord(1), InvalidArgument);
}

TEST(Word, RenderAlpha) {
  EXPECT_EQ(render(BraidWord(3, {sigma(1), sigma(2, -1)})), "aB");
  EXPECT_EQ(render(BraidWord(4)), "");
  EXPECT_EQ(render(parse("aBabacABABAbbCB")), "aBabacABABAbbCB");
  EXPECT_THROW(render(BraidWord(30, {sigma(26)})), InvalidArgument);
  EXPECT_EQ(render(BraidWord(30, {sigma(26, -1)}), WordFormat::intlist), "-26");
}

TEST(Word, Invert) {
  EXPECT_EQ(render(invert(parse("aB"))), "bA");
  EXPECT_EQ(render(invert(parse(""))), "");
  EXPECT_EQ(render(invert(parse("abc"))), "CBA");
}

TEST(Word, Flip) {
  const auto n4 = [](const char* t) { return parse(t, WordFormat::alpha, 4); };
  EXPECT_EQ(render(flip(n4("a"))), "c");
  EXPECT_EQ(render(flip(n4("b"))), "b");
  EXPECT_EQ(render(flip(n4("aBc"))), "cBa");
}

TEST(Word, FreeReduce) {
  EXPECT_EQ(render(free_reduce(parse("aA"))), "");
  EXPECT_EQ(render(free_reduce(parse("aBbA"))), "");
  EXPECT_EQ(render(free_reduce(parse("aBab"))), "aBab");
}

TEST(Word, EmbedAndConcat) {
  const auto a = parse("a");
  const auto c = parse("c");
  EXPECT_THROW(concat(a, c), InvalidArgument);
  EXPECT_EQ(render(embed(a, 4) * c), "ac");
  EXPECT_THROW(embed(c, 3), InvalidArgument);
}

TEST(WordProperty, RoundTripBothFormats) {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const int n = testing::uniform(rng, 2, 8);
    const auto w = testing::random_word(rng, n, 40);
    EXPECT_EQ(parse(render(w), WordFormat::alpha, n), w);
    EXPECT_EQ(parse(render(w, WordFormat::intlist), WordFormat::intlist, n), w);
  }
}

TEST(WordProperty, Involutions) {
  Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    const auto w = testing::random_word(rng, testing::uniform(rng, 2, 7), 30);
    EXPECT_EQ(invert(invert(w)), w);
    EXPECT_EQ(flip(flip(w)), w);
    EXPECT_EQ(flip(invert(w)), invert(flip(w)));
    EXPECT_EQ(reverse(reverse(w)), w);
  }
}

TEST(WordProperty, FreeReduceShrinksAndKeepsExponents) {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const int n = testing::uniform(rng, 2, 6);
    const auto w = testing::random_word(rng, n, 40);
    const auto r = free_reduce(w);
    EXPECT_LE(r.size(), w.size());
    for (std::size_t p = 0; p + 1 < r.size(); ++p) {
      EXPECT_NE(r[p], r[p + 1].inverse());
    }
    std::vector<int> before(n), after(n);
    for (const auto& l : w) before[l.index] += l.sign;
    for (const auto& l : r) after[l.index] += l.sign;
    EXPECT_EQ(before, after);
    EXPECT_TRUE(equal(w, r));
  }
}

}  // namespace
}  // namespace braidkit
