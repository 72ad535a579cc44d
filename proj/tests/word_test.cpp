#include "acw/word.hpp"

#include <gtest/gtest.h>

#include <cstddef>
#include <vector>

using acw::Word;

namespace {

Word wd(const char* digits, acw::Symbol k = 2) {
  return Word::from_digits(digits, k);
}

// Smallest period d dividing |w|; the primitive root is the prefix of
// that length. Kept test-local so root comparisons stay independent of
// the functions under test.
std::vector<acw::Symbol> brute_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t t = d; t < n && repeats; ++t) {
      repeats = w[t] == w[t - d];
    }
    if (repeats) {
      return {w.symbols().begin(),
              w.symbols().begin() + static_cast<std::ptrdiff_t>(d)};
    }
  }
  return w.symbols();
}

TEST(Word, ValidatesSymbolsAgainstAlphabet) {
  EXPECT_NO_THROW(Word({0, 1, 2}, 3));
  EXPECT_THROW(Word({0, 3}, 3), std::invalid_argument);
  EXPECT_THROW(Word({0}, 0), std::invalid_argument);
  EXPECT_THROW(Word::from_digits("01x!", 2), std::invalid_argument);
}

TEST(Word, SerializationSwitchesAtAlphabetTen) {
  EXPECT_EQ(acw::to_string(wd("0101")), "0101");
  EXPECT_EQ(acw::to_string(Word({9, 0, 3}, 10)), "903");
  EXPECT_EQ(acw::to_string(Word({10, 3, 11}, 12)), "10,3,11");
  // raising the glyph limit switches back to one glyph per symbol
  EXPECT_EQ(acw::to_string(Word({10, 3, 11}, 12), 36), "a3b");
}

TEST(Hamming, CountsDifferingPositions) {
  EXPECT_EQ(acw::hamming(wd("0101"), wd("0101")), 0u);
  EXPECT_EQ(acw::hamming(wd("0001"), wd("0010")), 2u);
  EXPECT_THROW(acw::hamming(wd("01"), wd("011")), std::invalid_argument);
  EXPECT_THROW(acw::hamming(wd("01", 2), wd("01", 3)), std::invalid_argument);
}

TEST(Hamming, ConcatenationsOfExtremalPairDifferTwice) {
  // x = 000000010000, y = 00000001: xy and yx differ in exactly 2 places
  const Word x = wd("000000010000");
  const Word y = wd("00000001");
  EXPECT_EQ(acw::hamming(acw::concat(x, y), acw::concat(y, x)), 2u);
}

TEST(Rotate, IsTheLeftShift) {
  // over {t,e,a} as 0,1,2: eat = rotate(tea, 1) = rotate(ate, 2)
  const Word tea = wd("012", 3);
  const Word ate = wd("201", 3);
  const Word eat = wd("120", 3);
  EXPECT_EQ(acw::rotate(tea, 1), eat);
  EXPECT_EQ(acw::rotate(ate, 2), eat);

  EXPECT_EQ(acw::rotate(wd("0001"), 0), wd("0001"));
  EXPECT_EQ(acw::rotate(wd("0001"), 4), wd("0001"));
  EXPECT_EQ(acw::rotate(wd("0001"), 2), wd("0100"));
  EXPECT_THROW(acw::rotate(wd("0001"), 5), std::invalid_argument);
  EXPECT_THROW(acw::rotate(Word({}, 2), 0), std::invalid_argument);
}

TEST(ShiftProfile, MatchesRotationByRotationCounts) {
  EXPECT_EQ(acw::shift_profile(wd("0001")).distances,
            (std::vector<std::size_t>{0, 2, 2, 2}));
  EXPECT_EQ(acw::shift_profile(wd("0000")).distances,
            (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(acw::shift_profile(wd("0101")).distances,
            (std::vector<std::size_t>{0, 4, 0, 4}));
  EXPECT_THROW(acw::shift_profile(Word({}, 2)), std::invalid_argument);
}

TEST(IsPrimitive, DetectsPowers) {
  EXPECT_TRUE(acw::is_primitive(wd("0123", 4)));    // hots
  EXPECT_FALSE(acw::is_primitive(wd("01230123", 4)));  // hotshots
  EXPECT_TRUE(acw::is_primitive(wd("0")));
  EXPECT_FALSE(acw::is_primitive(wd("0101")));
  EXPECT_TRUE(acw::is_primitive(wd("011")));
  EXPECT_THROW(acw::is_primitive(Word({}, 2)), std::invalid_argument);
}

TEST(IsLyndon, SmallestAmongRotations) {
  EXPECT_TRUE(acw::is_lyndon(wd("0001")));
  EXPECT_FALSE(acw::is_lyndon(wd("0101")));
  EXPECT_FALSE(acw::is_lyndon(wd("10")));
  EXPECT_TRUE(acw::is_lyndon(wd("0")));
  EXPECT_TRUE(acw::is_lyndon(wd("012", 3)));
}

TEST(Commutes, ChecksConcatenationEquality) {
  EXPECT_TRUE(acw::commutes(wd("01"), wd("0101")));
  EXPECT_FALSE(acw::commutes(wd("0"), wd("1")));
  EXPECT_TRUE(acw::commutes(wd("001"), wd("001001")));
  EXPECT_THROW(acw::commutes(Word({}, 2), wd("1")), std::invalid_argument);
}

TEST(WordProperty, ConjugateDistanceIsNeverOne) {
  // every split of every word: ham(xy, yx) == profile(xy)[|x|] != 1
  for (acw::Symbol k = 1; k <= 3; ++k) {
    for (std::size_t n = 2; n <= 14; ++n) {
      acw::for_each_word(k, n, [&](const std::vector<acw::Symbol>& symbols) {
        const auto profile = acw::shift_profile(Word(symbols, k));
        for (std::size_t i = 1; i < n; ++i) {
          ASSERT_NE(profile.distances[i], 1u);
        }
      });
    }
  }
}

TEST(WordProperty, ShiftProfileIsSymmetric) {
  for (acw::Symbol k = 2; k <= 3; ++k) {
    const std::size_t n_max = k == 2 ? 12 : 8;
    for (std::size_t n = 1; n <= n_max; ++n) {
      acw::for_each_word(k, n, [&](const std::vector<acw::Symbol>& symbols) {
        const auto profile = acw::shift_profile(Word(symbols, k));
        for (std::size_t i = 1; i < n; ++i) {
          ASSERT_EQ(profile.distances[i], profile.distances[n - i]);
        }
      });
    }
  }
}

TEST(WordProperty, CommutingMeansCommonRoot) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      acw::for_each_word(2, m, [&](const std::vector<acw::Symbol>& xs) {
        const Word x(xs, 2);
        acw::for_each_word(2, n, [&](const std::vector<acw::Symbol>& ys) {
          const Word y(ys, 2);
          ASSERT_EQ(acw::commutes(x, y), brute_root(x) == brute_root(y));
        });
      });
    }
  }
}

TEST(WordProperty, LyndonImpliesPrimitive) {
  for (std::size_t n = 1; n <= 12; ++n) {
    acw::for_each_word(2, n, [&](const std::vector<acw::Symbol>& symbols) {
      const Word w(symbols, 2);
      if (acw::is_lyndon(w)) {
        ASSERT_TRUE(acw::is_primitive(w));
      }
    });
  }
}

TEST(WordProperty, RotationPreservesHamming) {
  acw::for_each_word(2, 6, [&](const std::vector<acw::Symbol>& us) {
    const Word u(us, 2);
    acw::for_each_word(2, 6, [&](const std::vector<acw::Symbol>& vs) {
      const Word v(vs, 2);
      const std::size_t d = acw::hamming(u, v);
      for (std::size_t j = 0; j <= 6; ++j) {
        ASSERT_EQ(acw::hamming(acw::rotate(u, j), acw::rotate(v, j)), d);
      }
    });
  });
}

}  // namespace
