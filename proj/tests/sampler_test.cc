#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <set>

#include "support/test_support.h"
#include "whitehead/error.h"
#include "whitehead/langcount.h"
#include "whitehead/sampler.h"

namespace whitehead {
namespace {

namespace t = testing;

// Upper-tail p-value of Pearson's statistic against a uniform law on `bins`.
double UniformChiSquareP(const std::map<std::string, long>& counts,
                         std::size_t bins, long draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(bins);
  double stat = 0;
  for (const auto& [w, c] : counts) {
    stat += (c - expected) * (c - expected) / expected;
  }
  stat += static_cast<double>(bins - counts.size()) * expected;
  boost::math::chi_squared dist(static_cast<double>(bins - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(Sampler, UniformSingleLetters) {
  WordSampler s({2, 1, SampleMode::kFreelyReduced, 1});
  std::map<std::string, long> counts;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) counts[s.Next().ToString()]++;
  EXPECT_EQ(counts.size(), 4u);
  EXPECT_GT(UniformChiSquareP(counts, 4, draws), 0.001);
}

TEST(Sampler, UniformLengthThree) {
  WordSampler s({2, 3, SampleMode::kFreelyReduced, 2});
  std::map<std::string, long> counts;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) counts[s.Next().ToString()]++;
  EXPECT_EQ(counts.size(), 36u);
  EXPECT_GT(UniformChiSquareP(counts, 36, draws), 0.001);
}

TEST(Sampler, UniformCyclicallyReduced) {
  WordSampler s({2, 4, SampleMode::kCyclicallyReduced, 3});
  std::map<std::string, long> counts;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) {
    const Word w = s.Next();
    ASSERT_TRUE(w.IsCyclicallyReduced());
    counts[w.ToString()]++;
  }
  const auto bins = CountCyclicallyReduced(2, 4).convert_to<std::size_t>();
  EXPECT_EQ(counts.size(), bins);
  EXPECT_GT(UniformChiSquareP(counts, bins, draws), 0.001);
}

TEST(Sampler, AcceptanceRateMatchesCounts) {
  WordSampler s({2, 10, SampleMode::kCyclicallyReduced, 4});
  for (int i = 0; i < 100000; ++i) s.Next();
  const double rate = static_cast<double>(s.accepted()) / s.attempts();
  const double exact = CountCyclicallyReduced(2, 10).convert_to<double>() /
                       CountFreelyReduced(2, 10).convert_to<double>();
  EXPECT_NEAR(rate, exact, 0.01);
}

TEST(Sampler, DeterministicAndReduced) {
  for (auto mode : {SampleMode::kFreelyReduced, SampleMode::kCyclicallyReduced}) {
    WordSampler x({3, 25, mode, 77});
    WordSampler y({3, 25, mode, 77});
    WordSampler z({3, 25, mode, 78});
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
      const Word a = x.Next();
      ASSERT_EQ(a, y.Next());
      differs |= a != z.Next();
      ASSERT_EQ(a.size(), 25u);
      ASSERT_TRUE(t::NaiveIsReduced(a.ToString()));
    }
    EXPECT_TRUE(differs);
  }
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(2, 0));
  EXPECT_EQ(DeriveSeed(5, 9), DeriveSeed(5, 9));
}

TEST(Sampler, Errors) {
  EXPECT_THROW(WordSampler({2, 0, SampleMode::kFreelyReduced, 0}), Error);
  EXPECT_THROW(WordSampler({0, 3, SampleMode::kFreelyReduced, 0}), Error);
  EXPECT_THROW(ParseSampleMode("uniform"), Error);
  EXPECT_EQ(ParseSampleMode("cyclic"), SampleMode::kCyclicallyReduced);
  EXPECT_EQ(ParseSampleMode("freely_reduced"), SampleMode::kFreelyReduced);
  EXPECT_EQ(SampleModeName(SampleMode::kCyclicallyReduced), "cyclically_reduced");
}

TEST(Enumerator, Examples) {
  EXPECT_EQ(EnumerateWords(2, 2, SampleMode::kFreelyReduced).size(), 12u);
  EXPECT_EQ(EnumerateWords(2, 1, SampleMode::kCyclicallyReduced).size(), 4u);
  EXPECT_THROW(EnumerateWords(2, 20, SampleMode::kFreelyReduced, 1000), Error);
}

TEST(Enumerator, MatchesCountsAndBruteForce) {
  for (int rank = 1; rank <= 3; ++rank) {
    for (std::size_t n = 1; n <= (rank == 3 ? 5u : 8u); ++n) {
      for (auto mode : {SampleMode::kFreelyReduced, SampleMode::kCyclicallyReduced}) {
        const auto words = EnumerateWords(rank, n, mode);
        const BigInt count = mode == SampleMode::kFreelyReduced
                                 ? CountFreelyReduced(rank, static_cast<int>(n))
                                 : CountCyclicallyReduced(rank, static_cast<int>(n));
        ASSERT_EQ(BigInt(words.size()), count);
        const auto brute = mode == SampleMode::kFreelyReduced
                               ? t::BruteForceReduced(rank, static_cast<int>(n))
                               : t::BruteForceCyclicallyReduced(rank, static_cast<int>(n));
        std::set<std::string> expect(brute.begin(), brute.end());
        std::set<std::string> got;
        for (const auto& w : words) got.insert(w.ToString());
        ASSERT_EQ(got, expect);
        ASSERT_TRUE(std::is_sorted(words.begin(), words.end()));
      }
    }
  }
}

}  // namespace
}  // namespace whitehead
