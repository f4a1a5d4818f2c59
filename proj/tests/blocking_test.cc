#include <gtest/gtest.h>

#include <random>

#include "support/test_support.h"
#include "whitehead/automorphism.h"
#include "whitehead/blocking.h"
#include "whitehead/error.h"

namespace whitehead {
namespace {

namespace t = testing;

Word W(const std::string& s, int rank = 2) { return ParseWord(s, rank); }

TEST(Blocking, Examples) {
  EXPECT_EQ(MakeBlockingWord(W("abAB")).pattern.ToString(), "aaaaaabbbbbb");
  EXPECT_EQ(MakeBlockingWord(W("a")).pattern.ToString(), "aaabbb");
  EXPECT_EQ(MakeBlockingWord(W("a")).source_length, 1u);
  EXPECT_THROW(MakeBlockingWord(W("1")), Error);
  EXPECT_THROW(MakeBlockingWord(W("a", 3)), Error);
  for (int l = 1; l <= 20; ++l) {
    const Word u = W("a^" + std::to_string(l));
    const BlockingWord b = MakeBlockingWord(u);
    EXPECT_EQ(b.pattern.size(), 2u * l + 4);
    EXPECT_TRUE(IsFreelyReduced(b.pattern.letters()));
  }
}

TEST(Scan, Examples) {
  StreamMatcher m(W("a^3b^3"));
  const ScanResult hit = ScanStream(m, W("Ba^3b^3A"));
  ASSERT_TRUE(hit.found_at.has_value());
  EXPECT_EQ(*hit.found_at, 7u);
  EXPECT_EQ(hit.letters_read, 7u);
  m.Reset();
  const ScanResult miss = ScanStream(m, W("ab"));
  EXPECT_FALSE(miss.found_at.has_value());
  EXPECT_EQ(miss.letters_read, 2u);

  const BlockingWord b = MakeBlockingWord(W("a"));
  const TVerdict reject = TReject(b, W("a^3b^3"));
  EXPECT_TRUE(reject.not_in_orbit);
  EXPECT_EQ(reject.position, 6u);
  EXPECT_EQ(reject.letters_read, 6u);
  const TVerdict unknown = TReject(b, W("b"));
  EXPECT_FALSE(unknown.not_in_orbit);
  EXPECT_EQ(unknown.letters_read, 1u);
}

TEST(Scan, CyclicMode) {
  const BlockingWord b = MakeBlockingWord(W("a"));
  // bbbaaa contains a^3b^3 only across the seam.
  EXPECT_FALSE(TReject(b, W("bbbaaa")).not_in_orbit);
  const TVerdict wrap = TReject(b, W("bbbaaa"), ScanMode::kCyclic);
  EXPECT_TRUE(wrap.not_in_orbit);
  EXPECT_EQ(wrap.letters_read, 9u);
  // Pattern longer than the word can still occur cyclically only by going
  // around more than once; the scan reads each letter at most twice.
  EXPECT_FALSE(TReject(b, W("ab"), ScanMode::kCyclic).not_in_orbit);
}

TEST(Matcher, BorderTable) {
  StreamMatcher m(W("abab"));
  const auto border = m.border();
  ASSERT_EQ(border.size(), 5u);
  EXPECT_EQ(border[0], -1);
  for (std::size_t i = 1; i < border.size(); ++i) {
    EXPECT_LT(border[i], static_cast<int>(i));
  }
  EXPECT_EQ(border[4], 2);
  EXPECT_THROW(StreamMatcher(W("1")), Error);
}

TEST(MatcherProperty, AgreesWithNaiveSearch) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::string p = t::RandomReduced(rng, 2, 1 + static_cast<int>(rng() % 5));
    const std::string v = t::RandomReduced(rng, 2, static_cast<int>(rng() % 40));
    StreamMatcher m(W(p));
    const ScanResult r = ScanStream(m, W(v.empty() ? "1" : v));
    const std::size_t pos = v.find(p);
    if (pos == std::string::npos) {
      ASSERT_FALSE(r.found_at.has_value()) << p << " in " << v;
      ASSERT_EQ(r.letters_read, v.size());
    } else {
      ASSERT_TRUE(r.found_at.has_value()) << p << " in " << v;
      ASSERT_EQ(*r.found_at, pos + p.size());
      ASSERT_EQ(r.letters_read, pos + p.size());
    }
    ASSERT_LE(r.letters_read, v.size());
    ASSERT_LE(m.state(), p.size());

    const TVerdict cyc = TReject(StreamMatcher(W(p)), W(v.empty() ? "1" : v),
                                 ScanMode::kCyclic);
    const std::string core = t::NaiveCyclicCore(v);
    if (core == v && !v.empty() && p.size() <= v.size()) {
      ASSERT_EQ(cyc.not_in_orbit, t::NaiveCyclicContains(v, p)) << p << " " << v;
    }
  }
}

// Automorphic images of u never contain the blocking word of u, and one of
// the two cyclic exponents stays at most |u| + 1.
TEST(BlockingProperty, NoOccurrenceInImages) {
  std::mt19937_64 rng(42);
  for (const char* us : {"a", "ab", "abAB", "aab", "a^2b^3"}) {
    const Word u = W(us);
    const BlockingWord b = MakeBlockingWord(u);
    const std::string p = b.pattern.ToString();
    for (int trial = 0; trial < 1000; ++trial) {
      const auto phi = RandomAutomorphism(2, static_cast<int>(rng() % 16), rng());
      const Word v = CyclicReduceDeque(phi.Apply(u)).core;
      ASSERT_FALSE(TReject(b, v).not_in_orbit) << us << " " << phi.ToString();
      ASSERT_FALSE(TReject(b, v, ScanMode::kCyclic).not_in_orbit);
      ASSERT_FALSE(t::NaiveCyclicContains(v.ToString(), p));
      const ExponentStats s = ComputeExponentStats(v);
      ASSERT_LE(std::min(s.Cyclic(1), s.Cyclic(2)), static_cast<int>(u.size()) + 1);
    }
  }
}

}  // namespace
}  // namespace whitehead
