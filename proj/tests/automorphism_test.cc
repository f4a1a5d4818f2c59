#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "support/test_support.h"
#include "whitehead/automorphism.h"
#include "whitehead/error.h"

namespace whitehead {
namespace {

namespace t = testing;

Word W(const std::string& s, int rank = 2) { return ParseWord(s, rank); }

TEST(Moves, Counts) {
  auto count = [](int rank) {
    int one = 0;
    int two = 0;
    for (const auto& m : WhiteheadMoves(rank)) (m.is_type_one() ? one : two)++;
    return std::pair{one, two};
  };
  EXPECT_EQ(count(1), std::pair(2, 0));
  EXPECT_EQ(count(2), std::pair(8, 12));
  EXPECT_EQ(count(3), std::pair(48, 90));
  EXPECT_THROW(WhiteheadMoves(kMaxWhiteheadRank + 1), Error);
  EXPECT_EQ(WhiteheadMoves(2).front(), WhiteheadAutomorphism::Identity(2));
}

// Type II moves with multiplier x: every other generator picks one of four
// actions, not all fixed. Counted here straight from the definition.
TEST(Moves, CountsMatchDefinition) {
  for (int r = 1; r <= 4; ++r) {
    long perms = 1;
    for (int i = 2; i <= r; ++i) perms *= i;
    const long type_one = perms << r;
    const long type_two = r >= 2 ? 2L * r * ((1L << (2 * (r - 1))) - 1) : 0;
    EXPECT_EQ(static_cast<long>(WhiteheadMoves(r).size()), type_one + type_two)
        << r;
  }
}

TEST(Moves, DistinctAndRoundTripText) {
  for (int r = 1; r <= 3; ++r) {
    std::set<std::string> seen;
    for (const auto& m : WhiteheadMoves(r)) {
      EXPECT_TRUE(seen.insert(m.ToString()).second) << m.ToString();
      EXPECT_EQ(WhiteheadAutomorphism::Parse(m.ToString(), r), m);
    }
  }
}

TEST(Moves, Examples) {
  const auto phi = WhiteheadAutomorphism::Parse("II:x=a,b->ba");
  EXPECT_EQ(phi.Apply(W("b")).ToString(), "ba");
  EXPECT_EQ(phi.Apply(W("ab")).ToString(), "aba");
  const auto swap = WhiteheadAutomorphism::Parse("I:perm=ba,inv=++");
  EXPECT_EQ(swap.Apply(W("abAB")).ToString(), "baBA");
  const auto both = WhiteheadAutomorphism::Parse("II:x=b,a->Bab");
  EXPECT_EQ(both.Apply(W("a")).ToString(), "Bab");
  EXPECT_EQ(both.Apply(W("b")).ToString(), "b");
  const auto flip = WhiteheadAutomorphism::Parse("I:perm=ab,inv=-+");
  EXPECT_EQ(flip.Apply(W("ab")).ToString(), "Ab");
}

TEST(Moves, ParseErrors) {
  auto kind = [](const std::string& s) {
    try {
      WhiteheadAutomorphism::Parse(s, 2);
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << s;
    return ErrorKind::kIo;
  };
  EXPECT_EQ(kind("III:x=a"), ErrorKind::kParse);
  EXPECT_EQ(kind("I:perm=aa"), ErrorKind::kParse);
  EXPECT_EQ(kind("II:x=a,b->bb"), ErrorKind::kParse);
  EXPECT_EQ(kind("II:x=a,a->ab"), ErrorKind::kParse);
  EXPECT_EQ(kind("II:x=ab"), ErrorKind::kParse);
  EXPECT_EQ(kind("I:perm=abc"), ErrorKind::kRank);
}

TEST(Moves, ApplyIsTheInducedHomomorphism) {
  std::mt19937_64 rng(21);
  for (int r = 2; r <= 3; ++r) {
    for (const auto& m : WhiteheadMoves(r)) {
      std::map<char, std::string> images;
      for (int g = 1; g <= r; ++g) {
        const std::string img = m.Image(Letter(g, 1)).ToString();
        images[static_cast<char>('a' + g - 1)] = img == "1" ? "" : img;
        EXPECT_EQ(m.Image(Letter(g, -1)), Invert(m.Image(Letter(g, 1))));
      }
      for (int trial = 0; trial < 50; ++trial) {
        const std::string w = t::RandomReduced(rng, r, static_cast<int>(rng() % 12));
        const std::string expect = t::NaiveApply(images, w);
        ASSERT_EQ(m.Apply(ParseWord(w, r)),
                  ParseWord(expect.empty() ? "1" : expect, r));
      }
    }
  }
}

TEST(MovesProperty, InverseUndoesEveryMove) {
  std::mt19937_64 rng(22);
  const auto& moves = WhiteheadMoves(2);
  for (int trial = 0; trial < 10000; ++trial) {
    const Word w = W(t::RandomReduced(rng, 2, static_cast<int>(rng() % 16)));
    const auto& m = moves[trial % moves.size()];
    const auto inv = m.Inverse();
    ASSERT_EQ(inv.is_type_one(), m.is_type_one());
    ASSERT_EQ(inv.Apply(m.Apply(w)), w) << m.ToString();
    ASSERT_EQ(m.Apply(inv.Apply(w)), w) << m.ToString();
  }
}

TEST(AutomorphismWord, RandomAndText) {
  EXPECT_TRUE(RandomAutomorphism(2, 0, 5).empty());
  EXPECT_EQ(RandomAutomorphism(2, 0, 5).Apply(W("ab")), W("ab"));
  const auto x = RandomAutomorphism(2, 5, 99);
  const auto y = RandomAutomorphism(2, 5, 99);
  EXPECT_EQ(x.ToString(), y.ToString());
  EXPECT_EQ(x.size(), 5u);
  EXPECT_EQ(AutomorphismWord::Parse(x.ToString()).ToString(), x.ToString());
  // Leftmost factor acts first.
  const auto phi = AutomorphismWord::Parse("II:x=b,a->ab;I:perm=ba,inv=++");
  EXPECT_EQ(phi.Apply(W("a")).ToString(), "ba");
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = RandomAutomorphism(2, static_cast<int>(rng() % 10), rng());
    const Word w = W(t::RandomReduced(rng, 2, static_cast<int>(rng() % 10)));
    ASSERT_EQ(f.Inverse().Apply(f.Apply(w)), w);
  }
}

TEST(Basis, Examples) {
  EXPECT_TRUE(IsBasis(W("a"), W("b")));
  EXPECT_FALSE(IsBasis(W("a"), W("a")));
  EXPECT_TRUE(IsBasis(W("ab"), W("b")));
  EXPECT_FALSE(IsBasis(W("aa"), W("b")));
  EXPECT_FALSE(IsBasis(W("abAB"), W("b")));
  EXPECT_THROW(IsBasis(W("a", 3), W("b", 3)), Error);
  EXPECT_EQ(Abelianize(W("abAAB")), (std::vector<long>{-1, 0}));
}

Word RandomWordOf(std::mt19937_64& rng, int max_len) {
  return W(t::RandomReduced(rng, 2, static_cast<int>(rng() % (max_len + 1))));
}

TEST(BasisProperty, ImagesOfStandardBasisAndInvariances) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto phi = RandomAutomorphism(2, static_cast<int>(rng() % 12), rng());
    const Word u = phi.Apply(W("a"));
    const Word v = phi.Apply(W("b"));
    ASSERT_TRUE(IsBasis(u, v)) << phi.ToString();
    ASSERT_TRUE(IsBasis(v, u));
    ASSERT_TRUE(IsBasis(Invert(u), v));
    ASSERT_TRUE(IsBasis(u, Invert(v)));
    const Word g = RandomWordOf(rng, 6);
    ASSERT_TRUE(IsBasis(Conjugate(u, g), Conjugate(v, g)));
    const auto psi = RandomAutomorphism(2, static_cast<int>(rng() % 6), rng());
    ASSERT_TRUE(IsBasis(psi.Apply(u), psi.Apply(v)));
    const auto au = Abelianize(u);
    const auto av = Abelianize(v);
    ASSERT_EQ(std::labs(au[0] * av[1] - au[1] * av[0]), 1);
  }
}

// Random pairs: the answer is invariant under the same operations, and a
// positive answer always has unimodular abelianization.
TEST(BasisProperty, RandomPairs) {
  std::mt19937_64 rng(25);
  int positives = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Word u = RandomWordOf(rng, 4);
    const Word v = RandomWordOf(rng, 4);
    const bool basis = IsBasis(u, v);
    positives += basis;
    ASSERT_EQ(IsBasis(v, u), basis);
    ASSERT_EQ(IsBasis(Invert(u), v), basis);
    ASSERT_EQ(IsBasis(u, Invert(v)), basis);
    const Word g = RandomWordOf(rng, 5);
    ASSERT_EQ(IsBasis(Conjugate(u, g), Conjugate(v, g)), basis);
    const auto psi = RandomAutomorphism(2, static_cast<int>(rng() % 6), rng());
    ASSERT_EQ(IsBasis(psi.Apply(u), psi.Apply(v)), basis);
    if (basis) {
      const auto au = Abelianize(u);
      const auto av = Abelianize(v);
      ASSERT_EQ(std::labs(au[0] * av[1] - au[1] * av[0]), 1);
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(ConjugateReduce, Examples) {
  const Word ba = W("ba");
  const Word u = Conjugate(W("a"), Invert(ba));
  const Word v = Conjugate(W("b"), Invert(ba));
  EXPECT_EQ(u.ToString(), "ABaba");
  const ConjugateReducedPair p = SimultaneousConjugateReduce(u, v);
  EXPECT_EQ(p.u.ToString(), "a");
  EXPECT_EQ(p.v.ToString(), "b");
  EXPECT_EQ(p.conjugator.ToString(), "ba");
  EXPECT_FALSE(p.capped);
  const ConjugateReducedPair q = SimultaneousConjugateReduce(W("a"), W("b"));
  EXPECT_EQ(q.u.ToString(), "a");
  EXPECT_EQ(q.v.ToString(), "b");
  EXPECT_TRUE(q.conjugator.empty());
}

TEST(ConjugateReduceProperty, BasisPairsBecomeCyclicallyReduced) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto phi = RandomAutomorphism(2, static_cast<int>(rng() % 15), rng());
    const Word g = RandomWordOf(rng, 5);
    const Word u = Conjugate(phi.Apply(W("a")), g);
    const Word v = Conjugate(phi.Apply(W("b")), g);
    const ConjugateReducedPair p = SimultaneousConjugateReduce(u, v);
    ASSERT_TRUE(p.u.IsCyclicallyReduced()) << u.ToString() << " " << v.ToString();
    ASSERT_TRUE(p.v.IsCyclicallyReduced()) << u.ToString() << " " << v.ToString();
    // The reported conjugator reproduces the input.
    ASSERT_EQ(Conjugate(p.u, Invert(p.conjugator)), u);
    ASSERT_EQ(Conjugate(p.v, Invert(p.conjugator)), v);
    ASSERT_LE(p.u.size() + p.v.size(), u.size() + v.size());
  }
}

TEST(PrimitivePairPattern, Examples) {
  EXPECT_TRUE(MatchesPrimitivePairPattern(W("ab"), W("abb")));
  EXPECT_TRUE(MatchesPrimitivePairPattern(W("aab"), W("ab")));
  EXPECT_FALSE(MatchesPrimitivePairPattern(W("abAB"), W("ab")));
  EXPECT_FALSE(MatchesPrimitivePairPattern(W("aabb"), W("ab")));
  EXPECT_EQ(CyclicSyllableExponents(W("aabAb")), (std::vector<int>{2, 1, -1, 1}));
}

}  // namespace
}  // namespace whitehead
