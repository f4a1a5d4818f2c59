#ifndef WHITEHEAD_AUTOMORPHISM_H_
#define WHITEHEAD_AUTOMORPHISM_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "whitehead/word.h"

namespace whitehead {

// Enumeration of all Whitehead automorphisms is capped at this rank; the
// type II count grows like 2r * 4^(r-1).
inline constexpr int kMaxWhiteheadRank = 5;

// What a type II automorphism with multiplier x does to a generator y that
// is neither x nor x^-1.
enum class TypeIIAction : std::uint8_t {
  kFixed,  // y -> y
  kRight,  // y -> y x
  kLeft,   // y -> x^-1 y
  kBoth,   // y -> x^-1 y x
};

// A Whitehead automorphism of F_r.
//
// Type I: a signed permutation of the generators, x_i -> x_{perm[i]}^{sign[i]}.
// Type II: a multiplier letter x, fixed by the automorphism, and one
// TypeIIAction per other generator. The inverse of a type II automorphism is
// the type II automorphism with the same actions and multiplier x^-1.
//
// Text form:
//   I:perm=ba,inv=+-      a -> b, b -> A
//   II:x=a,b->ba          a -> a, b -> ba
// Type II actions are written `y->image` with image one of y, yx, Xy, Xyx
// (X the inverse of the multiplier); omitted generators are fixed.
class WhiteheadAutomorphism {
 public:
  struct TypeI {
    std::vector<int> perm;   // 1-based image generator of generator i + 1
    std::vector<int> signs;  // +1 or -1
  };
  struct TypeII {
    Letter multiplier;
    std::vector<TypeIIAction> actions;  // by generator - 1; kFixed on x
  };

  static WhiteheadAutomorphism MakeTypeI(std::vector<int> perm,
                                         std::vector<int> signs);
  static WhiteheadAutomorphism MakeTypeII(int rank, Letter multiplier,
                                          std::vector<TypeIIAction> actions);
  static WhiteheadAutomorphism Identity(int rank);
  static WhiteheadAutomorphism Parse(std::string_view text, int rank = 2);

  int rank() const { return rank_; }
  bool is_type_one() const { return std::holds_alternative<TypeI>(data_); }
  const TypeI& type_one() const { return std::get<TypeI>(data_); }
  const TypeII& type_two() const { return std::get<TypeII>(data_); }

  // Image of a single letter as a reduced word.
  const Word& Image(Letter x) const { return images_[x.index()]; }

  Word Apply(const Word& w) const;
  WhiteheadAutomorphism Inverse() const;
  std::string ToString() const;

  friend bool operator==(const WhiteheadAutomorphism& x,
                         const WhiteheadAutomorphism& y) {
    return x.rank_ == y.rank_ && x.images_ == y.images_;
  }

 private:
  WhiteheadAutomorphism(int rank, std::variant<TypeI, TypeII> data);

  int rank_;
  std::variant<TypeI, TypeII> data_;
  std::vector<Word> images_;  // by Letter::index()
};

// A composition of Whitehead automorphisms; the leftmost factor is applied
// first. Text form joins factors with ';'.
class AutomorphismWord {
 public:
  explicit AutomorphismWord(int rank = 2) : rank_(rank) {}
  AutomorphismWord(int rank, std::vector<WhiteheadAutomorphism> factors);

  static AutomorphismWord Parse(std::string_view text, int rank = 2);

  int rank() const { return rank_; }
  std::span<const WhiteheadAutomorphism> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  void Append(WhiteheadAutomorphism phi);
  Word Apply(const Word& w) const;
  AutomorphismWord Inverse() const;
  std::string ToString() const;

 private:
  int rank_;
  std::vector<WhiteheadAutomorphism> factors_;
};

// All type I automorphisms (identity first) followed by all non-identity
// type II automorphisms, in a fixed order. Throws kCapExceeded above
// kMaxWhiteheadRank.
const std::vector<WhiteheadAutomorphism>& WhiteheadMoves(int rank);

// k factors drawn uniformly with replacement from WhiteheadMoves(rank).
AutomorphismWord RandomAutomorphism(int rank, int k, std::uint64_t seed);

// Exponent sums of each generator.
std::vector<long> Abelianize(const Word& w);

// Rank 2 only: (u, v) is a free basis iff the abelianized determinant is
// +-1 and [u, v] is conjugate to [a, b] or [a, b]^-1.
bool IsBasis(const Word& u, const Word& v);

struct ConjugateReducedPair {
  Word u;
  Word v;
  Word conjugator;  // input u == conjugator^-1 * u * conjugator, same for v
  int states_expanded = 0;
  bool capped = false;  // budget hit before the search settled
};

// Searches single-letter simultaneous conjugations of (u, v) for the pair
// of least total length, preferring pairs whose entries are both cyclically
// reduced. Only non-increasing steps are taken. A budget of 0 selects
// 2 * (|u| + |v|) expanded states.
ConjugateReducedPair SimultaneousConjugateReduce(const Word& u, const Word& v,
                                                 int budget = 0);

// Cyclic syllable exponents of a cyclic word that contains both a and b,
// rotated to start with an a-syllable: {n_1, m_1, ..., n_p, m_p}.
std::vector<int> CyclicSyllableExponents(const Word& w);

// The exponent pattern that conjugates of a primitive pair in F_2 must
// satisfy (the classical description of bases of F(a,b)): after possibly
// inverting a or b throughout, either every b-exponent of u is 1, every
// b-exponent of v is eps, and the a-exponents of u together with eps times those of v form
// exactly {t, t+1}; or the same with a and b exchanged. Both words must
// contain both generators.
bool MatchesPrimitivePairPattern(const Word& u, const Word& v);

}  // namespace whitehead

#endif  // WHITEHEAD_AUTOMORPHISM_H_
