#ifndef WHITEHEAD_WORD_H_
#define WHITEHEAD_WORD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace whitehead {

inline constexpr int kMaxLetterRank = 26;

// A signed generator x_g^{+1} or x_g^{-1}, g in 1..26. Letters are totally
// ordered by generator index first and sign second, positive before
// negative: a < A < b < B < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign)
      : value_(static_cast<std::int8_t>(sign < 0 ? -generator : generator)) {}

  // Inverse of index(): 0 -> a, 1 -> A, 2 -> b, ...
  static constexpr Letter FromIndex(int index) {
    return Letter(index / 2 + 1, (index % 2) == 0 ? 1 : -1);
  }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr Letter inverse() const {
    Letter l;
    l.value_ = static_cast<std::int8_t>(-value_);
    return l;
  }
  // Position in the fixed letter order, in [0, 2 * rank).
  constexpr int index() const {
    return 2 * (generator() - 1) + (value_ < 0 ? 1 : 0);
  }
  constexpr bool IsInverseOf(Letter other) const {
    return value_ == -other.value_;
  }

  // 'a'..'z' for positive letters, 'A'..'Z' for their inverses.
  char ToChar() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
    return x.index() <=> y.index();
  }

 private:
  std::int8_t value_ = 1;
};

// A freely reduced word in the free group of the given rank. Every
// constructor and mutator preserves free reducedness.
class Word {
 public:
  explicit Word(int rank = 2);

  // Adopts `letters` as is; throws kDomain unless they are freely reduced
  // and kRank if one exceeds `rank`.
  static Word FromReducedLetters(int rank, std::vector<Letter> letters);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Multiplies by `x` on the right, cancelling against the last letter when
  // possible. Throws on a letter outside the rank.
  void Append(Letter x);
  void Append(const Word& w);

  bool IsCyclicallyReduced() const;

  // Word grammar rendering; the empty word renders as "1".
  std::string ToString() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex with the fixed letter order.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  int rank_;
  std::vector<Letter> letters_;
};

// True iff no two adjacent letters cancel.
bool IsFreelyReduced(std::span<const Letter> letters);

// Parses the word grammar: lowercase = generator, uppercase = inverse,
// optional `^k` suffix (k may be negative), whitespace ignored, "1" denotes
// the identity. The result is freely reduced.
Word ParseWord(std::string_view text, int rank = 2);

// Syllable form in the same grammar, e.g. "a^6b^6" or "abA^2".
std::string ToPowerString(const Word& w);

Word FreeReduce(int rank, std::span<const Letter> letters);
Word Concat(const Word& u, const Word& v);
Word Invert(const Word& u);
// g * w * g^-1.
Word Conjugate(const Word& w, const Word& g);

struct CyclicReduction {
  Word core;
  Word conjugator;  // v == conjugator * core * conjugator^-1
  int rounds = 0;   // matched first/last pairs removed
};

// Location of the cyclic core inside a freely reduced letter sequence.
struct CoreSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  int rounds = 0;
  int comparisons = 0;  // first/last comparisons made, 2 letters each
};

// Peels matching first/last letters using only end access, the way a deque
// would. Each round costs O(1).
CoreSpan FindCyclicCore(std::span<const Letter> letters);
CyclicReduction CyclicReduceDeque(const Word& v);

struct ExponentStats {
  // Indexed by generator - 1.
  std::vector<int> linear;
  std::vector<int> cyclic;

  int Linear(int generator) const { return linear[generator - 1]; }
  int Cyclic(int generator) const { return cyclic[generator - 1]; }
};

// Largest |exponent| over maximal syllables x_g^k. The cyclic values are
// read on the cyclic reduction with the boundary syllables merged.
ExponentStats ComputeExponentStats(const Word& v);

// A cyclically reduced word stored as its least rotation. Two values compare
// equal iff the underlying words are conjugate.
class CyclicWord {
 public:
  explicit CyclicWord(int rank = 2) : word_(rank) {}

  const Word& word() const { return word_; }
  int rank() const { return word_.rank(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  std::string ToString() const { return word_.ToString(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& x,
                                          const CyclicWord& y) {
    return x.word_ <=> y.word_;
  }

 private:
  friend CyclicWord CanonicalCyclic(const Word& v);
  explicit CyclicWord(Word w) : word_(std::move(w)) {}

  Word word_;
};

CyclicWord CanonicalCyclic(const Word& v);

// Start offset of the least rotation of a cyclic letter sequence.
std::size_t LeastRotation(std::span<const Letter> letters);

struct WordHash {
  std::size_t operator()(const Word& w) const;
  std::size_t operator()(const CyclicWord& w) const {
    return (*this)(w.word());
  }
};

}  // namespace whitehead

#endif  // WHITEHEAD_WORD_H_
