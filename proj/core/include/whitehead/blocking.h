#ifndef WHITEHEAD_BLOCKING_H_
#define WHITEHEAD_BLOCKING_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "whitehead/word.h"

namespace whitehead {

// a^{l+2} b^{l+2} for l = |u|. No cyclically reduced automorphic image of u
// in F_2 contains it: every such image has a cyclic a-exponent (or, after
// swapping a and b, b-exponent) of at most l + 1.
struct BlockingWord {
  Word pattern;
  std::size_t source_length = 0;
};

// Requires rank 2 and u nonempty (kDomain otherwise).
BlockingWord MakeBlockingWord(const Word& u);

// Knuth-Morris-Pratt matcher fed one letter at a time. Letters are opaque
// symbols; the caller guarantees the text is freely reduced. Copies share
// the immutable pattern tables.
class StreamMatcher {
 public:
  explicit StreamMatcher(const Word& pattern);

  const Word& pattern() const { return tables_->pattern; }
  // border[i] = length of the longest proper border of pattern[0, i);
  // border[0] = -1.
  std::span<const int> border() const { return tables_->border; }

  std::size_t state() const { return state_; }
  std::size_t letters_consumed() const { return consumed_; }
  void Reset() {
    state_ = 0;
    consumed_ = 0;
  }

  // Consumes one letter; true iff an occurrence of the pattern ends here.
  bool Feed(Letter x);

  // The automaton step from state q in [0, |pattern|) on letter x.
  std::size_t Next(std::size_t q, Letter x) const;

 private:
  struct Tables {
    Word pattern;
    std::vector<int> border;
  };
  std::shared_ptr<const Tables> tables_;
  std::size_t state_ = 0;
  std::size_t consumed_ = 0;
};

struct ScanResult {
  std::optional<std::size_t> found_at;  // 1-based end of first occurrence
  std::size_t letters_read = 0;
};

// Reads v left to right and stops at the end of the first occurrence.
ScanResult ScanStream(StreamMatcher& m, std::span<const Letter> v);
inline ScanResult ScanStream(StreamMatcher& m, const Word& v) {
  return ScanStream(m, v.letters());
}

enum class ScanMode {
  kLinear,  // occurrences inside v only
  kCyclic,  // also occurrences that wrap around the end of v
};

struct TVerdict {
  bool not_in_orbit = false;          // false means "unknown"
  std::optional<std::size_t> position;  // end of the blocking occurrence
  std::size_t letters_read = 0;
};

// Las Vegas rejection: reports NotInOrbit only when the blocking pattern
// occurs in v, which is impossible for an orbit member. v must be
// cyclically reduced.
TVerdict TReject(const BlockingWord& b, const Word& v,
                 ScanMode mode = ScanMode::kLinear);

// Same, reusing a prepared matcher for b.pattern. The span form lets callers
// scan a cyclic core in place.
TVerdict TReject(StreamMatcher matcher, std::span<const Letter> v,
                 ScanMode mode = ScanMode::kLinear);
inline TVerdict TReject(StreamMatcher matcher, const Word& v,
                        ScanMode mode = ScanMode::kLinear) {
  return TReject(std::move(matcher), v.letters(), mode);
}

}  // namespace whitehead

#endif  // WHITEHEAD_BLOCKING_H_
