#ifndef WHITEHEAD_DECIDER_H_
#define WHITEHEAD_DECIDER_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>

#include "whitehead/blocking.h"
#include "whitehead/minimize.h"
#include "whitehead/word.h"

namespace whitehead {

// Everything that depends on the fixed u alone, computed once: the orbit
// table for the honest algorithm and the blocking pattern with its matcher
// for the fast path. Immutable and shareable across threads.
class FixedU {
 public:
  // Rank 2 only. The empty word is accepted: its orbit is {1} and no
  // blocking word or table is built.
  static FixedU Prepare(const Word& u, std::size_t cap = kDefaultClosureCap);
  // Adopts a previously built (e.g. cached) table for u.
  static FixedU FromTable(OrbitTable table);

  const Word& u() const { return u_; }
  const std::optional<OrbitTable>& table() const { return table_; }
  const std::optional<BlockingWord>& blocker() const { return blocker_; }
  const std::optional<StreamMatcher>& matcher() const { return matcher_; }

  friend bool operator==(const FixedU& x, const FixedU& y) {
    return x.u_ == y.u_ && x.table_ == y.table_ &&
           (x.blocker_.has_value() == y.blocker_.has_value()) &&
           (!x.blocker_ || x.blocker_->pattern == y.blocker_->pattern);
  }

 private:
  explicit FixedU(Word u) : u_(std::move(u)) {}

  Word u_;
  std::optional<OrbitTable> table_;
  std::optional<BlockingWord> blocker_;
  std::optional<StreamMatcher> matcher_;
};

enum class DecisionPath { kFastReject, kHonestAccept, kHonestReject };
std::string_view DecisionPathName(DecisionPath path);

enum class InputMode {
  kCyclicallyReduced,  // v must already be cyclically reduced (checked)
  kGeneral,            // v is cyclically reduced first, deque style
};

struct Decision {
  bool in_orbit = false;
  DecisionPath path = DecisionPath::kHonestReject;
  // Letters the scanner consumed plus letters touched while cyclically
  // reducing (two per end comparison).
  std::size_t letters_read = 0;
  std::size_t minimize_steps = 0;
  int cyclic_rounds = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Runs the blocking-word scan first and falls back to Whitehead
// minimization only when it finds nothing. Answers agree with
// WhiteheadDecide on every input; FastReject implies !in_orbit.
// Throws kDomain in kCyclicallyReduced mode when v is not cyclically
// reduced.
Decision Decide(const FixedU& fixed, const Word& v,
                InputMode mode = InputMode::kCyclicallyReduced,
                ScanMode scan = ScanMode::kLinear);

}  // namespace whitehead

#endif  // WHITEHEAD_DECIDER_H_
