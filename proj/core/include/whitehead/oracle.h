#ifndef WHITEHEAD_ORACLE_H_
#define WHITEHEAD_ORACLE_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "whitehead/word.h"

namespace whitehead {

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

// Brute-force orbit exploration: every canonical cyclic word reachable from
// `source` by Whitehead moves without exceeding the length bound.
struct OrbitBall {
  CyclicWord source;
  std::size_t max_length = 0;
  std::vector<CyclicWord> members;  // sorted; lengths <= max_length
  bool saturated = false;           // closure finished below the cap

  bool Contains(const CyclicWord& w) const;
};

// Breadth-first search from `u` applying every Whitehead move. Words longer
// than max(max_length, |u|) are discarded. Stops unsaturated once `cap`
// words have been discovered.
OrbitBall ComputeOrbitBall(const CyclicWord& u, std::size_t max_length,
                           std::size_t cap = kDefaultBallCap);

enum class OracleAnswer { kTrue, kFalse, kInconclusive };

std::string_view OracleAnswerName(OracleAnswer a);

// Ground-truth orbit membership on small inputs. The ball is explored up to
// max(max_length, |u'|, |v'|) where u', v' are the cyclic reductions;
// max_length == 0 selects max(|u'|, |v'|) + 2. kFalse is only returned from
// a saturated ball.
OracleAnswer OracleDecide(const Word& u, const Word& v,
                          std::size_t max_length = 0,
                          std::size_t cap = kDefaultBallCap);

// Membership check against a ball that was explored far enough for v.
OracleAnswer OracleDecide(const OrbitBall& ball, const Word& v);

}  // namespace whitehead

#endif  // WHITEHEAD_ORACLE_H_
