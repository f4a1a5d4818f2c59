#include "whitehead/oracle.h"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "whitehead/automorphism.h"
#include "whitehead/error.h"

namespace whitehead {

bool OrbitBall::Contains(const CyclicWord& w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

OrbitBall ComputeOrbitBall(const CyclicWord& u, std::size_t max_length,
                           std::size_t cap) {
  const int rank = u.rank();
  const auto& moves = WhiteheadMoves(rank);
  const std::size_t bound = std::max(max_length, u.size());

  OrbitBall ball{u, max_length, {}, false};
  std::unordered_set<CyclicWord, WordHash> seen{u};
  std::deque<CyclicWord> queue{u};
  bool capped = false;
  while (!queue.empty() && !capped) {
    const CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& phi : moves) {
      CyclicWord next = CanonicalCyclic(phi.Apply(cur.word()));
      if (next.size() > bound) continue;
      if (!seen.insert(next).second) continue;
      if (seen.size() > cap) {
        capped = true;
        break;
      }
      queue.push_back(std::move(next));
    }
  }
  ball.saturated = !capped;
  for (const auto& w : seen) {
    if (w.size() <= max_length) ball.members.push_back(w);
  }
  std::sort(ball.members.begin(), ball.members.end());
  return ball;
}

std::string_view OracleAnswerName(OracleAnswer a) {
  switch (a) {
    case OracleAnswer::kTrue:
      return "true";
    case OracleAnswer::kFalse:
      return "false";
    case OracleAnswer::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

OracleAnswer OracleDecide(const OrbitBall& ball, const Word& v) {
  const CyclicWord cv = CanonicalCyclic(v);
  if (cv.rank() != ball.source.rank()) {
    throw Error(ErrorKind::kRank, "oracle: rank mismatch");
  }
  if (ball.source.empty()) {
    return cv.empty() ? OracleAnswer::kTrue : OracleAnswer::kFalse;
  }
  if (cv.size() <= ball.max_length && ball.Contains(cv)) {
    return OracleAnswer::kTrue;
  }
  // A saturated ball of radius >= max(|u|, |v|) holds every orbit member of
  // length <= radius: peak reduction links them without exceeding it.
  if (ball.saturated && cv.size() <= ball.max_length &&
      ball.source.size() <= ball.max_length) {
    return OracleAnswer::kFalse;
  }
  return OracleAnswer::kInconclusive;
}

OracleAnswer OracleDecide(const Word& u, const Word& v, std::size_t max_length,
                          std::size_t cap) {
  if (u.rank() != v.rank()) {
    throw Error(ErrorKind::kRank, "oracle: rank mismatch");
  }
  const CyclicWord cu = CanonicalCyclic(u);
  const CyclicWord cv = CanonicalCyclic(v);
  std::size_t radius = std::max(cu.size(), cv.size());
  if (max_length == 0) {
    radius += 2;
  } else {
    radius = std::max(radius, max_length);
  }
  return OracleDecide(ComputeOrbitBall(cu, radius, cap), v);
}

}  // namespace whitehead
