#ifndef WHITEHEAD_MINIMIZE_H_
#define WHITEHEAD_MINIMIZE_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "whitehead/automorphism.h"
#include "whitehead/word.h"

namespace whitehead {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

struct MinimizationStep {
  std::size_t move_index;  // into WhiteheadMoves(rank)
  std::size_t length;      // cyclic length after the move
};

// Audit trail of a greedy minimization. Lengths strictly decrease.
struct MinimizationTrace {
  std::vector<MinimizationStep> steps;
  std::size_t move_applications = 0;  // every move tried, accepted or not
};

struct MinimizeResult {
  CyclicWord word;
  MinimizationTrace trace;
};

// Greedy Whitehead reduction: repeatedly applies the first move, in
// WhiteheadMoves order, that strictly shortens the cyclic word, until none
// does. Each step costs at most |moves| applications of O(length) each.
MinimizeResult MinimizeCyclic(const CyclicWord& w);

// All canonical cyclic words of minimal length in the orbit of `w`: the
// closure of its minimization under length-preserving Whitehead moves.
// Throws kCapExceeded once the set would exceed `cap` members.
std::vector<CyclicWord> MinimalOrbitSet(const CyclicWord& w,
                                        std::size_t cap = kDefaultClosureCap);

// Precomputed data for a fixed u: its minimal length and the full set of
// minimal-length cyclic words in its automorphic orbit.
//
// Text format (version 1):
//   whitehead-orbit-table 1
//   rank <r>
//   source <word>
//   min_length <l>
//   members <k>
//   <canonical word>      (k lines, sorted)
class OrbitTable {
 public:
  OrbitTable(Word source, std::size_t min_length,
             std::vector<CyclicWord> minimal_set);

  const Word& source() const { return source_; }
  int rank() const { return source_.rank(); }
  std::size_t min_length() const { return min_length_; }
  const std::vector<CyclicWord>& minimal_set() const { return minimal_set_; }

  bool Contains(const CyclicWord& w) const;

  void Serialize(std::ostream& out) const;
  std::string Serialize() const;
  static OrbitTable Deserialize(std::istream& in);
  static OrbitTable Deserialize(const std::string& text);

  friend bool operator==(const OrbitTable&, const OrbitTable&) = default;

 private:
  Word source_;
  std::size_t min_length_;
  std::vector<CyclicWord> minimal_set_;  // sorted
};

// Requires u nonempty (kDomain otherwise).
OrbitTable BuildOrbitTable(const Word& u,
                           std::size_t cap = kDefaultClosureCap);

struct WhiteheadVerdict {
  bool in_orbit = false;
  std::size_t minimize_steps = 0;
  std::size_t move_applications = 0;
};

WhiteheadVerdict WhiteheadDecideDetailed(const OrbitTable& table,
                                         const Word& v);

inline bool WhiteheadDecide(const OrbitTable& table, const Word& v) {
  return WhiteheadDecideDetailed(table, v).in_orbit;
}

}  // namespace whitehead

#endif  // WHITEHEAD_MINIMIZE_H_
