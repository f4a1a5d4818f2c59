#ifndef WHITEHEAD_LANGCOUNT_H_
#define WHITEHEAD_LANGCOUNT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "whitehead/word.h"

namespace whitehead {

using BigInt = boost::multiprecision::cpp_int;

// 1 for n = 0, else 2r (2r-1)^(n-1).
BigInt CountFreelyReduced(int rank, int n);

// Freely reduced words of length n whose last letter is not the inverse of
// the first, by dynamic programming over (first letter, last letter).
BigInt CountCyclicallyReduced(int rank, int n);

// Deterministic automaton for freely reduced words that avoid `pattern`.
// State 0 is the start state (nothing read); state 1 + q * 2r + i means the
// matcher is in state q and the last letter has index i. Transitions that
// cancel the last letter or complete the pattern are absent (-1).
class AvoidanceAutomaton {
 public:
  AvoidanceAutomaton(int rank, const Word& pattern);

  int rank() const { return rank_; }
  std::size_t alphabet_size() const { return 2 * rank_; }
  std::size_t num_states() const { return next_.size() / alphabet_size(); }
  // -1 when the letter is forbidden from this state.
  int Next(std::size_t state, int letter_index) const {
    return next_[state * alphabet_size() + letter_index];
  }

 private:
  int rank_;
  std::vector<int> next_;
};

// Freely reduced words of length n with no occurrence of `pattern`.
BigInt CountAvoiding(int rank, const Word& pattern, int n);

struct GrowthEstimate {
  double lambda = 0;  // dominant eigenvalue of the transfer matrix
  double s = 0;       // lambda / (2r - 1)
  int iterations = 0;
  double residual = 0;
};

// Power iteration on the (shifted) transfer matrix of AvoidanceAutomaton
// until the relative residual |xT - lambda x| / (lambda |x|) <= tolerance.
// Throws kConvergence past `max_iterations`.
GrowthEstimate GrowthRate(int rank, const Word& pattern,
                          double tolerance = 1e-10,
                          int max_iterations = 1'000'000);

// Expected position of the end of the first occurrence of `pattern` in an
// infinite uniformly random freely reduced word, from the absorbing-chain
// form of AvoidanceAutomaton.
double ExpectedFirstOccurrence(int rank, const Word& pattern);

// P(no occurrence in a uniform freely reduced word of length n), by a
// floating point forward pass over the automaton.
double AvoidanceProbability(int rank, const Word& pattern, std::size_t n);

// (2r - 1) / (2r - 2)^2, the value of sum_{k>=1} k (2r-1)^-k.
boost::rational<std::int64_t> GeometricSumBound(int rank);

}  // namespace whitehead

#endif  // WHITEHEAD_LANGCOUNT_H_
