#ifndef WHITEHEAD_BENCH_H_
#define WHITEHEAD_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "whitehead/word.h"

namespace whitehead {

// One row per input length. Letter counts are machine independent and
// reproducible per seed; wall times are not.
struct DeciderBenchRow {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_letters = 0;
  double median_letters = 0;
  double p99_letters = 0;
  double frac_fast_reject = 0;
  double mean_min_steps = 0;
  double mean_wall_ns = 0;
};

struct DeciderBenchReport {
  std::string u;
  std::vector<std::size_t> n_values;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string blocking_pattern;
  std::vector<DeciderBenchRow> rows;
  // Expected end of the first blocking-word occurrence in a uniform
  // freely reduced word.
  double predicted_e0 = 0;
  // Input length from which about 99% of inputs take the fast path,
  // ceil(E0 * ln 100) under the geometric tail of the first occurrence.
  // Below it the honest algorithm dominates the mean cost.
  std::size_t crossover_n = 0;
  // Mean wall time per letter read on FastReject trials.
  double c_estimate_ns_per_letter = 0;

  std::string ToJson() const;
  std::string ToCsv() const;
};

// For each n draws `samples` uniform cyclically reduced words of length n
// (trial i of length n uses seed DeriveSeed(DeriveSeed(seed, n), i)) and
// runs Decide against u.
DeciderBenchReport RunDeciderBench(const Word& u,
                                   std::span<const std::size_t> n_values,
                                   std::size_t samples, std::uint64_t seed);

struct CyclicReduceBenchRow {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_rounds = 0;
  double frac_nonzero = 0;  // P(rounds >= 1)
  int max_rounds = 0;
  double mean_wall_ns = 0;
};

struct CyclicReduceBenchReport {
  int rank = 2;
  std::vector<std::size_t> n_values;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CyclicReduceBenchRow> rows;
  // sum_k (1/2r) (2r-1)^-(k-1), the independent-rounds model of E[rounds].
  double model_mean_rounds = 0;

  std::string ToJson() const;
  std::string ToCsv() const;
};

// Deque-style cyclic reduction of uniform freely reduced words.
CyclicReduceBenchReport RunCyclicReduceBench(
    int rank, std::span<const std::size_t> n_values, std::size_t samples,
    std::uint64_t seed);

}  // namespace whitehead

#endif  // WHITEHEAD_BENCH_H_
