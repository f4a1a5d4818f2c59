#ifndef WHITEHEAD_SAMPLER_H_
#define WHITEHEAD_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "whitehead/word.h"

namespace whitehead {

enum class SampleMode { kFreelyReduced, kCyclicallyReduced };

std::string_view SampleModeName(SampleMode mode);
// Accepts "free"/"freely_reduced" and "cyclic"/"cyclically_reduced".
SampleMode ParseSampleMode(std::string_view text);

struct SamplerConfig {
  int rank = 2;
  std::size_t length = 1;
  SampleMode mode = SampleMode::kFreelyReduced;
  std::uint64_t seed = 0;
};

// SplitMix64 finalizer over (seed, stream); used to give independent
// samplers (per trial, per thread) reproducible seeds.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// Exactly uniform words of a fixed length. Freely reduced words are drawn
// letter by letter: the first uniform over 2r letters, each later one
// uniform over the 2r - 1 letters that do not cancel. Cyclically reduced
// words are freely reduced draws rejected until the last letter is not the
// inverse of the first.
class WordSampler {
 public:
  explicit WordSampler(const SamplerConfig& config);

  Word Next();

  const SamplerConfig& config() const { return config_; }
  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  std::vector<Letter> DrawFreelyReduced();

  SamplerConfig config_;
  std::mt19937_64 rng_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;
};

inline Word Sample(const SamplerConfig& config) {
  return WordSampler(config).Next();
}

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// Every word of length n in the given mode exactly once, in shortlex order.
// Throws kCapExceeded when the total count exceeds `cap`.
class WordEnumerator {
 public:
  WordEnumerator(int rank, std::size_t length, SampleMode mode,
                 std::size_t cap = kDefaultEnumerationCap);

  std::optional<Word> Next();

 private:
  bool Advance();
  bool Accept() const;
  // Smallest letter index >= `from` that does not cancel position i - 1.
  int SmallestValid(std::size_t i, int from) const;

  int rank_;
  std::size_t length_;
  SampleMode mode_;
  std::vector<int> digits_;  // letter indices
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> EnumerateWords(int rank, std::size_t length, SampleMode mode,
                                 std::size_t cap = kDefaultEnumerationCap);

}  // namespace whitehead

#endif  // WHITEHEAD_SAMPLER_H_
