#include "whitehead/sampler.h"

#include <string>

#include "whitehead/error.h"
#include "whitehead/langcount.h"

namespace whitehead {

std::string_view SampleModeName(SampleMode mode) {
  return mode == SampleMode::kFreelyReduced ? "freely_reduced"
                                            : "cyclically_reduced";
}

SampleMode ParseSampleMode(std::string_view text) {
  if (text == "free" || text == "freely_reduced") {
    return SampleMode::kFreelyReduced;
  }
  if (text == "cyclic" || text == "cyclically_reduced") {
    return SampleMode::kCyclicallyReduced;
  }
  throw Error(ErrorKind::kParse, "unknown mode \"" + std::string(text) + "\"");
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

WordSampler::WordSampler(const SamplerConfig& config)
    : config_(config), rng_(config.seed) {
  if (config.rank < 1 || config.rank > kMaxLetterRank) {
    throw Error(ErrorKind::kRank, "sampler rank out of range");
  }
  if (config.length < 1) {
    throw Error(ErrorKind::kDomain, "sampler length must be >= 1");
  }
}

std::vector<Letter> WordSampler::DrawFreelyReduced() {
  const int k = 2 * config_.rank;
  std::vector<Letter> letters;
  letters.reserve(config_.length);
  std::uniform_int_distribution<int> first(0, k - 1);
  std::uniform_int_distribution<int> rest(0, k - 2);
  int prev = first(rng_);
  letters.push_back(Letter::FromIndex(prev));
  for (std::size_t i = 1; i < config_.length; ++i) {
    // The inverse of index i is i ^ 1; skip over it.
    const int forbidden = prev ^ 1;
    int x = rest(rng_);
    if (x >= forbidden) ++x;
    letters.push_back(Letter::FromIndex(x));
    prev = x;
  }
  return letters;
}

Word WordSampler::Next() {
  while (true) {
    ++attempts_;
    std::vector<Letter> letters = DrawFreelyReduced();
    if (config_.mode == SampleMode::kCyclicallyReduced &&
        letters.size() >= 2 && letters.front().IsInverseOf(letters.back())) {
      continue;
    }
    ++accepted_;
    return Word::FromReducedLetters(config_.rank, std::move(letters));
  }
}

WordEnumerator::WordEnumerator(int rank, std::size_t length, SampleMode mode,
                               std::size_t cap)
    : rank_(rank), length_(length), mode_(mode) {
  const int n = static_cast<int>(length);
  const BigInt total = mode == SampleMode::kFreelyReduced
                           ? CountFreelyReduced(rank, n)
                           : CountCyclicallyReduced(rank, n);
  if (total > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "enumeration of " + total.str() + " words exceeds cap " +
                    std::to_string(cap));
  }
}

int WordEnumerator::SmallestValid(std::size_t i, int from) const {
  for (int x = from; x < 2 * rank_; ++x) {
    if (i == 0 || x != (digits_[i - 1] ^ 1)) return x;
  }
  return -1;
}

bool WordEnumerator::Advance() {
  if (!started_) {
    started_ = true;
    digits_.assign(length_, 0);
    for (std::size_t i = 0; i < length_; ++i) digits_[i] = SmallestValid(i, 0);
    return true;
  }
  for (std::size_t i = length_; i-- > 0;) {
    const int x = SmallestValid(i, digits_[i] + 1);
    if (x < 0) continue;
    digits_[i] = x;
    for (std::size_t j = i + 1; j < length_; ++j) {
      digits_[j] = SmallestValid(j, 0);
    }
    return true;
  }
  return false;
}

bool WordEnumerator::Accept() const {
  if (mode_ == SampleMode::kFreelyReduced || length_ < 2) return true;
  return digits_.front() != (digits_.back() ^ 1);
}

std::optional<Word> WordEnumerator::Next() {
  if (done_) return std::nullopt;
  while (Advance()) {
    if (!Accept()) continue;
    std::vector<Letter> letters;
    letters.reserve(length_);
    for (int d : digits_) letters.push_back(Letter::FromIndex(d));
    // Length 0 yields the identity exactly once.
    if (length_ == 0) done_ = true;
    return Word::FromReducedLetters(rank_, std::move(letters));
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Word> EnumerateWords(int rank, std::size_t length, SampleMode mode,
                                 std::size_t cap) {
  WordEnumerator e(rank, length, mode, cap);
  std::vector<Word> out;
  while (auto w = e.Next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace whitehead
