#include "whitehead/word.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "whitehead/error.h"

namespace whitehead {

namespace {

constexpr long kMaxExponent = 10'000'000;

void CheckRank(int rank) {
  if (rank < 1 || rank > kMaxLetterRank) {
    throw Error(ErrorKind::kRank,
                "rank must be in 1.." + std::to_string(kMaxLetterRank) +
                    ", got " + std::to_string(rank));
  }
}

void CheckSameRank(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw Error(ErrorKind::kRank, "rank mismatch: " + std::to_string(u.rank()) +
                                      " vs " + std::to_string(v.rank()));
  }
}

}  // namespace

char Letter::ToChar() const {
  const char base = sign() > 0 ? 'a' : 'A';
  return static_cast<char>(base + generator() - 1);
}

Word::Word(int rank) : rank_(rank) { CheckRank(rank); }

Word Word::FromReducedLetters(int rank, std::vector<Letter> letters) {
  Word w(rank);
  for (Letter x : letters) {
    if (x.generator() > rank) {
      throw Error(ErrorKind::kRank, std::string("letter '") + x.ToChar() +
                                        "' exceeds rank " +
                                        std::to_string(rank));
    }
  }
  if (!IsFreelyReduced(letters)) {
    throw Error(ErrorKind::kDomain, "letters are not freely reduced");
  }
  w.letters_ = std::move(letters);
  return w;
}

void Word::Append(Letter x) {
  if (x.generator() > rank_) {
    throw Error(ErrorKind::kRank, std::string("letter '") + x.ToChar() +
                                      "' exceeds rank " +
                                      std::to_string(rank_));
  }
  if (!letters_.empty() && letters_.back().IsInverseOf(x)) {
    letters_.pop_back();
  } else {
    letters_.push_back(x);
  }
}

void Word::Append(const Word& w) {
  CheckSameRank(*this, w);
  for (Letter x : w.letters_) Append(x);
}

bool Word::IsCyclicallyReduced() const {
  return letters_.size() < 2 || !letters_.front().IsInverseOf(letters_.back());
}

std::string Word::ToString() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x.ToChar());
  return out;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
  if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      x.letters_.begin(), x.letters_.end(), y.letters_.begin(),
      y.letters_.end());
}

bool IsFreelyReduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].IsInverseOf(letters[i - 1])) return false;
  }
  return true;
}

Word ParseWord(std::string_view text, int rank) {
  Word w(rank);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::kParse, what + " at offset " + std::to_string(i) +
                                        " in \"" + std::string(text) + "\"");
  };

  skip_space();
  while (i < text.size()) {
    const char c = text[i];
    if (c == '1') {
      ++i;
      skip_space();
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) ||
        static_cast<unsigned char>(c) > 127) {
      throw fail(std::string("illegal character '") + c + "'");
    }
    const bool lower = std::islower(static_cast<unsigned char>(c));
    const int generator = (lower ? c - 'a' : c - 'A') + 1;
    if (generator > rank) {
      throw Error(ErrorKind::kRank, std::string("letter '") + c +
                                        "' exceeds rank " +
                                        std::to_string(rank));
    }
    Letter x(generator, lower ? 1 : -1);
    ++i;
    skip_space();

    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      std::string digits(text.substr(start, i - start));
      if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), exponent);
      if (ec != std::errc() || ptr != digits.data() + digits.size() ||
          digits.empty() || digits == "-") {
        throw fail("malformed exponent");
      }
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        throw fail("exponent out of range");
      }
      skip_space();
    }
    const Letter unit = exponent < 0 ? x.inverse() : x;
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
      w.Append(unit);
    }
  }
  return w;
}

std::string ToPowerString(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out.push_back(letters[i].ToChar());
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word FreeReduce(int rank, std::span<const Letter> letters) {
  Word w(rank);
  for (Letter x : letters) w.Append(x);
  return w;
}

Word Concat(const Word& u, const Word& v) {
  CheckSameRank(u, v);
  Word w = u;
  w.Append(v);
  return w;
}

Word Invert(const Word& u) {
  Word w(u.rank());
  auto letters = u.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    w.Append(it->inverse());
  }
  return w;
}

Word Conjugate(const Word& w, const Word& g) {
  return Concat(Concat(g, w), Invert(g));
}

CoreSpan FindCyclicCore(std::span<const Letter> letters) {
  CoreSpan core{0, letters.size(), 0, 0};
  while (core.length >= 2) {
    ++core.comparisons;
    if (!letters[core.offset].IsInverseOf(
            letters[core.offset + core.length - 1])) {
      break;
    }
    ++core.offset;
    core.length -= 2;
    ++core.rounds;
  }
  return core;
}

CyclicReduction CyclicReduceDeque(const Word& v) {
  auto letters = v.letters();
  const CoreSpan span = FindCyclicCore(letters);
  CyclicReduction result{Word(v.rank()), Word(v.rank()), span.rounds};
  result.core = FreeReduce(v.rank(), letters.subspan(span.offset, span.length));
  result.conjugator = FreeReduce(v.rank(), letters.first(span.offset));
  return result;
}

ExponentStats ComputeExponentStats(const Word& v) {
  const int rank = v.rank();
  ExponentStats stats{std::vector<int>(rank, 0), std::vector<int>(rank, 0)};

  // Maximal syllables of a letter sequence as (letter, run length).
  auto syllables = [](std::span<const Letter> letters) {
    std::vector<std::pair<Letter, int>> out;
    for (Letter x : letters) {
      if (!out.empty() && out.back().first == x) {
        ++out.back().second;
      } else {
        out.emplace_back(x, 1);
      }
    }
    return out;
  };

  for (auto [x, run] : syllables(v.letters())) {
    int& slot = stats.linear[x.generator() - 1];
    slot = std::max(slot, run);
  }

  const Word core = CyclicReduceDeque(v).core;
  auto cyc = syllables(core.letters());
  // In a cyclically reduced word, equal generators at both ends carry equal
  // signs, so the boundary syllables join into one.
  if (cyc.size() >= 2 && cyc.front().first == cyc.back().first) {
    cyc.front().second += cyc.back().second;
    cyc.pop_back();
  }
  for (auto [x, run] : cyc) {
    int& slot = stats.cyclic[x.generator() - 1];
    slot = std::max(slot, run);
  }
  return stats;
}

std::size_t LeastRotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const Letter x = s[(i + k) % n];
    const Letter y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord CanonicalCyclic(const Word& v) {
  const Word core = CyclicReduceDeque(v).core;
  auto letters = core.letters();
  const std::size_t start = LeastRotation(letters);
  std::vector<Letter> rotated;
  rotated.reserve(letters.size());
  rotated.insert(rotated.end(), letters.begin() + start, letters.end());
  rotated.insert(rotated.end(), letters.begin(), letters.begin() + start);
  return CyclicWord(FreeReduce(v.rank(), rotated));
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over letter indices.
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(w.rank());
  for (Letter x : w.letters()) {
    h ^= static_cast<std::size_t>(x.index() + 1);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace whitehead
