#include "whitehead/blocking.h"

#include "whitehead/error.h"

namespace whitehead {

BlockingWord MakeBlockingWord(const Word& u) {
  if (u.rank() != 2) {
    throw Error(ErrorKind::kDomain, "blocking words are defined for rank 2");
  }
  if (u.empty()) {
    throw Error(ErrorKind::kDomain, "blocking word of the empty word");
  }
  const std::size_t exponent = u.size() + 2;
  Word pattern(2);
  for (std::size_t i = 0; i < exponent; ++i) pattern.Append(Letter(1, 1));
  for (std::size_t i = 0; i < exponent; ++i) pattern.Append(Letter(2, 1));
  return {std::move(pattern), u.size()};
}

StreamMatcher::StreamMatcher(const Word& pattern) {
  if (pattern.empty()) {
    throw Error(ErrorKind::kDomain, "matcher needs a nonempty pattern");
  }
  auto tables = std::make_shared<Tables>();
  tables->pattern = pattern;
  const auto p = pattern.letters();
  const std::size_t m = p.size();
  tables->border.assign(m + 1, 0);
  tables->border[0] = -1;
  int k = -1;
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 0 && p[k] != p[i]) k = tables->border[k];
    ++k;
    tables->border[i + 1] = k;
  }
  tables_ = std::move(tables);
}

std::size_t StreamMatcher::Next(std::size_t q, Letter x) const {
  const auto p = tables_->pattern.letters();
  int k = static_cast<int>(q);
  if (static_cast<std::size_t>(k) == p.size()) k = tables_->border[k];
  while (k >= 0 && p[k] != x) k = tables_->border[k];
  return static_cast<std::size_t>(k + 1);
}

bool StreamMatcher::Feed(Letter x) {
  ++consumed_;
  state_ = Next(state_, x);
  return state_ == tables_->pattern.size();
}

ScanResult ScanStream(StreamMatcher& m, std::span<const Letter> v) {
  ScanResult result;
  const std::size_t before = m.letters_consumed();
  for (Letter x : v) {
    if (m.Feed(x)) {
      result.found_at = m.letters_consumed() - before;
      break;
    }
  }
  result.letters_read = m.letters_consumed() - before;
  return result;
}

TVerdict TReject(StreamMatcher matcher, std::span<const Letter> letters,
                 ScanMode mode) {
  matcher.Reset();
  TVerdict verdict;
  ScanResult scan = ScanStream(matcher, letters);
  const std::size_t m = matcher.pattern().size();
  if (!scan.found_at && mode == ScanMode::kCyclic && m >= 2 &&
      m <= letters.size()) {
    ScanResult tail = ScanStream(matcher, letters.first(m - 1));
    if (tail.found_at) scan.found_at = letters.size() + *tail.found_at;
    scan.letters_read += tail.letters_read;
  }
  verdict.not_in_orbit = scan.found_at.has_value();
  verdict.position = scan.found_at;
  verdict.letters_read = scan.letters_read;
  return verdict;
}

TVerdict TReject(const BlockingWord& b, const Word& v, ScanMode mode) {
  return TReject(StreamMatcher(b.pattern), v, mode);
}

}  // namespace whitehead
