#include "whitehead/decider.h"

#include "whitehead/error.h"

namespace whitehead {

FixedU FixedU::Prepare(const Word& u, std::size_t cap) {
  if (u.rank() != 2) {
    throw Error(ErrorKind::kDomain, "the decider is defined for rank 2");
  }
  FixedU fixed(u);
  if (!u.empty()) {
    fixed.table_ = BuildOrbitTable(u, cap);
    fixed.blocker_ = MakeBlockingWord(u);
    fixed.matcher_.emplace(fixed.blocker_->pattern);
  }
  return fixed;
}

FixedU FixedU::FromTable(OrbitTable table) {
  if (table.rank() != 2) {
    throw Error(ErrorKind::kDomain, "the decider is defined for rank 2");
  }
  FixedU fixed(table.source());
  fixed.blocker_ = MakeBlockingWord(table.source());
  fixed.matcher_.emplace(fixed.blocker_->pattern);
  fixed.table_ = std::move(table);
  return fixed;
}

std::string_view DecisionPathName(DecisionPath path) {
  switch (path) {
    case DecisionPath::kFastReject:
      return "FastReject";
    case DecisionPath::kHonestAccept:
      return "HonestAccept";
    case DecisionPath::kHonestReject:
      return "HonestReject";
  }
  return "HonestReject";
}

Decision Decide(const FixedU& fixed, const Word& v, InputMode mode,
                ScanMode scan) {
  const auto start = std::chrono::steady_clock::now();
  if (v.rank() != fixed.u().rank()) {
    throw Error(ErrorKind::kRank, "decide: rank mismatch");
  }

  Decision d;
  const auto letters = v.letters();
  std::span<const Letter> core = letters;
  if (mode == InputMode::kCyclicallyReduced) {
    if (!v.IsCyclicallyReduced()) {
      throw Error(ErrorKind::kDomain,
                  "input claimed cyclically reduced but is not: " +
                      v.ToString());
    }
  } else {
    const CoreSpan span = FindCyclicCore(letters);
    core = letters.subspan(span.offset, span.length);
    d.cyclic_rounds = span.rounds;
    d.letters_read = 2 * static_cast<std::size_t>(span.comparisons);
  }

  auto finish = [&](Decision& out) {
    out.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };

  if (fixed.u().empty()) {
    d.in_orbit = core.empty();
    d.path = d.in_orbit ? DecisionPath::kHonestAccept
                        : DecisionPath::kHonestReject;
    return finish(d);
  }

  const TVerdict t = TReject(*fixed.matcher(), core, scan);
  d.letters_read += t.letters_read;
  if (t.not_in_orbit) {
    d.in_orbit = false;
    d.path = DecisionPath::kFastReject;
    return finish(d);
  }

  const Word core_word = Word::FromReducedLetters(
      v.rank(), std::vector<Letter>(core.begin(), core.end()));
  const WhiteheadVerdict w = WhiteheadDecideDetailed(*fixed.table(), core_word);
  d.in_orbit = w.in_orbit;
  d.minimize_steps = w.minimize_steps;
  d.path = w.in_orbit ? DecisionPath::kHonestAccept
                      : DecisionPath::kHonestReject;
  return finish(d);
}

}  // namespace whitehead
