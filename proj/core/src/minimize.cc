#include "whitehead/minimize.h"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "whitehead/error.h"

namespace whitehead {

namespace {

// Writes phi(w) into `buffer`, freely reduced, and returns the length of its
// cyclic reduction. Avoids building Word objects for rejected moves.
std::size_t ImageCyclicLength(const WhiteheadAutomorphism& phi,
                              std::span<const Letter> w,
                              std::vector<Letter>& buffer) {
  buffer.clear();
  for (Letter x : w) {
    for (Letter y : phi.Image(x).letters()) {
      if (!buffer.empty() && buffer.back().IsInverseOf(y)) {
        buffer.pop_back();
      } else {
        buffer.push_back(y);
      }
    }
  }
  std::size_t first = 0;
  std::size_t last = buffer.size();
  while (last - first >= 2 && buffer[first].IsInverseOf(buffer[last - 1])) {
    ++first;
    --last;
  }
  return last - first;
}

}  // namespace

MinimizeResult MinimizeCyclic(const CyclicWord& w) {
  const int rank = w.rank();
  const auto& moves = WhiteheadMoves(rank);
  MinimizeResult result{w, {}};
  std::vector<Letter> buffer;

  bool improved = true;
  while (improved && result.word.size() > 1) {
    improved = false;
    const std::size_t current = result.word.size();
    auto letters = result.word.word().letters();
    for (std::size_t i = 0; i < moves.size(); ++i) {
      ++result.trace.move_applications;
      const std::size_t len = ImageCyclicLength(moves[i], letters, buffer);
      if (len < current) {
        result.word = CanonicalCyclic(FreeReduce(rank, buffer));
        result.trace.steps.push_back({i, len});
        improved = true;
        break;
      }
    }
  }
  return result;
}

std::vector<CyclicWord> MinimalOrbitSet(const CyclicWord& w, std::size_t cap) {
  const int rank = w.rank();
  const auto& moves = WhiteheadMoves(rank);
  const CyclicWord start = MinimizeCyclic(w).word;
  const std::size_t length = start.size();

  std::unordered_set<CyclicWord, WordHash> seen{start};
  std::deque<CyclicWord> queue{start};
  std::vector<Letter> buffer;
  while (!queue.empty()) {
    const CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& phi : moves) {
      if (ImageCyclicLength(phi, cur.word().letters(), buffer) != length) {
        continue;
      }
      CyclicWord next = CanonicalCyclic(FreeReduce(rank, buffer));
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::kCapExceeded,
                      "minimal orbit set exceeds cap of " +
                          std::to_string(cap) + " words");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<CyclicWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitTable::OrbitTable(Word source, std::size_t min_length,
                       std::vector<CyclicWord> minimal_set)
    : source_(std::move(source)),
      min_length_(min_length),
      minimal_set_(std::move(minimal_set)) {
  std::sort(minimal_set_.begin(), minimal_set_.end());
  minimal_set_.erase(std::unique(minimal_set_.begin(), minimal_set_.end()),
                     minimal_set_.end());
  for (const auto& m : minimal_set_) {
    if (m.size() != min_length_ || m.rank() != source_.rank()) {
      throw Error(ErrorKind::kDomain,
                  "orbit table member " + m.ToString() +
                      " has the wrong length or rank");
    }
  }
}

bool OrbitTable::Contains(const CyclicWord& w) const {
  return w.size() == min_length_ &&
         std::binary_search(minimal_set_.begin(), minimal_set_.end(), w);
}

void OrbitTable::Serialize(std::ostream& out) const {
  out << "whitehead-orbit-table 1\n"
      << "rank " << source_.rank() << "\n"
      << "source " << source_.ToString() << "\n"
      << "min_length " << min_length_ << "\n"
      << "members " << minimal_set_.size() << "\n";
  for (const auto& m : minimal_set_) out << m.ToString() << "\n";
}

std::string OrbitTable::Serialize() const {
  std::ostringstream out;
  Serialize(out);
  return out.str();
}

OrbitTable OrbitTable::Deserialize(std::istream& in) {
  auto fail = [](const std::string& what) {
    return Error(ErrorKind::kParse, "orbit table: " + what);
  };
  auto expect = [&](const std::string& key) {
    std::string line;
    if (!std::getline(in, line)) throw fail("missing '" + key + "' line");
    if (line.rfind(key + " ", 0) != 0) {
      throw fail("expected '" + key + "', got '" + line + "'");
    }
    return line.substr(key.size() + 1);
  };
  auto to_number = [&](const std::string& s, const std::string& key) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos != s.size()) throw fail("bad " + key);
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw fail("bad " + key);
    }
  };

  if (expect("whitehead-orbit-table") != "1") {
    throw fail("unsupported version");
  }
  const int rank = static_cast<int>(to_number(expect("rank"), "rank"));
  const Word source = ParseWord(expect("source"), rank);
  const std::size_t min_length = to_number(expect("min_length"), "min_length");
  const std::size_t count = to_number(expect("members"), "members");
  std::vector<CyclicWord> members;
  members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw fail("truncated member list");
    const Word w = ParseWord(line, rank);
    CyclicWord c = CanonicalCyclic(w);
    if (c.word() != w) throw fail("member '" + line + "' is not canonical");
    members.push_back(std::move(c));
  }
  return OrbitTable(source, min_length, std::move(members));
}

OrbitTable OrbitTable::Deserialize(const std::string& text) {
  std::istringstream in(text);
  return Deserialize(in);
}

OrbitTable BuildOrbitTable(const Word& u, std::size_t cap) {
  if (u.empty()) {
    throw Error(ErrorKind::kDomain, "orbit table needs a nonempty u");
  }
  auto set = MinimalOrbitSet(CanonicalCyclic(u), cap);
  const std::size_t length = set.front().size();
  return OrbitTable(u, length, std::move(set));
}

WhiteheadVerdict WhiteheadDecideDetailed(const OrbitTable& table,
                                         const Word& v) {
  if (table.rank() != v.rank()) {
    throw Error(ErrorKind::kRank, "whitehead_decide: rank mismatch");
  }
  WhiteheadVerdict verdict;
  const CyclicWord cv = CanonicalCyclic(v);
  if (cv.size() < table.min_length()) return verdict;
  const MinimizeResult m = MinimizeCyclic(cv);
  verdict.minimize_steps = m.trace.steps.size();
  verdict.move_applications = m.trace.move_applications;
  verdict.in_orbit = table.Contains(m.word);
  return verdict;
}

}  // namespace whitehead
