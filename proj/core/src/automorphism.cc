#include "whitehead/automorphism.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <unordered_set>

#include "whitehead/error.h"

namespace whitehead {

namespace {

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Error ParseError(std::string_view text, const std::string& what) {
  return Error(ErrorKind::kParse,
               "bad automorphism \"" + std::string(text) + "\": " + what);
}

Word WordOf(int rank, std::initializer_list<Letter> letters) {
  return FreeReduce(rank, std::span<const Letter>(letters.begin(),
                                                  letters.size()));
}

Word ActionImage(int rank, Letter y, Letter x, TypeIIAction action) {
  switch (action) {
    case TypeIIAction::kFixed:
      return WordOf(rank, {y});
    case TypeIIAction::kRight:
      return WordOf(rank, {y, x});
    case TypeIIAction::kLeft:
      return WordOf(rank, {x.inverse(), y});
    case TypeIIAction::kBoth:
      return WordOf(rank, {x.inverse(), y, x});
  }
  return WordOf(rank, {y});
}

}  // namespace

WhiteheadAutomorphism::WhiteheadAutomorphism(int rank,
                                             std::variant<TypeI, TypeII> data)
    : rank_(rank), data_(std::move(data)) {
  images_.assign(2 * rank_, Word(rank_));
  for (int g = 1; g <= rank_; ++g) {
    const Letter y(g, 1);
    Word image(rank_);
    if (const auto* t1 = std::get_if<TypeI>(&data_)) {
      image.Append(Letter(t1->perm[g - 1], t1->signs[g - 1]));
    } else {
      const auto& t2 = std::get<TypeII>(data_);
      image = ActionImage(rank_, y, t2.multiplier, t2.actions[g - 1]);
    }
    images_[y.index()] = image;
    images_[y.inverse().index()] = Invert(image);
  }
}

WhiteheadAutomorphism WhiteheadAutomorphism::MakeTypeI(std::vector<int> perm,
                                                       std::vector<int> signs) {
  const int rank = static_cast<int>(perm.size());
  if (rank < 1 || rank > kMaxLetterRank ||
      signs.size() != perm.size()) {
    throw Error(ErrorKind::kDomain, "type I: permutation/sign size mismatch");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rank; ++i) {
    if (sorted[i] != i + 1) {
      throw Error(ErrorKind::kDomain, "type I: not a permutation");
    }
    if (signs[i] != 1 && signs[i] != -1) {
      throw Error(ErrorKind::kDomain, "type I: sign must be +1 or -1");
    }
  }
  return WhiteheadAutomorphism(rank, TypeI{std::move(perm), std::move(signs)});
}

WhiteheadAutomorphism WhiteheadAutomorphism::MakeTypeII(
    int rank, Letter multiplier, std::vector<TypeIIAction> actions) {
  if (rank < 1 || rank > kMaxLetterRank ||
      static_cast<int>(actions.size()) != rank) {
    throw Error(ErrorKind::kDomain, "type II: action count must equal rank");
  }
  if (multiplier.generator() > rank) {
    throw Error(ErrorKind::kRank, "type II: multiplier exceeds rank");
  }
  if (actions[multiplier.generator() - 1] != TypeIIAction::kFixed) {
    throw Error(ErrorKind::kDomain,
                "type II: the multiplier's generator must be fixed");
  }
  return WhiteheadAutomorphism(rank, TypeII{multiplier, std::move(actions)});
}

WhiteheadAutomorphism WhiteheadAutomorphism::Identity(int rank) {
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  return MakeTypeI(std::move(perm), std::vector<int>(rank, 1));
}

Word WhiteheadAutomorphism::Apply(const Word& w) const {
  if (w.rank() != rank_) {
    throw Error(ErrorKind::kRank, "automorphism/word rank mismatch");
  }
  Word out(rank_);
  for (Letter x : w.letters()) {
    for (Letter y : images_[x.index()].letters()) out.Append(y);
  }
  return out;
}

WhiteheadAutomorphism WhiteheadAutomorphism::Inverse() const {
  if (const auto* t1 = std::get_if<TypeI>(&data_)) {
    // x_i -> x_p(i)^s(i) inverts to x_p(i) -> x_i^s(i).
    std::vector<int> perm(rank_);
    std::vector<int> signs(rank_);
    for (int i = 0; i < rank_; ++i) {
      perm[t1->perm[i] - 1] = i + 1;
      signs[t1->perm[i] - 1] = t1->signs[i];
    }
    return MakeTypeI(std::move(perm), std::move(signs));
  }
  const auto& t2 = std::get<TypeII>(data_);
  return MakeTypeII(rank_, t2.multiplier.inverse(), t2.actions);
}

std::string WhiteheadAutomorphism::ToString() const {
  std::string out;
  if (const auto* t1 = std::get_if<TypeI>(&data_)) {
    out = "I:perm=";
    for (int p : t1->perm) out.push_back(static_cast<char>('a' + p - 1));
    out += ",inv=";
    for (int s : t1->signs) out.push_back(s > 0 ? '+' : '-');
    return out;
  }
  const auto& t2 = std::get<TypeII>(data_);
  out = "II:x=";
  out.push_back(t2.multiplier.ToChar());
  for (int g = 1; g <= rank_; ++g) {
    if (t2.actions[g - 1] == TypeIIAction::kFixed) continue;
    out += ",";
    out.push_back(Letter(g, 1).ToChar());
    out += "->";
    out += images_[Letter(g, 1).index()].ToString();
  }
  return out;
}

WhiteheadAutomorphism WhiteheadAutomorphism::Parse(std::string_view text,
                                                   int rank) {
  const std::string body = Trim(text);
  if (body.rfind("I:", 0) == 0) {
    std::vector<int> perm;
    std::vector<int> signs;
    bool have_perm = false;
    bool have_inv = false;
    for (const std::string& field : Split(std::string_view(body).substr(2), ',')) {
      if (field.rfind("perm=", 0) == 0) {
        have_perm = true;
        for (char c : field.substr(5)) {
          if (c < 'a' || c > 'z') throw ParseError(text, "perm expects a..z");
          perm.push_back(c - 'a' + 1);
        }
      } else if (field.rfind("inv=", 0) == 0) {
        have_inv = true;
        for (char c : field.substr(4)) {
          if (c != '+' && c != '-') throw ParseError(text, "inv expects +/-");
          signs.push_back(c == '+' ? 1 : -1);
        }
      } else {
        throw ParseError(text, "unknown field \"" + field + "\"");
      }
    }
    if (!have_perm) throw ParseError(text, "missing perm=");
    if (!have_inv) signs.assign(perm.size(), 1);
    if (static_cast<int>(perm.size()) != rank ||
        static_cast<int>(signs.size()) != rank) {
      throw Error(ErrorKind::kRank, "type I size does not match rank " +
                                        std::to_string(rank));
    }
    try {
      return MakeTypeI(std::move(perm), std::move(signs));
    } catch (const Error& e) {
      throw ParseError(text, e.what());
    }
  }
  if (body.rfind("II:", 0) == 0) {
    auto fields = Split(std::string_view(body).substr(3), ',');
    if (fields.empty() || fields[0].rfind("x=", 0) != 0 ||
        fields[0].size() != 3) {
      throw ParseError(text, "expected x=<letter>");
    }
    const Word xw = ParseWord(fields[0].substr(2), rank);
    if (xw.size() != 1) throw ParseError(text, "multiplier must be one letter");
    const Letter x = xw.front();
    std::vector<TypeIIAction> actions(rank, TypeIIAction::kFixed);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::string& f = fields[i];
      const auto arrow = f.find("->");
      if (arrow == std::string::npos) throw ParseError(text, "expected y->image");
      const Word yw = ParseWord(f.substr(0, arrow), rank);
      if (yw.size() != 1 || yw.front().sign() < 0) {
        throw ParseError(text, "action source must be a positive generator");
      }
      const Letter y = yw.front();
      if (y.generator() == x.generator()) {
        throw ParseError(text, "multiplier generator is always fixed");
      }
      const Word image = ParseWord(f.substr(arrow + 2), rank);
      bool matched = false;
      for (auto a : {TypeIIAction::kFixed, TypeIIAction::kRight,
                     TypeIIAction::kLeft, TypeIIAction::kBoth}) {
        if (ActionImage(rank, y, x, a) == image) {
          actions[y.generator() - 1] = a;
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw ParseError(text, "image of " + yw.ToString() +
                                   " must be one of y, yx, Xy, Xyx");
      }
    }
    return MakeTypeII(rank, x, std::move(actions));
  }
  throw ParseError(text, "expected prefix I: or II:");
}

AutomorphismWord::AutomorphismWord(int rank,
                                   std::vector<WhiteheadAutomorphism> factors)
    : rank_(rank) {
  for (auto& f : factors) Append(std::move(f));
}

void AutomorphismWord::Append(WhiteheadAutomorphism phi) {
  if (phi.rank() != rank_) {
    throw Error(ErrorKind::kRank, "automorphism rank mismatch");
  }
  factors_.push_back(std::move(phi));
}

Word AutomorphismWord::Apply(const Word& w) const {
  Word out = w;
  for (const auto& f : factors_) out = f.Apply(out);
  return out;
}

AutomorphismWord AutomorphismWord::Inverse() const {
  AutomorphismWord inv(rank_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    inv.Append(it->Inverse());
  }
  return inv;
}

std::string AutomorphismWord::ToString() const {
  if (factors_.empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += ";";
    out += factors_[i].ToString();
  }
  return out;
}

AutomorphismWord AutomorphismWord::Parse(std::string_view text, int rank) {
  AutomorphismWord out(rank);
  if (Trim(text).empty()) return out;
  for (const std::string& part : Split(text, ';')) {
    out.Append(WhiteheadAutomorphism::Parse(part, rank));
  }
  return out;
}

namespace {

std::vector<WhiteheadAutomorphism> BuildMoves(int rank) {
  std::vector<WhiteheadAutomorphism> moves;
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int mask = 0; mask < (1 << rank); ++mask) {
      std::vector<int> signs(rank);
      for (int i = 0; i < rank; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
      moves.push_back(WhiteheadAutomorphism::MakeTypeI(perm, signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  int combos = 1;
  for (int i = 1; i < rank; ++i) combos *= 4;
  for (int xi = 0; xi < 2 * rank; ++xi) {
    const Letter x = Letter::FromIndex(xi);
    // Base-4 digits over the other generators in ascending order; code 0
    // (all fixed) is the identity.
    for (int code = 1; code < combos; ++code) {
      std::vector<TypeIIAction> actions(rank, TypeIIAction::kFixed);
      int c = code;
      for (int g = 1; g <= rank; ++g) {
        if (g == x.generator()) continue;
        actions[g - 1] = static_cast<TypeIIAction>(c % 4);
        c /= 4;
      }
      moves.push_back(WhiteheadAutomorphism::MakeTypeII(rank, x, actions));
    }
  }
  return moves;
}

}  // namespace

const std::vector<WhiteheadAutomorphism>& WhiteheadMoves(int rank) {
  if (rank < 1 || rank > kMaxWhiteheadRank) {
    throw Error(ErrorKind::kCapExceeded,
                "Whitehead enumeration supports rank 1.." +
                    std::to_string(kMaxWhiteheadRank) + ", got " +
                    std::to_string(rank));
  }
  static std::array<std::vector<WhiteheadAutomorphism>, kMaxWhiteheadRank + 1>
      tables;
  static std::array<std::once_flag, kMaxWhiteheadRank + 1> flags;
  std::call_once(flags[rank], [rank] { tables[rank] = BuildMoves(rank); });
  return tables[rank];
}

AutomorphismWord RandomAutomorphism(int rank, int k, std::uint64_t seed) {
  if (k < 0) throw Error(ErrorKind::kDomain, "k must be non-negative");
  const auto& moves = WhiteheadMoves(rank);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  AutomorphismWord out(rank);
  for (int i = 0; i < k; ++i) out.Append(moves[pick(rng)]);
  return out;
}

std::vector<long> Abelianize(const Word& w) {
  std::vector<long> sums(w.rank(), 0);
  for (Letter x : w.letters()) sums[x.generator() - 1] += x.sign();
  return sums;
}

namespace {

void RequireRankTwo(const Word& w, const char* op) {
  if (w.rank() != 2) {
    throw Error(ErrorKind::kDomain,
                std::string(op) + " is defined for rank 2 only");
  }
}

}  // namespace

bool IsBasis(const Word& u, const Word& v) {
  RequireRankTwo(u, "is_basis");
  RequireRankTwo(v, "is_basis");
  const auto au = Abelianize(u);
  const auto av = Abelianize(v);
  const long det = au[0] * av[1] - au[1] * av[0];
  if (det != 1 && det != -1) return false;

  const Word commutator = Concat(Concat(u, v), Concat(Invert(u), Invert(v)));
  static const CyclicWord kPlus = CanonicalCyclic(ParseWord("abAB", 2));
  static const CyclicWord kMinus = CanonicalCyclic(ParseWord("baBA", 2));
  const CyclicWord c = CanonicalCyclic(commutator);
  return c == kPlus || c == kMinus;
}

ConjugateReducedPair SimultaneousConjugateReduce(const Word& u, const Word& v,
                                                 int budget) {
  if (u.rank() != v.rank()) {
    throw Error(ErrorKind::kRank, "simultaneous_conjugate_reduce: rank mismatch");
  }
  const int rank = u.rank();
  if (budget <= 0) {
    budget = std::max<int>(2 * static_cast<int>(u.size() + v.size()), 1);
  }

  struct State {
    Word u, v, g;
  };
  // Ordered by (total length, entries not cyclically reduced, |g|, seq).
  using Key = std::tuple<std::size_t, int, std::size_t, std::size_t>;
  auto key_of = [](const State& s, std::size_t seq) {
    const int bad = (s.u.IsCyclicallyReduced() ? 0 : 1) +
                    (s.v.IsCyclicallyReduced() ? 0 : 1);
    return Key{s.u.size() + s.v.size(), bad, s.g.size(), seq};
  };

  std::vector<State> states;
  std::priority_queue<std::pair<Key, std::size_t>,
                      std::vector<std::pair<Key, std::size_t>>, std::greater<>>
      frontier;
  std::set<std::pair<Word, Word>> seen;

  states.push_back({u, v, Word(rank)});
  seen.insert({u, v});
  frontier.push({key_of(states[0], 0), 0});

  std::size_t best = 0;
  Key best_key = key_of(states[0], 0);
  int expanded = 0;
  bool settled = false;

  while (!frontier.empty()) {
    if (expanded >= budget) break;
    const auto [key, idx] = frontier.top();
    frontier.pop();
    ++expanded;
    if (key < best_key) {
      best_key = key;
      best = idx;
    }
    const std::size_t total = std::get<0>(key);
    bool descends = false;
    for (int xi = 0; xi < 2 * rank; ++xi) {
      const Letter x = Letter::FromIndex(xi);
      Word xw(rank);
      xw.Append(x);
      State next{Conjugate(states[idx].u, xw), Conjugate(states[idx].v, xw),
                 Concat(xw, states[idx].g)};
      const std::size_t next_total = next.u.size() + next.v.size();
      if (next_total > total) continue;
      if (next_total < total) descends = true;
      if (!seen.insert({next.u, next.v}).second) continue;
      states.push_back(std::move(next));
      frontier.push({key_of(states.back(), states.size() - 1),
                     states.size() - 1});
    }
    // Total length is convex along geodesics of the Cayley tree, so a state
    // with no strictly shorter neighbour has globally minimal total.
    if (!descends && std::get<1>(best_key) == 0 &&
        std::get<0>(best_key) == total) {
      settled = true;
      break;
    }
  }
  if (frontier.empty()) settled = true;

  ConjugateReducedPair out{states[best].u, states[best].v, states[best].g,
                           expanded, !settled};
  return out;
}

std::vector<int> CyclicSyllableExponents(const Word& w) {
  const Word core = CyclicReduceDeque(w).core;
  auto letters = core.letters();
  const std::size_t n = letters.size();
  // Start right after a generator change so the cyclic syllables are read
  // whole.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter prev = letters[(i + n - 1) % n];
    if (letters[i].generator() == 1 && prev.generator() != 1) {
      start = i;
      break;
    }
  }
  if (start == n) return {};
  std::vector<int> exps;
  for (std::size_t k = 0; k < n; ++k) {
    const Letter x = letters[(start + k) % n];
    if (x.generator() > 2) return {};
    const bool new_syllable =
        k == 0 || letters[(start + k - 1) % n].generator() != x.generator();
    if (new_syllable) exps.push_back(0);
    exps.back() += x.sign();
  }
  return exps;
}

bool MatchesPrimitivePairPattern(const Word& u, const Word& v) {
  RequireRankTwo(u, "primitive pair pattern");
  RequireRankTwo(v, "primitive pair pattern");
  const std::vector<int> ue = CyclicSyllableExponents(u);
  const std::vector<int> ve = CyclicSyllableExponents(v);
  if (ue.size() < 2 || ve.size() < 2) return false;

  // `fixed_parity` selects which syllables must be +-1: 1 for the b-exponents
  // (odd positions), 0 for the a-exponents.
  auto check = [&](int sa, int sb, int fixed_parity) {
    auto value = [&](const std::vector<int>& e, std::size_t i) {
      return e[i] * (i % 2 == 0 ? sa : sb);
    };
    for (std::size_t i = fixed_parity; i < ue.size(); i += 2) {
      if (value(ue, i) != 1) return false;
    }
    const int eps = value(ve, fixed_parity);
    if (eps != 1 && eps != -1) return false;
    for (std::size_t i = fixed_parity; i < ve.size(); i += 2) {
      if (value(ve, i) != eps) return false;
    }
    std::set<int> seen;
    for (std::size_t i = 1 - fixed_parity; i < ue.size(); i += 2) {
      seen.insert(value(ue, i));
    }
    for (std::size_t i = 1 - fixed_parity; i < ve.size(); i += 2) {
      seen.insert(eps * value(ve, i));
    }
    const int t = *seen.begin();
    return t > 0 && seen.size() == 2 && *seen.rbegin() == t + 1;
  };

  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      if (check(sa, sb, 1) || check(sa, sb, 0)) return true;
    }
  }
  return false;
}

}  // namespace whitehead
