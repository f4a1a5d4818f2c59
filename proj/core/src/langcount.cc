#include "whitehead/langcount.h"

#include <cmath>

#include <Eigen/Dense>

#include "whitehead/blocking.h"
#include "whitehead/error.h"

namespace whitehead {

namespace {

void CheckCountArgs(int rank, int n) {
  if (rank < 1 || rank > kMaxLetterRank) {
    throw Error(ErrorKind::kRank, "rank out of range");
  }
  if (n < 0) throw Error(ErrorKind::kDomain, "length must be non-negative");
}

}  // namespace

BigInt CountFreelyReduced(int rank, int n) {
  CheckCountArgs(rank, n);
  if (n == 0) return 1;
  BigInt result = 2 * rank;
  for (int i = 1; i < n; ++i) result *= 2 * rank - 1;
  return result;
}

BigInt CountCyclicallyReduced(int rank, int n) {
  CheckCountArgs(rank, n);
  if (n == 0) return 1;
  const int k = 2 * rank;
  BigInt total = 0;
  for (int first = 0; first < k; ++first) {
    // ways[i]: freely reduced words starting with `first` ending in letter i.
    std::vector<BigInt> ways(k, 0);
    ways[first] = 1;
    for (int step = 1; step < n; ++step) {
      std::vector<BigInt> next(k, 0);
      for (int last = 0; last < k; ++last) {
        if (ways[last] == 0) continue;
        const Letter l = Letter::FromIndex(last);
        for (int x = 0; x < k; ++x) {
          if (!Letter::FromIndex(x).IsInverseOf(l)) next[x] += ways[last];
        }
      }
      ways = std::move(next);
    }
    const Letter f = Letter::FromIndex(first);
    for (int last = 0; last < k; ++last) {
      if (n == 1 || !Letter::FromIndex(last).IsInverseOf(f)) {
        total += ways[last];
      }
    }
  }
  return total;
}

AvoidanceAutomaton::AvoidanceAutomaton(int rank, const Word& pattern)
    : rank_(rank) {
  if (pattern.rank() != rank) {
    throw Error(ErrorKind::kRank, "pattern rank mismatch");
  }
  if (pattern.empty()) {
    throw Error(ErrorKind::kDomain, "avoidance pattern must be nonempty");
  }
  const StreamMatcher matcher(pattern);
  const std::size_t m = pattern.size();
  const std::size_t k = alphabet_size();
  const std::size_t states = 1 + m * k;
  next_.assign(states * k, -1);
  auto id = [k](std::size_t q, int last) {
    return static_cast<int>(1 + q * k + last);
  };
  for (int x = 0; x < static_cast<int>(k); ++x) {
    const std::size_t q = matcher.Next(0, Letter::FromIndex(x));
    if (q < m) next_[x] = id(q, x);
  }
  for (std::size_t q = 0; q < m; ++q) {
    for (int last = 0; last < static_cast<int>(k); ++last) {
      const std::size_t s = static_cast<std::size_t>(id(q, last));
      for (int x = 0; x < static_cast<int>(k); ++x) {
        const Letter lx = Letter::FromIndex(x);
        if (lx.IsInverseOf(Letter::FromIndex(last))) continue;
        const std::size_t q2 = matcher.Next(q, lx);
        if (q2 < m) next_[s * k + x] = id(q2, x);
      }
    }
  }
}

BigInt CountAvoiding(int rank, const Word& pattern, int n) {
  CheckCountArgs(rank, n);
  const AvoidanceAutomaton automaton(rank, pattern);
  const std::size_t states = automaton.num_states();
  const int k = static_cast<int>(automaton.alphabet_size());
  std::vector<BigInt> ways(states, 0);
  ways[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(states, 0);
    for (std::size_t s = 0; s < states; ++s) {
      if (ways[s] == 0) continue;
      for (int x = 0; x < k; ++x) {
        const int t = automaton.Next(s, x);
        if (t >= 0) next[t] += ways[s];
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

GrowthEstimate GrowthRate(int rank, const Word& pattern, double tolerance,
                          int max_iterations) {
  const AvoidanceAutomaton automaton(rank, pattern);
  const std::size_t states = automaton.num_states();
  const int k = static_cast<int>(automaton.alphabet_size());

  auto multiply = [&](const std::vector<double>& x) {
    std::vector<double> y(states, 0.0);
    for (std::size_t s = 0; s < states; ++s) {
      if (x[s] == 0.0) continue;
      for (int c = 0; c < k; ++c) {
        const int t = automaton.Next(s, c);
        if (t >= 0) y[t] += x[s];
      }
    }
    return y;
  };
  auto l1 = [](const std::vector<double>& x) {
    double sum = 0;
    for (double v : x) sum += std::abs(v);
    return sum;
  };

  // Distribution after one letter; the start state has no in-edges.
  std::vector<double> x(states, 0.0);
  x[0] = 1.0;
  x = multiply(x);
  double norm = l1(x);
  if (norm == 0.0) {
    throw Error(ErrorKind::kConvergence, "every word of length 1 is excluded");
  }
  for (double& v : x) v /= norm;

  GrowthEstimate est;
  for (int it = 1; it <= max_iterations; ++it) {
    const std::vector<double> tx = multiply(x);
    const double lambda = l1(tx);  // |x| == 1 and T >= 0
    double diff = 0;
    for (std::size_t s = 0; s < states; ++s) diff += std::abs(tx[s] - lambda * x[s]);
    est.lambda = lambda;
    est.iterations = it;
    est.residual = lambda > 0 ? diff / lambda : INFINITY;
    if (lambda > 0 && est.residual <= tolerance) {
      est.s = lambda / (2 * rank - 1);
      return est;
    }
    if (lambda == 0) break;
    // Step with T + I so that periodic components still converge.
    for (std::size_t s = 0; s < states; ++s) x[s] += tx[s];
    norm = l1(x);
    for (double& v : x) v /= norm;
  }
  throw Error(ErrorKind::kConvergence,
              "power iteration did not converge (residual " +
                  std::to_string(est.residual) + ")");
}

double ExpectedFirstOccurrence(int rank, const Word& pattern) {
  const AvoidanceAutomaton automaton(rank, pattern);
  const std::size_t states = automaton.num_states();
  const int k = static_cast<int>(automaton.alphabet_size());

  // t = 1 + Q t, with Q the sub-stochastic transient block.
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(states, states);
  for (std::size_t s = 0; s < states; ++s) {
    const double p = s == 0 ? 1.0 / k : 1.0 / (k - 1);
    for (int c = 0; c < k; ++c) {
      const int t = automaton.Next(s, c);
      if (t >= 0) system(s, t) -= p;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::kConvergence,
                "pattern is not reached with probability one");
  }
  const Eigen::VectorXd t = lu.solve(Eigen::VectorXd::Ones(states));
  return t(0);
}

double AvoidanceProbability(int rank, const Word& pattern, std::size_t n) {
  const AvoidanceAutomaton automaton(rank, pattern);
  const std::size_t states = automaton.num_states();
  const int k = static_cast<int>(automaton.alphabet_size());
  std::vector<double> p(states, 0.0);
  p[0] = 1.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> next(states, 0.0);
    for (std::size_t s = 0; s < states; ++s) {
      if (p[s] == 0.0) continue;
      const double share = p[s] / (s == 0 ? k : k - 1);
      for (int c = 0; c < k; ++c) {
        const int t = automaton.Next(s, c);
        if (t >= 0) next[t] += share;
      }
    }
    p = std::move(next);
  }
  double total = 0;
  for (double v : p) total += v;
  return total;
}

boost::rational<std::int64_t> GeometricSumBound(int rank) {
  if (rank < 2) throw Error(ErrorKind::kDomain, "geometric bound needs r >= 2");
  const std::int64_t d = 2 * rank - 2;
  return {2 * rank - 1, d * d};
}

}  // namespace whitehead
