#include "whitehead/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "whitehead/decider.h"
#include "whitehead/error.h"
#include "whitehead/langcount.h"
#include "whitehead/sampler.h"

namespace whitehead {

namespace {

double Mean(const std::vector<double>& xs) {
  double sum = 0;
  for (double x : xs) sum += x;
  return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

// Nearest-rank quantile on a sorted sample.
double Quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

double Median(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

void CheckBenchArgs(std::span<const std::size_t> n_values,
                    std::size_t samples) {
  if (n_values.empty()) throw Error(ErrorKind::kDomain, "no n values given");
  if (samples == 0) throw Error(ErrorKind::kDomain, "samples must be > 0");
  for (std::size_t n : n_values) {
    if (n == 0) throw Error(ErrorKind::kDomain, "n must be >= 1");
  }
}

}  // namespace

DeciderBenchReport RunDeciderBench(const Word& u,
                                   std::span<const std::size_t> n_values,
                                   std::size_t samples, std::uint64_t seed) {
  CheckBenchArgs(n_values, samples);
  const FixedU fixed = FixedU::Prepare(u);

  DeciderBenchReport report;
  report.u = u.ToString();
  report.n_values.assign(n_values.begin(), n_values.end());
  report.samples = samples;
  report.seed = seed;
  if (fixed.blocker()) {
    const Word& pattern = fixed.blocker()->pattern;
    report.blocking_pattern = pattern.ToString();
    report.predicted_e0 = ExpectedFirstOccurrence(2, pattern);
    report.crossover_n = static_cast<std::size_t>(
        std::ceil(report.predicted_e0 * std::log(100.0)));
  }

  double fast_ns = 0;
  double fast_letters = 0;
  for (std::size_t n : n_values) {
    std::vector<double> letters;
    letters.reserve(samples);
    double fast = 0;
    double steps = 0;
    double wall = 0;
    const std::uint64_t row_seed = DeriveSeed(seed, n);
    for (std::size_t i = 0; i < samples; ++i) {
      SamplerConfig cfg{2, n, SampleMode::kCyclicallyReduced,
                        DeriveSeed(row_seed, i)};
      const Word v = Sample(cfg);
      const Decision d = Decide(fixed, v, InputMode::kCyclicallyReduced);
      letters.push_back(static_cast<double>(d.letters_read));
      steps += static_cast<double>(d.minimize_steps);
      const auto ns = static_cast<double>(d.wall_time.count());
      wall += ns;
      if (d.path == DecisionPath::kFastReject) {
        fast += 1;
        fast_ns += ns;
        fast_letters += static_cast<double>(d.letters_read);
      }
    }
    DeciderBenchRow row;
    row.n = n;
    row.samples = samples;
    row.mean_letters = Mean(letters);
    std::sort(letters.begin(), letters.end());
    row.median_letters = Median(letters);
    row.p99_letters = Quantile(letters, 0.99);
    const auto count = static_cast<double>(samples);
    row.frac_fast_reject = fast / count;
    row.mean_min_steps = steps / count;
    row.mean_wall_ns = wall / count;
    report.rows.push_back(row);
  }
  report.c_estimate_ns_per_letter =
      fast_letters > 0 ? fast_ns / fast_letters : 0.0;
  return report;
}

std::string DeciderBenchReport::ToJson() const {
  nlohmann::ordered_json j;
  j["config"] = {{"u", u},
                 {"n", n_values},
                 {"samples", samples},
                 {"seed", seed},
                 {"input_mode", "cyclically_reduced"},
                 {"blocking_pattern", blocking_pattern}};
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"n", r.n},
                         {"samples", r.samples},
                         {"mean_letters", r.mean_letters},
                         {"median_letters", r.median_letters},
                         {"p99_letters", r.p99_letters},
                         {"frac_fast_reject", r.frac_fast_reject},
                         {"mean_min_steps", r.mean_min_steps},
                         {"mean_wall_ns", r.mean_wall_ns}});
  }
  j["predicted_e0"] = predicted_e0;
  j["crossover_n"] = crossover_n;
  j["c_estimate_ns_per_letter"] = c_estimate_ns_per_letter;
  return j.dump(2);
}

std::string DeciderBenchReport::ToCsv() const {
  std::ostringstream out;
  out.precision(10);
  out << "n,samples,mean_letters,median_letters,p99_letters,frac_fast_reject,"
         "mean_min_steps,mean_wall_ns\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.samples << ',' << r.mean_letters << ','
        << r.median_letters << ',' << r.p99_letters << ','
        << r.frac_fast_reject << ',' << r.mean_min_steps << ','
        << r.mean_wall_ns << '\n';
  }
  return out.str();
}

CyclicReduceBenchReport RunCyclicReduceBench(
    int rank, std::span<const std::size_t> n_values, std::size_t samples,
    std::uint64_t seed) {
  CheckBenchArgs(n_values, samples);
  CyclicReduceBenchReport report;
  report.rank = rank;
  report.n_values.assign(n_values.begin(), n_values.end());
  report.samples = samples;
  report.seed = seed;
  const double q = 1.0 / (2 * rank - 1);
  report.model_mean_rounds = rank >= 2 ? (1.0 / (2 * rank)) / (1.0 - q) : 0;

  for (std::size_t n : n_values) {
    CyclicReduceBenchRow row;
    row.n = n;
    row.samples = samples;
    double rounds = 0;
    double nonzero = 0;
    double wall = 0;
    const std::uint64_t row_seed = DeriveSeed(seed, n);
    for (std::size_t i = 0; i < samples; ++i) {
      SamplerConfig cfg{rank, n, SampleMode::kFreelyReduced,
                        DeriveSeed(row_seed, i)};
      const Word v = Sample(cfg);
      const auto t0 = std::chrono::steady_clock::now();
      const CoreSpan core = FindCyclicCore(v.letters());
      const auto t1 = std::chrono::steady_clock::now();
      wall += static_cast<double>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count());
      rounds += core.rounds;
      if (core.rounds > 0) nonzero += 1;
      row.max_rounds = std::max(row.max_rounds, core.rounds);
    }
    const auto count = static_cast<double>(samples);
    row.mean_rounds = rounds / count;
    row.frac_nonzero = nonzero / count;
    row.mean_wall_ns = wall / count;
    report.rows.push_back(row);
  }
  return report;
}

std::string CyclicReduceBenchReport::ToJson() const {
  nlohmann::ordered_json j;
  j["config"] = {{"rank", rank},
                 {"n", n_values},
                 {"samples", samples},
                 {"seed", seed},
                 {"input_mode", "freely_reduced"}};
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"n", r.n},
                         {"samples", r.samples},
                         {"mean_rounds", r.mean_rounds},
                         {"frac_nonzero", r.frac_nonzero},
                         {"max_rounds", r.max_rounds},
                         {"mean_wall_ns", r.mean_wall_ns}});
  }
  j["model_mean_rounds"] = model_mean_rounds;
  return j.dump(2);
}

std::string CyclicReduceBenchReport::ToCsv() const {
  std::ostringstream out;
  out.precision(10);
  out << "n,samples,mean_rounds,frac_nonzero,max_rounds,mean_wall_ns\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.samples << ',' << r.mean_rounds << ','
        << r.frac_nonzero << ',' << r.max_rounds << ',' << r.mean_wall_ns
        << '\n';
  }
  return out.str();
}

}  // namespace whitehead
