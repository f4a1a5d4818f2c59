#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "whitehead/automorphism.h"
#include "whitehead/bench.h"
#include "whitehead/blocking.h"
#include "whitehead/decider.h"
#include "whitehead/error.h"
#include "whitehead/langcount.h"
#include "whitehead/minimize.h"
#include "whitehead/oracle.h"
#include "whitehead/sampler.h"
#include "whitehead/word.h"

namespace whitehead::cli {

namespace {

using Record = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

struct Options {
  int rank = 2;
  std::string format = "text";

  // Word arguments.
  std::string w, u, v, pattern, text;
  bool general = false;
  bool cyclic_scan = false;

  // sample / count / bench
  std::size_t n = 1;
  std::string mode = "free";
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::vector<std::size_t> n_list;
  std::size_t samples = 2000;
  std::string out_path;
  std::string csv_path;

  std::size_t max_length = 0;
  std::size_t cap = kDefaultBallCap;
};

Format ParseFormat(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

std::string ScalarText(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(12) << v.get<double>();
    return s.str();
  }
  return v.dump();
}

std::string CsvCell(const Record& v) {
  std::string s = ScalarText(v);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

// Prints a flat record: `k=v k=v`, a JSON object, or a CSV header + row.
void Emit(const Record& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::kJson:
      out << r.dump(2) << "\n";
      return;
    case Format::kCsv: {
      bool first = true;
      for (const auto& [k, v] : r.items()) {
        out << (first ? "" : ",") << k;
        first = false;
      }
      out << "\n";
      first = true;
      for (const auto& [k, v] : r.items()) {
        out << (first ? "" : ",") << CsvCell(v);
        first = false;
      }
      out << "\n";
      return;
    }
    case Format::kText: {
      bool first = true;
      for (const auto& [k, v] : r.items()) {
        out << (first ? "" : " ") << k << "=" << ScalarText(v);
        first = false;
      }
      out << "\n";
      return;
    }
  }
}

Record BigIntValue(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) {
    return Record(x.convert_to<std::uint64_t>());
  }
  return Record(x.str());
}

void RequireRankTwo(const Options& o, const std::string& command) {
  if (o.rank != 2) {
    throw Error(ErrorKind::kDomain,
                command + " supports rank 2 only (got --rank " +
                    std::to_string(o.rank) + ")");
  }
}

void RequireArg(const std::string& value, const std::string& flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
}

// Orbit tables are cached as <dir>/orbit-r<rank>-<u>.txt when
// WHITEHEAD_CACHE_DIR is set. Unreadable or stale entries are rebuilt.
FixedU PrepareCached(const Word& u) {
  const char* dir = std::getenv("WHITEHEAD_CACHE_DIR");
  if (dir == nullptr || *dir == '\0' || u.empty()) return FixedU::Prepare(u);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / ("orbit-r" + std::to_string(u.rank()) +
                                         "-" + u.ToString() + ".txt");
  if (std::ifstream in(path); in) {
    try {
      OrbitTable table = OrbitTable::Deserialize(in);
      if (table.source() == u) return FixedU::FromTable(std::move(table));
    } catch (const Error&) {
    }
  }
  FixedU fixed = FixedU::Prepare(u);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (std::ofstream out(path); out) fixed.table()->Serialize(out);
  return fixed;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

int RunReduce(const Options& o, Format f, std::ostream& out) {
  RequireArg(o.w, "--w");
  const Word w = ParseWord(o.w, o.rank);
  const CyclicReduction c = CyclicReduceDeque(w);
  const ExponentStats stats = ComputeExponentStats(w);
  Record r;
  r["word"] = w.ToString();
  r["length"] = w.size();
  r["core"] = c.core.ToString();
  r["conjugator"] = c.conjugator.ToString();
  r["rounds"] = c.rounds;
  r["canonical"] = CanonicalCyclic(w).ToString();
  for (int g = 1; g <= w.rank(); ++g) {
    const char name = Letter(g, 1).ToChar();
    r[std::string("m_") + name] = stats.Linear(g);
    r[std::string("mc_") + name] = stats.Cyclic(g);
  }
  Emit(r, f, out);
  return kExitOk;
}

int RunMinimize(const Options& o, Format f, std::ostream& out) {
  RequireArg(o.w, "--w");
  const Word w = ParseWord(o.w, o.rank);
  const MinimizeResult m = MinimizeCyclic(CanonicalCyclic(w));
  const auto& moves = WhiteheadMoves(o.rank);
  Record r;
  r["minimized"] = m.word.ToString();
  r["length"] = m.word.size();
  r["steps"] = m.trace.steps.size();
  r["move_applications"] = m.trace.move_applications;
  if (f == Format::kJson) {
    Record trace = Record::array();
    for (const auto& step : m.trace.steps) {
      trace.push_back({{"move", moves[step.move_index].ToString()},
                       {"length", step.length}});
    }
    r["trace"] = trace;
  }
  Emit(r, f, out);
  return kExitOk;
}

int RunDecide(const Options& o, Format f, std::ostream& out) {
  RequireRankTwo(o, "decide");
  RequireArg(o.u, "--u");
  RequireArg(o.v, "--v");
  const Word u = ParseWord(o.u, 2);
  const Word v = ParseWord(o.v, 2);
  const FixedU fixed = PrepareCached(u);
  const Decision d = Decide(
      fixed, v, o.general ? InputMode::kGeneral : InputMode::kCyclicallyReduced,
      o.cyclic_scan ? ScanMode::kCyclic : ScanMode::kLinear);
  Record r;
  r["in_orbit"] = d.in_orbit;
  r["path"] = std::string(DecisionPathName(d.path));
  r["letters_read"] = d.letters_read;
  if (f != Format::kText) {
    r["minimize_steps"] = d.minimize_steps;
    r["cyclic_rounds"] = d.cyclic_rounds;
    r["wall_ns"] = d.wall_time.count();
  }
  Emit(r, f, out);
  return kExitOk;
}

int RunBlocking(const Options& o, Format f, std::ostream& out) {
  RequireRankTwo(o, "blocking");
  RequireArg(o.u, "--u");
  const BlockingWord b = MakeBlockingWord(ParseWord(o.u, 2));
  if (f == Format::kText) {
    out << ToPowerString(b.pattern) << "\n";
    return kExitOk;
  }
  Record r;
  r["pattern"] = ToPowerString(b.pattern);
  r["length"] = b.pattern.size();
  r["source_length"] = b.source_length;
  Emit(r, f, out);
  return kExitOk;
}

int RunScan(const Options& o, Format f, std::ostream& out) {
  RequireArg(o.pattern, "--pattern");
  const Word pattern = ParseWord(o.pattern, o.rank);
  const Word text = ParseWord(o.text, o.rank);
  StreamMatcher matcher(pattern);
  const ScanResult s = ScanStream(matcher, text);
  Record r;
  r["found_at"] = s.found_at ? Record(*s.found_at) : Record("none");
  r["letters_read"] = s.letters_read;
  Emit(r, f, out);
  return kExitOk;
}

int RunSample(const Options& o, Format f, std::ostream& out) {
  WordSampler sampler({o.rank, o.n, ParseSampleMode(o.mode), o.seed});
  std::vector<std::string> words;
  for (std::size_t i = 0; i < o.count; ++i) {
    words.push_back(sampler.Next().ToString());
  }
  if (f == Format::kJson) {
    out << Record(words).dump(2) << "\n";
    return kExitOk;
  }
  if (f == Format::kCsv) out << "word\n";
  for (const auto& w : words) out << w << "\n";
  return kExitOk;
}

int RunCount(const Options& o, Format f, std::ostream& out) {
  const int n = static_cast<int>(o.n);
  BigInt value;
  if (o.mode == "free") {
    value = CountFreelyReduced(o.rank, n);
  } else if (o.mode == "cyclic") {
    value = CountCyclicallyReduced(o.rank, n);
  } else if (o.mode == "avoid") {
    RequireArg(o.pattern, "--pattern");
    value = CountAvoiding(o.rank, ParseWord(o.pattern, o.rank), n);
  } else {
    throw CLI::ValidationError("--mode", "expected free, cyclic or avoid");
  }
  if (f == Format::kText) {
    out << value.str() << "\n";
    return kExitOk;
  }
  Record r;
  r["mode"] = o.mode;
  r["rank"] = o.rank;
  r["n"] = o.n;
  if (o.mode == "avoid") r["pattern"] = o.pattern;
  r["count"] = BigIntValue(value);
  Emit(r, f, out);
  return kExitOk;
}

int RunGrowth(const Options& o, Format f, std::ostream& out) {
  RequireArg(o.pattern, "--pattern");
  const Word pattern = ParseWord(o.pattern, o.rank);
  const GrowthEstimate g = GrowthRate(o.rank, pattern);
  Record r;
  r["lambda"] = g.lambda;
  r["s"] = g.s;
  r["e0"] = ExpectedFirstOccurrence(o.rank, pattern);
  r["iterations"] = g.iterations;
  r["residual"] = g.residual;
  Emit(r, f, out);
  return kExitOk;
}

int RunOracle(const Options& o, Format f, std::ostream& out) {
  RequireArg(o.u, "--u");
  RequireArg(o.v, "--v");
  const Word u = ParseWord(o.u, o.rank);
  const Word v = ParseWord(o.v, o.rank);
  const CyclicWord cu = CanonicalCyclic(u);
  const CyclicWord cv = CanonicalCyclic(v);
  std::size_t radius = std::max(cu.size(), cv.size());
  radius = o.max_length == 0 ? radius + 2 : std::max(radius, o.max_length);
  const OrbitBall ball = ComputeOrbitBall(cu, radius, o.cap);
  Record r;
  r["answer"] = std::string(OracleAnswerName(OracleDecide(ball, v)));
  r["max_length"] = radius;
  r["ball_size"] = ball.members.size();
  r["saturated"] = ball.saturated;
  Emit(r, f, out);
  return kExitOk;
}

void EmitBenchSummary(const DeciderBenchReport& rep, std::ostream& out) {
  out << "u=" << rep.u << " blocking=" << rep.blocking_pattern
      << " predicted_e0=" << rep.predicted_e0
      << " crossover_n=" << rep.crossover_n << "\n";
  out << rep.ToCsv();
}

int RunBenchDecider(const Options& o, Format f, std::ostream& out) {
  RequireRankTwo(o, "bench decider");
  RequireArg(o.u, "--u");
  const Word u = ParseWord(o.u, 2);
  const DeciderBenchReport rep =
      RunDeciderBench(u, o.n_list, o.samples, o.seed);
  if (!o.out_path.empty()) WriteFile(o.out_path, rep.ToJson() + "\n");
  if (!o.csv_path.empty()) WriteFile(o.csv_path, rep.ToCsv());
  if (f == Format::kJson) {
    out << rep.ToJson() << "\n";
  } else if (f == Format::kCsv) {
    out << rep.ToCsv();
  } else {
    EmitBenchSummary(rep, out);
  }
  return kExitOk;
}

int RunBenchCyclic(const Options& o, Format f, std::ostream& out) {
  const CyclicReduceBenchReport rep =
      RunCyclicReduceBench(o.rank, o.n_list, o.samples, o.seed);
  if (!o.out_path.empty()) WriteFile(o.out_path, rep.ToJson() + "\n");
  if (!o.csv_path.empty()) WriteFile(o.csv_path, rep.ToCsv());
  if (f == Format::kJson) {
    out << rep.ToJson() << "\n";
  } else {
    if (f == Format::kText) {
      out << "rank=" << rep.rank
          << " model_mean_rounds=" << rep.model_mean_rounds << "\n";
    }
    out << rep.ToCsv();
  }
  return kExitOk;
}

void ReportError(std::ostream& err, std::string_view kind,
                 const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << kind << ": " << line << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Whitehead orbit decisions in free groups", "whitehead"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--rank", o.rank, "Rank of the free group")
      ->check(CLI::Range(1, kMaxLetterRank));
  app.add_option("--format", o.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* reduce = app.add_subcommand(
      "reduce", "Free/cyclic reduction, canonical form and exponent stats");
  reduce->add_option("--w", o.w, "Word")->required();

  auto* minimize = app.add_subcommand(
      "minimize", "Whitehead-minimize the cyclic reduction of a word");
  minimize->add_option("--w", o.w, "Word")->required();

  auto* decide = app.add_subcommand(
      "decide", "Is v an automorphic image of u? (rank 2)");
  decide->add_option("--u", o.u, "Fixed word u")->required();
  decide->add_option("--v", o.v, "Input word v")->required();
  decide->add_flag("--general", o.general,
                   "Accept non-cyclically-reduced v (deque reduction first)");
  decide->add_flag("--cyclic-scan", o.cyclic_scan,
                   "Also reject on blocking occurrences that wrap around");

  auto* blocking =
      app.add_subcommand("blocking", "Print the orbit-blocking word of u");
  blocking->add_option("--u", o.u, "Word u")->required();

  auto* scan = app.add_subcommand(
      "scan", "Stream a text through the pattern matcher");
  scan->add_option("--pattern", o.pattern, "Pattern word")->required();
  scan->add_option("--text", o.text, "Text word")->required();

  auto* sample = app.add_subcommand("sample", "Uniform random words");
  sample->add_option("--n", o.n, "Word length")->required()->check(
      CLI::PositiveNumber);
  sample->add_option("--mode", o.mode, "free or cyclic")
      ->check(CLI::IsMember(
          {"free", "cyclic", "freely_reduced", "cyclically_reduced"}));
  sample->add_option("--count", o.count, "Number of words");
  sample->add_option("--seed", o.seed, "RNG seed");

  auto* count = app.add_subcommand("count", "Exact word counts");
  count->add_option("--mode", o.mode, "free, cyclic or avoid")
      ->check(CLI::IsMember({"free", "cyclic", "avoid"}));
  count->add_option("--pattern", o.pattern, "Forbidden subword (avoid)");
  count->add_option("--n", o.n, "Word length")->required();

  auto* growth = app.add_subcommand(
      "growth", "Growth rate of words avoiding a pattern");
  growth->add_option("--pattern", o.pattern, "Forbidden subword")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force orbit membership on small words");
  oracle->add_option("--u", o.u, "Word u")->required();
  oracle->add_option("--v", o.v, "Word v")->required();
  oracle->add_option("--max-length", o.max_length,
                     "Ball radius (default max(|u|,|v|)+2)");
  oracle->add_option("--cap", o.cap, "Ball size cap");

  auto* bench = app.add_subcommand("bench", "Average-case cost harness");
  bench->require_subcommand(1);
  auto* bench_decider = bench->add_subcommand(
      "decider", "Decision cost on uniform cyclically reduced inputs");
  bench_decider->add_option("--u", o.u, "Fixed word u")->required();
  bench_decider->add_option("--n", o.n_list, "Comma-separated lengths")
      ->required()
      ->delimiter(',');
  bench_decider->add_option("--samples", o.samples, "Samples per length");
  bench_decider->add_option("--seed", o.seed, "RNG seed");
  bench_decider->add_option("--out", o.out_path, "JSON report path");
  bench_decider->add_option("--csv", o.csv_path, "CSV report path");
  auto* bench_cyclic = bench->add_subcommand(
      "cyclic", "Deque cyclic-reduction rounds on uniform freely reduced words");
  bench_cyclic->add_option("--n", o.n_list, "Comma-separated lengths")
      ->required()
      ->delimiter(',');
  bench_cyclic->add_option("--samples", o.samples, "Samples per length");
  bench_cyclic->add_option("--seed", o.seed, "RNG seed");
  bench_cyclic->add_option("--out", o.out_path, "JSON report path");
  bench_cyclic->add_option("--csv", o.csv_path, "CSV report path");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ReportError(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    const Format f = ParseFormat(o.format);
    if (*reduce) return RunReduce(o, f, out);
    if (*minimize) return RunMinimize(o, f, out);
    if (*decide) return RunDecide(o, f, out);
    if (*blocking) return RunBlocking(o, f, out);
    if (*scan) return RunScan(o, f, out);
    if (*sample) return RunSample(o, f, out);
    if (*count) return RunCount(o, f, out);
    if (*growth) return RunGrowth(o, f, out);
    if (*oracle) return RunOracle(o, f, out);
    if (*bench_decider) return RunBenchDecider(o, f, out);
    if (*bench_cyclic) return RunBenchCyclic(o, f, out);
  } catch (const Error& e) {
    ReportError(err, ErrorKindName(e.kind()), e.what());
    switch (e.kind()) {
      case ErrorKind::kParse:
        return kExitParse;
      case ErrorKind::kCapExceeded:
        return kExitCap;
      default:
        return kExitUsage;
    }
  } catch (const CLI::Error& e) {
    ReportError(err, "usage", e.what());
    return kExitUsage;
  }
  ReportError(err, "usage", "no subcommand given");
  return kExitUsage;
}

}  // namespace whitehead::cli
