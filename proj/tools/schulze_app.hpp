#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schulze/schulze.hpp"

/// The `schulze` command-line tool, exposed as a callable so tests can drive
/// it in-process. Subcommands:
///
///   tally      ballots -> margin matrix CSV
///   winner     matrix or ballots -> quickselect winner (optionally the full
///              maximal set, optionally after perturbation)
///   beatpaths  matrix -> all-pairs beatpath strength CSV
///   gen        synthetic instances: mcgarvey | realize | random
///   bench      timing/iteration CSV for quickselect vs the cubic algorithm
///
/// Exit codes: 0 success, 2 input error, 3 numeric-range error.
namespace schulze::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

inline std::string format_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

inline std::string format_mean(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> names;
  for (std::string_view part : schulze::detail::split(csv, ','))
    names.emplace_back(schulze::detail::trim(part));
  return names;
}

/// Candidate names either from --candidates or scanned from the ballot text.
inline CandidateSet ballot_candidates(const std::string& text, const std::string& candidates_flag) {
  if (!candidates_flag.empty()) return CandidateSet(split_names(candidates_flag));
  std::vector<std::string> names = scan_candidate_names(text);
  if (names.empty())
    throw std::runtime_error("ballot file names no candidates; pass --candidates");
  return CandidateSet(std::move(names));
}

/// Margin matrix from a path holding either matrix CSV or a ballot file.
inline MarginMatrix load_margins(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_matrix_csv(text)) return parse_margin_csv(text);
  return aggregate(parse_ballots(text, ballot_candidates(text, "")));
}

/// The complete linear-order benchmark instance: candidate i beats candidate
/// j by one vote whenever i < j, so the Schulze order is c0 > c1 > ... and
/// quickselect's iteration count follows the harmonic-number analysis.
inline WeightedDigraph linear_order_instance(int m) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));
  WeightedDigraph g{CandidateSet(std::move(names))};
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      g.set_weight(x, y, 1);
      g.set_weight(y, x, -1);
    }
  return g;
}

struct WinnerFlags {
  std::string input;
  bool perturb = false;
  bool all_maximal = false;
};

inline int cmd_winner(const WinnerFlags& flags, std::uint64_t seed, bool json, std::ostream& out) {
  const MarginMatrix margins = load_margins(flags.input);
  const WeightedDigraph g = flags.perturb ? perturb(margins, seed) : margins.graph();
  const CandidateSet& cs = g.candidates();

  int winner = -1;
  bool unique = false;
  std::int64_t iterations = 0;
  std::vector<int> maximal;
  if (flags.all_maximal) {
    const MaximalSet mx = all_maximal(g, seed);
    maximal = mx.members;
    winner = mx.members.front();
    unique = mx.members.size() == 1;
    for (int rounds : mx.rounds) iterations += rounds;
  } else {
    const ElectionResult r = quickselect_winner(g, seed);
    winner = r.winner;
    unique = r.is_unique;
    iterations = r.iterations;
  }

  if (json) {
    nlohmann::ordered_json j;
    j["winner"] = cs.name(winner);
    j["unique"] = unique;
    j["iterations"] = iterations;
    j["seed"] = seed;
    if (flags.all_maximal) {
      auto names = nlohmann::ordered_json::array();
      for (int v : maximal) names.push_back(cs.name(v));
      j["maximal"] = std::move(names);
    }
    out << j.dump() << '\n';
  } else {
    out << "winner: " << cs.name(winner) << '\n';
    out << "unique: " << (unique ? "true" : "false") << '\n';
    out << "iterations: " << iterations << '\n';
    out << "seed: " << seed << '\n';
    if (flags.all_maximal) {
      out << "maximal:";
      for (int v : maximal) out << ' ' << cs.name(v);
      out << '\n';
    }
  }
  return 0;
}

struct RealizeFlags {
  std::string input;
  std::string top;
  std::string bottom;
};

inline int cmd_gen_realize(const RealizeFlags& flags, std::ostream& out) {
  const auto pairs = parse_order_pairs(read_file(flags.input));
  std::vector<std::string> names;
  for (const auto& [lo, hi] : pairs) {
    names.push_back(lo);
    names.push_back(hi);
  }
  if (!flags.top.empty()) names.push_back(flags.top);
  if (!flags.bottom.empty()) names.push_back(flags.bottom);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty()) throw std::runtime_error("order file lists no candidates");

  const CandidateSet candidates{names};
  const PartialOrderSpec spec = build_partial_order(pairs, candidates);

  int top, bottom;
  if (!flags.top.empty()) {
    top = candidates.index_of(flags.top);  // valid: flags.top was added to names
  } else {
    const std::vector<int> tops = maximal_elements(spec);
    if (tops.size() != 1)
      throw std::runtime_error("order has no unique top; pass --top or add constraints");
    top = tops.front();
  }
  if (!flags.bottom.empty()) {
    bottom = candidates.index_of(flags.bottom);
  } else {
    const std::vector<int> bottoms = minimal_elements(spec);
    if (bottoms.size() != 1)
      throw std::runtime_error("order has no unique bottom; pass --bottom or add constraints");
    bottom = bottoms.front();
  }

  out << write_matrix_csv(realize_partial_order(spec, top, bottom));
  return 0;
}

struct BenchFlags {
  std::vector<int> ms;
  int trials = 10;
  std::string algo = "quickselect";
};

inline int cmd_bench(const BenchFlags& flags, std::uint64_t seed, std::ostream& out) {
  out << "row,m,algo,trial,seconds,iterations\n";
  for (const int m : flags.ms) {
    const WeightedDigraph g = linear_order_instance(m);
    const std::uint64_t m_seed = derive_seed(seed, static_cast<std::uint64_t>(m));
    std::vector<double> seconds;
    std::vector<std::int64_t> iterations;
    for (int trial = 0; trial < flags.trials; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      std::int64_t iters = 0;
      if (flags.algo == "quickselect") {
        const ElectionResult r = quickselect_winner(g, derive_seed(m_seed, static_cast<std::uint64_t>(trial)));
        iters = r.iterations;
      } else {
        const BeatpathMatrix b = floyd_warshall_beatpaths(g);
        iters = 0;
        // Keep the result alive past the clock read so it cannot be elided.
        if (b.size() != m) throw std::logic_error("benchmark result has wrong size");
      }
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      seconds.push_back(elapsed.count());
      iterations.push_back(iters);
      out << "trial," << m << ',' << flags.algo << ',' << trial << ','
          << format_seconds(elapsed.count()) << ',' << iters << '\n';
    }

    const auto mean = [](const auto& v) {
      double total = 0;
      for (auto x : v) total += static_cast<double>(x);
      return total / static_cast<double>(v.size());
    };
    const auto median = [](auto v) {
      std::sort(v.begin(), v.end());
      const std::size_t n = v.size();
      return n % 2 == 1 ? static_cast<double>(v[n / 2])
                        : (static_cast<double>(v[n / 2 - 1]) + static_cast<double>(v[n / 2])) / 2.0;
    };
    out << "mean," << m << ',' << flags.algo << ",," << format_seconds(mean(seconds)) << ','
        << format_mean(mean(iterations)) << '\n';
    out << "median," << m << ',' << flags.algo << ",," << format_seconds(median(seconds)) << ','
        << format_mean(median(iterations)) << '\n';
  }
  return 0;
}

}  // namespace detail

/// Run the CLI on `args` (without the program name), writing to the given
/// streams. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schulze election engine: beatpath winners from ballots or margin matrices"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool json = false;
  app.add_option("--seed", seed, "RNG seed for pivot selection and generators (default 0)");
  app.add_flag("--json", json, "emit results as a JSON object where supported");

  std::string tally_input;
  std::string tally_candidates;
  auto* tally = app.add_subcommand("tally", "aggregate a ballot file into a margin matrix CSV");
  tally->fallthrough();
  tally->add_option("ballots", tally_input, "ballot file path")->required();
  tally->add_option("--candidates", tally_candidates,
                    "comma-separated candidate names (default: names appearing in ballots)");

  detail::WinnerFlags winner_flags;
  auto* winner = app.add_subcommand("winner", "elect a Schulze winner by randomized quickselect");
  winner->fallthrough();
  winner->add_option("input", winner_flags.input, "margin matrix CSV or ballot file")->required();
  winner->add_flag("--perturb", winner_flags.perturb,
                   "break ties first by rank-perturbing the weights (always yields a unique winner)");
  winner->add_flag("--all-maximal", winner_flags.all_maximal,
                   "report every maximal candidate, not just one winner");

  std::string beatpaths_input;
  auto* beatpaths = app.add_subcommand("beatpaths", "print all-pairs beatpath strengths as CSV");
  beatpaths->fallthrough();
  beatpaths->add_option("input", beatpaths_input, "margin matrix CSV path")->required();

  auto* gen = app.add_subcommand("gen", "generate synthetic instances");
  gen->fallthrough();
  gen->require_subcommand(1);

  std::string mcgarvey_input;
  bool auto_double = false;
  auto* mcgarvey = gen->add_subcommand(
      "mcgarvey", "ballots whose pairwise margins equal a given matrix exactly");
  mcgarvey->fallthrough();
  mcgarvey->add_option("matrix", mcgarvey_input, "target margin matrix CSV")->required();
  mcgarvey->add_flag("--auto-double", auto_double,
                     "double all margins first when any margin is odd");

  detail::RealizeFlags realize_flags;
  auto* realize = gen->add_subcommand(
      "realize", "margin matrix whose Schulze order equals a given partial order");
  realize->fallthrough();
  realize->add_option("order", realize_flags.input, "order file: one 'x < y' per line")->required();
  realize->add_option("--top", realize_flags.top, "unique top candidate (default: inferred)");
  realize->add_option("--bottom", realize_flags.bottom, "unique bottom candidate (default: inferred)");

  int random_m = 0;
  std::int64_t random_max_weight = 0;
  auto* random = gen->add_subcommand("random", "uniform random antisymmetric margin matrix");
  random->fallthrough();
  random->add_option("--m", random_m, "number of candidates")->required()->check(CLI::Range(1, 1 << 20));
  random->add_option("--max-weight", random_max_weight, "weights drawn uniformly from [-W, W]")
      ->required()
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));

  detail::BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "time quickselect or the cubic algorithm on linear orders");
  bench->fallthrough();
  bench->add_option("--m", bench_flags.ms, "comma-separated candidate counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(2, 1 << 20));
  bench->add_option("--trials", bench_flags.trials, "trials per size (default 10)")
      ->check(CLI::Range(1, 1 << 20));
  bench->add_option("--algo", bench_flags.algo, "quickselect (default) or oracle")
      ->check(CLI::IsMember({"quickselect", "oracle"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("schulze");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tally->parsed()) {
      const std::string text = detail::read_file(tally_input);
      const CandidateSet candidates = detail::ballot_candidates(text, tally_candidates);
      out << write_matrix_csv(aggregate(parse_ballots(text, candidates)));
      return 0;
    }
    if (winner->parsed()) return detail::cmd_winner(winner_flags, seed, json, out);
    if (beatpaths->parsed()) {
      out << write_beatpaths_csv(
          floyd_warshall_beatpaths(parse_margin_csv(detail::read_file(beatpaths_input)).graph()));
      return 0;
    }
    if (mcgarvey->parsed()) {
      MarginMatrix target = parse_margin_csv(detail::read_file(mcgarvey_input));
      bool odd = false;
      const int m = target.size();
      for (int x = 0; x < m && !odd; ++x)
        for (int y = x + 1; y < m && !odd; ++y) odd = target.margin(x, y) % 2 != 0;
      if (odd) {
        if (!auto_double)
          throw std::runtime_error(
              "matrix has odd margins, which no ballot multiset can realize exactly; "
              "pass --auto-double to scale every margin by 2 (order-preserving)");
        std::vector<std::int64_t> doubled = target.graph().weights();
        for (std::int64_t& w : doubled) {
          if (w > std::numeric_limits<std::int64_t>::max() / 2 ||
              w < std::numeric_limits<std::int64_t>::min() / 2)
            throw OverflowError("doubling margins overflows 64-bit weights");
          w *= 2;
        }
        err << "note: odd margins doubled (scale preserves the Schulze order)\n";
        target = MarginMatrix(target.candidates(), std::move(doubled));
      }
      out << write_ballots(mcgarvey_ballots(target, seed));
      return 0;
    }
    if (realize->parsed()) return detail::cmd_gen_realize(realize_flags, out);
    if (random->parsed()) {
      std::vector<std::string> names;
      names.reserve(static_cast<std::size_t>(random_m));
      for (int i = 0; i < random_m; ++i) names.push_back("c" + std::to_string(i));
      WeightedDigraph g{CandidateSet(std::move(names))};
      SplitMix64 rng(seed);
      for (int x = 0; x < random_m; ++x)
        for (int y = x + 1; y < random_m; ++y) {
          const std::int64_t w = rng.between(-random_max_weight, random_max_weight);
          g.set_weight(x, y, w);
          g.set_weight(y, x, -w);
        }
      out << write_matrix_csv(MarginMatrix(std::move(g)));
      return 0;
    }
    if (bench->parsed()) return detail::cmd_bench(bench_flags, seed, out);
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace schulze::cli
