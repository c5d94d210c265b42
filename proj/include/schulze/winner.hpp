#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "schulze/core.hpp"
#include "schulze/maxmin.hpp"
#include "schulze/rng.hpp"

/// The randomized winner algorithms: quickselect over maxmin-path pivoting,
/// the all-maximal-elements loop, and the exact-integer perturbation
/// tiebreak. Expected O(m^2 log m) per election.
namespace schulze {

namespace detail {

template <typename OnRound>
ElectionResult quickselect_loop(const WeightedDigraph& g, const WeightedDigraph& g_reversed,
                                std::uint64_t seed, const std::vector<int>& initial,
                                OnRound&& on_round) {
  if (initial.empty()) throw std::invalid_argument("initial candidate set must not be empty");

  SplitMix64 rng(seed);
  std::vector<int> s(initial);
  ElectionResult result;
  result.seed = seed;

  while (s.size() > 1) {
    const int p = s[static_cast<std::size_t>(rng.below(s.size()))];
    PivotPartition part = pivot_partition_pretransposed(g, g_reversed, p, s);
    ++result.iterations;
    std::size_t previous = s.size();
    s = part.high.empty() ? std::vector<int>{p} : std::move(part.high);
    if (s.size() >= previous)
      throw std::logic_error("pivot round failed to shrink the candidate set");
    on_round(p, s);
  }

  // The survivor is maximal among `initial`. One more partition, against the
  // whole initial set, decides uniqueness: sets discarded in earlier rounds
  // may still hold candidates incomparable to the survivor.
  const int winner = s.front();
  PivotPartition final_part = pivot_partition_pretransposed(g, g_reversed, winner, initial);
  if (!final_part.high.empty())
    throw std::logic_error("uniqueness check found a candidate above the selected winner");
  result.winner = winner;
  result.is_unique =
      final_part.incomparable.size() == 1 && final_part.incomparable.front() == winner;
  return result;
}

struct NoRoundTrace {
  void operator()(int, const std::vector<int>&) const {}
};

inline std::vector<int> all_indices(const WeightedDigraph& g) {
  std::vector<int> s(static_cast<std::size_t>(g.size()));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace detail

/// Select a maximal element of the Schulze order restricted to `initial`
/// (default: every candidate), and report whether it is the unique one.
///
/// Each round draws a uniform pivot p from the surviving set, partitions the
/// survivors against p using full-graph maxmin paths, and keeps the
/// candidates above p (or p itself when nothing is). Identical seed and
/// input reproduce identical pivots, winner and iteration count. on_round,
/// when given, observes (pivot, surviving set) after each round.
template <typename OnRound = detail::NoRoundTrace>
ElectionResult quickselect_winner(const WeightedDigraph& g, std::uint64_t seed,
                                  const std::vector<int>& initial, OnRound&& on_round = {}) {
  return detail::quickselect_loop(g, g.transposed(), seed, initial, on_round);
}

inline ElectionResult quickselect_winner(const WeightedDigraph& g, std::uint64_t seed) {
  return quickselect_winner(g, seed, detail::all_indices(g));
}

/// All maximal elements of the Schulze order, in discovery order, each with
/// the iteration count of the quickselect call that found it. Runs one
/// election per maximal element on the shrinking set of candidates not yet
/// below a discovered winner; round k draws its seed from derive_seed(seed, k).
inline MaximalSet all_maximal(const WeightedDigraph& g, std::uint64_t seed) {
  const WeightedDigraph g_reversed = g.transposed();
  std::vector<int> remaining = detail::all_indices(g);
  MaximalSet out;
  for (std::uint64_t round = 0; !remaining.empty(); ++round) {
    ElectionResult r = detail::quickselect_loop(g, g_reversed, derive_seed(seed, round),
                                                remaining, detail::NoRoundTrace{});
    out.members.push_back(r.winner);
    out.rounds.push_back(r.iterations);

    PivotPartition part =
        detail::pivot_partition_pretransposed(g, g_reversed, r.winner, remaining);
    if (!part.high.empty())
      throw std::logic_error("candidate above a reported maximal element");
    remaining.clear();
    for (int v : part.incomparable)
      if (v != r.winner) remaining.push_back(v);
  }
  return out;
}

/// Tiebreak perturbation: scale every margin by m^2 and add a distinct rank
/// from a seed-derived uniform random shuffle of the m(m-1) directed edges
/// (1-based position in the shuffle). All resulting weights are distinct, so
/// the perturbed graph always has a unique winner, and because each rank is
/// below m^2 the perturbed Schulze order agrees with the unperturbed one on
/// every comparable pair. Exact integer arithmetic throughout; margins whose
/// scaled value would leave the 64-bit range raise OverflowError.
inline WeightedDigraph perturb(const MarginMatrix& margins, std::uint64_t seed) {
  const int m = margins.size();
  const std::int64_t scale = static_cast<std::int64_t>(m) * m;

  std::int64_t max_abs = 0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const std::int64_t w = margins.margin(x, y);
      const std::int64_t a = w < 0 ? -w : w;
      if (a > max_abs) max_abs = a;
    }
  if (max_abs > (std::numeric_limits<std::int64_t>::max() - scale) / scale)
    throw OverflowError("margin magnitude " + std::to_string(max_abs) +
                        " cannot be scaled by m^2 = " + std::to_string(scale) +
                        " without leaving the 64-bit range");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y) edges.emplace_back(x, y);
  SplitMix64 rng(seed);
  shuffle(edges, rng);

  std::vector<std::int64_t> w(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  std::int64_t position = 1;
  for (auto [x, y] : edges) {
    w[static_cast<std::size_t>(x) * m + y] = margins.margin(x, y) * scale + position;
    ++position;
  }
  return WeightedDigraph(margins.candidates(), std::move(w));
}

}  // namespace schulze
