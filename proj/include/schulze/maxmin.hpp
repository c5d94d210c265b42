#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schulze/core.hpp"

/// Single-source / single-destination maxmin-weight (widest) paths on a
/// complete digraph, and the pivot partition built from one pair of runs.
///
/// The path kernel is Dijkstra with bottleneck priorities and no heap: the
/// next vertex is found by a linear scan, which is optimal on dense graphs
/// (m scan rounds, Theta(m^2) work regardless of weights).
namespace schulze {

enum class PathDirection { FromSource, ToDestination };

/// Bottleneck strengths from (or to) one anchor vertex, for every vertex of
/// the graph. values[anchor] is +inf; every other entry is finite because
/// the graph is complete.
struct PriorityVector {
  int anchor = -1;
  PathDirection direction = PathDirection::FromSource;
  std::vector<BeatpathValue> values;
};

namespace detail {

struct NoTrace {
  void operator()(int, BeatpathValue) const {}
};

/// Scan-based maxmin Dijkstra over row(u)[v] edge weights.
///
/// Textbook form: every priority starts at -inf, the anchor at +inf, and
/// each round extracts the max-priority unprocessed vertex u (ties to the
/// lowest index) and relaxes priority[v] to max(old, min(beta, w(u,v))).
/// The anchor is always extracted first, and because the graph is complete
/// its round lifts every other vertex to the finite w(anchor, v); the loop
/// below keeps those finite priorities in a flat int64 array.
template <typename RowAt, typename OnExtract>
std::vector<BeatpathValue> scan_maxmin(int m, int anchor, RowAt row, OnExtract&& on_extract) {
  std::vector<BeatpathValue> values(static_cast<std::size_t>(m));
  values[static_cast<std::size_t>(anchor)] = BeatpathValue::pos_infinity();
  on_extract(anchor, BeatpathValue::pos_infinity());
  if (m == 1) return values;

  std::vector<std::int64_t> priority(static_cast<std::size_t>(m));
  std::vector<int> unprocessed;
  unprocessed.reserve(static_cast<std::size_t>(m) - 1);
  {
    const std::int64_t* wr = row(anchor);
    for (int v = 0; v < m; ++v) {
      if (v == anchor) continue;
      priority[static_cast<std::size_t>(v)] = wr[v];
      unprocessed.push_back(v);
    }
  }

  while (!unprocessed.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < unprocessed.size(); ++k) {
      const int v = unprocessed[k];
      const int u = unprocessed[best];
      const std::int64_t pv = priority[static_cast<std::size_t>(v)];
      const std::int64_t pu = priority[static_cast<std::size_t>(u)];
      if (pv > pu || (pv == pu && v < u)) best = k;
    }
    const int u = unprocessed[best];
    const std::int64_t beta = priority[static_cast<std::size_t>(u)];
    on_extract(u, BeatpathValue::finite(beta));
    unprocessed[best] = unprocessed.back();
    unprocessed.pop_back();

    const std::int64_t* wr = row(u);
    for (int v : unprocessed) {
      const std::int64_t through = wr[v] < beta ? wr[v] : beta;
      std::int64_t& pv = priority[static_cast<std::size_t>(v)];
      if (through > pv) pv = through;
    }
  }

  for (int v = 0; v < m; ++v)
    if (v != anchor)
      values[static_cast<std::size_t>(v)] =
          BeatpathValue::finite(priority[static_cast<std::size_t>(v)]);
  return values;
}

inline void check_vertex(const WeightedDigraph& g, int v, const char* what) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace detail

/// B(source, v) for every vertex v. on_extract, when given, observes each
/// scan round as (vertex, bottleneck priority) in extraction order.
template <typename OnExtract = detail::NoTrace>
PriorityVector single_source_maxmin(const WeightedDigraph& g, int source,
                                    OnExtract&& on_extract = {}) {
  detail::check_vertex(g, source, "source");
  PriorityVector out;
  out.anchor = source;
  out.direction = PathDirection::FromSource;
  out.values = detail::scan_maxmin(
      g.size(), source, [&g](int u) { return g.row(u); }, on_extract);
  return out;
}

/// B(v, destination) for every vertex v: the same scan on the edge-reversed
/// graph. The reversal is materialized so the hot loop stays row-contiguous.
template <typename OnExtract = detail::NoTrace>
PriorityVector single_destination_maxmin(const WeightedDigraph& g, int destination,
                                         OnExtract&& on_extract = {}) {
  detail::check_vertex(g, destination, "destination");
  const WeightedDigraph reversed = g.transposed();
  PriorityVector out;
  out.anchor = destination;
  out.direction = PathDirection::ToDestination;
  out.values = detail::scan_maxmin(
      g.size(), destination, [&reversed](int u) { return reversed.row(u); }, on_extract);
  return out;
}

namespace detail {

/// Pivot partition with the transposed graph supplied by the caller, so a
/// loop that pivots repeatedly on one graph reverses its edges only once.
inline PivotPartition pivot_partition_pretransposed(const WeightedDigraph& g,
                                                    const WeightedDigraph& g_reversed, int p,
                                                    const std::vector<int>& s) {
  const int m = g.size();
  check_vertex(g, p, "pivot");
  std::vector<int> members(s);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && (members.front() < 0 || members.back() >= m))
    throw std::invalid_argument("queried set references invalid candidate index");
  if (!std::binary_search(members.begin(), members.end(), p))
    throw std::invalid_argument("pivot must be a member of the queried set");

  // Both runs walk the ENTIRE graph. Restricting them to the induced
  // subgraph of s would change the strengths and give wrong partitions.
  const std::vector<BeatpathValue> from_pivot =
      scan_maxmin(m, p, [&g](int u) { return g.row(u); }, NoTrace{});
  const std::vector<BeatpathValue> to_pivot =
      scan_maxmin(m, p, [&g_reversed](int u) { return g_reversed.row(u); }, NoTrace{});

  PivotPartition part;
  part.pivot = p;
  for (int v : members) {
    switch (compare_by_beatpaths(to_pivot[static_cast<std::size_t>(v)],
                                 from_pivot[static_cast<std::size_t>(v)])) {
      case SchulzeComparison::Less: part.low.push_back(v); break;
      case SchulzeComparison::Greater: part.high.push_back(v); break;
      default: part.incomparable.push_back(v); break;
    }
  }
  return part;
}

}  // namespace detail

/// Partition the queried set s against pivot p: low = {v : v < p},
/// high = {v : p < v}, incomparable the rest. p itself lands in
/// incomparable because B(p,p) = +inf on both sides.
inline PivotPartition pivot_partition(const WeightedDigraph& g, int p, const std::vector<int>& s) {
  return detail::pivot_partition_pretransposed(g, g.transposed(), p, s);
}

}  // namespace schulze
