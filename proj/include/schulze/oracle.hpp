#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schulze/core.hpp"

/// Reference implementations: the cubic all-pairs beatpath computation, the
/// brute-force Schulze order and maximal set, a constructor that realizes an
/// arbitrary partial order (with unique extremes) as a weighted majority
/// graph, and the exact expected-iteration recurrence of the quickselect
/// loop. These are the independent checks the fast paths are tested against.
namespace schulze {

using Rational = boost::multiprecision::cpp_rational;

/// All-pairs beatpath strengths via the Floyd-Warshall relaxation
/// b(x,y) = max(b(x,y), min(b(x,z), b(z,y))). Theta(m^3).
inline BeatpathMatrix floyd_warshall_beatpaths(const WeightedDigraph& g) {
  const int m = g.size();
  const auto n = static_cast<std::size_t>(m);
  std::vector<BeatpathValue> b(n * n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      b[static_cast<std::size_t>(x) * n + y] =
          x == y ? BeatpathValue::pos_infinity() : BeatpathValue::finite(g.weight(x, y));

  for (int z = 0; z < m; ++z) {
    const BeatpathValue* through = b.data() + static_cast<std::size_t>(z) * n;
    for (int x = 0; x < m; ++x) {
      if (x == z) continue;
      BeatpathValue* row = b.data() + static_cast<std::size_t>(x) * n;
      const BeatpathValue via = row[z];
      for (int y = 0; y < m; ++y) {
        if (y == x) continue;
        const BeatpathValue cand = min(via, through[y]);
        if (row[y] < cand) row[y] = cand;
      }
    }
  }
  return BeatpathMatrix(g.candidates(), std::move(b));
}

/// The Schulze order read off a beatpath matrix: x < y iff B(x,y) < B(y,x).
/// PartialOrderSpec construction re-verifies asymmetry and transitivity, so
/// a broken matrix fails loudly instead of yielding a nonsense order.
inline PartialOrderSpec schulze_order(const BeatpathMatrix& b) {
  const int m = b.size();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y && b.compare(x, y) == SchulzeComparison::Less) pairs.emplace_back(x, y);
  return PartialOrderSpec(b.candidates(), pairs);
}

/// Candidates with nothing above them.
inline std::vector<int> maximal_elements(const PartialOrderSpec& order) {
  const int m = order.size();
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    bool dominated = false;
    for (int y = 0; y < m && !dominated; ++y) dominated = order.less(x, y);
    if (!dominated) out.push_back(x);
  }
  return out;
}

/// Candidates with nothing below them.
inline std::vector<int> minimal_elements(const PartialOrderSpec& order) {
  const int m = order.size();
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    bool dominates = false;
    for (int y = 0; y < m && !dominates; ++y) dominates = order.less(y, x);
    if (!dominates) out.push_back(x);
  }
  return out;
}

/// Builds an antisymmetric weighted majority graph whose Schulze order is
/// exactly `spec`. Requires `top` to be the unique maximal element of spec
/// and `bottom` the unique minimal one (m >= 2).
///
/// Weights come from four disjoint bands of width E = m(m-1)/2, assigned in
/// candidate-index order:
///   tiny   [1, E]        one direction of each incomparable inner pair,
///                        lower index -> higher index
///   small  (E, 2E]       the single edge bottom -> top
///   medium (2E, 3E]      greater -> lesser for comparable inner pairs
///   large  (3E, 4E]      top -> x and x -> bottom for every inner x
/// Every assigned edge's reverse carries the negated weight. Comparisons
/// never depend on which value inside a band an edge received.
///
/// For m == 2 there are no inner candidates and the lone small edge, taken
/// literally, would order top below bottom; the small weight goes on
/// top -> bottom instead, which realizes the two-element chain directly.
inline WeightedDigraph realize_partial_order(const PartialOrderSpec& spec, int top, int bottom) {
  const int m = spec.size();
  if (m < 2) throw std::invalid_argument("realization needs at least two candidates");
  if (top < 0 || top >= m || bottom < 0 || bottom >= m || top == bottom)
    throw std::invalid_argument("top and bottom must be distinct valid candidates");
  if (maximal_elements(spec) != std::vector<int>{top})
    throw std::invalid_argument("spec must have the given top as its unique maximal element");
  if (minimal_elements(spec) != std::vector<int>{bottom})
    throw std::invalid_argument("spec must have the given bottom as its unique minimal element");

  const std::int64_t band = static_cast<std::int64_t>(m) * (m - 1) / 2;
  std::int64_t next_tiny = 1;
  std::int64_t next_medium = 2 * band + 1;
  std::int64_t next_large = 3 * band + 1;

  std::vector<std::int64_t> w(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  const auto assign = [&](int x, int y, std::int64_t value) {
    w[static_cast<std::size_t>(x) * m + y] = value;
    w[static_cast<std::size_t>(y) * m + x] = -value;
  };

  if (m == 2) {
    assign(top, bottom, band + 1);
    return WeightedDigraph(spec.candidates(), std::move(w));
  }

  assign(bottom, top, band + 1);
  for (int x = 0; x < m; ++x) {
    if (x == top || x == bottom) continue;
    assign(top, x, next_large++);
    assign(x, bottom, next_large++);
  }
  for (int x = 0; x < m; ++x) {
    if (x == top || x == bottom) continue;
    for (int y = x + 1; y < m; ++y) {
      if (y == top || y == bottom) continue;
      if (spec.less(x, y))
        assign(y, x, next_medium++);
      else if (spec.less(y, x))
        assign(x, y, next_medium++);
      else
        assign(x, y, next_tiny++);
    }
  }
  return WeightedDigraph(spec.candidates(), std::move(w));
}

/// Expected while-loop rounds R(m) of the winner quickselect on a
/// worst-case (linear) order: R(0) = R(1) = 0 and
/// R(s) = 1 + (1/s) * sum_{i=1..s} R(i-1), evaluated exactly.
inline Rational expected_iterations(int m) {
  if (m < 0) throw std::invalid_argument("candidate count must be non-negative");
  Rational prefix = 0;  // R(0) + ... + R(s-1)
  Rational r = 0;
  for (int s = 1; s <= m; ++s) {
    r = s == 1 ? Rational(0) : Rational(1) + prefix / s;
    prefix += r;
  }
  return m == 0 ? Rational(0) : r;
}

/// Same recurrence with base rho(1) = 1; equals the m-th harmonic number.
inline Rational harmonic_recurrence(int m) {
  if (m < 0) throw std::invalid_argument("candidate count must be non-negative");
  Rational prefix = 0;
  Rational r = 0;
  for (int s = 1; s <= m; ++s) {
    r = s == 1 ? Rational(1) : Rational(1) + prefix / s;
    prefix += r;
  }
  return m == 0 ? Rational(0) : r;
}

/// H_m by direct summation.
inline Rational harmonic_number(int m) {
  Rational h = 0;
  for (int i = 1; i <= m; ++i) h += Rational(1, i);
  return h;
}

}  // namespace schulze
