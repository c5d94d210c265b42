#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

/// Core value types for Schulze-method elections: candidates, pairwise
/// margins, weighted majority graphs, extended beatpath weights, and the
/// comparison/partition results the algorithms exchange.
///
/// Everything here is immutable after construction and safe to share
/// read-only across threads.
namespace schulze {

/// Thrown when a margin magnitude would leave the 64-bit range under a
/// requested transformation (see perturb()).
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The set of candidates in an election. Candidates are referenced by dense
/// index 0..m-1 everywhere else; names live only here.
class CandidateSet {
 public:
  /// Names must be non-empty, unique identifiers over [A-Za-z0-9_.-].
  /// Rejects an empty list: a zero-candidate election has no meaning.
  explicit CandidateSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("candidate set must not be empty");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      const std::string& name = names_[i];
      if (name.empty()) throw std::invalid_argument("candidate name must not be empty");
      for (char c : name) {
        if (!is_name_char(c))
          throw std::invalid_argument("invalid character in candidate name: " + name);
      }
      if (!index_.emplace(name, i).second)
        throw std::invalid_argument("duplicate candidate name: " + name);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a name, or -1 when unknown.
  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  static bool is_name_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
  }

  friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Complete directed graph on a candidate set with arbitrary integer edge
/// weights and a zero diagonal. Antisymmetry is NOT required: perturbed
/// graphs are a valid instance of this type.
class WeightedDigraph {
 public:
  WeightedDigraph(CandidateSet candidates, std::vector<std::int64_t> weights)
      : candidates_(std::move(candidates)), w_(std::move(weights)) {
    const auto m = static_cast<std::size_t>(candidates_.size());
    if (w_.size() != m * m)
      throw std::invalid_argument("weight matrix size does not match candidate count");
    for (std::size_t x = 0; x < m; ++x) {
      if (w_[x * m + x] != 0) throw std::invalid_argument("weight matrix diagonal must be zero");
    }
  }

  /// All-zero graph (every pair tied).
  explicit WeightedDigraph(CandidateSet candidates)
      : candidates_(std::move(candidates)),
        w_(static_cast<std::size_t>(candidates_.size()) * static_cast<std::size_t>(candidates_.size()), 0) {}

  int size() const { return candidates_.size(); }
  const CandidateSet& candidates() const { return candidates_; }

  std::int64_t weight(int x, int y) const {
    return w_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y)];
  }

  /// Set the weight of edge x -> y. The zero diagonal stays fixed.
  void set_weight(int x, int y, std::int64_t w) {
    if (x == y && w != 0) throw std::invalid_argument("weight matrix diagonal must be zero");
    w_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y)] = w;
  }

  /// Row x of the weight matrix; w[y] is the weight of edge x -> y.
  const std::int64_t* row(int x) const {
    return w_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(size());
  }

  const std::vector<std::int64_t>& weights() const { return w_; }

  /// Edge-reversed copy: transposed().weight(x, y) == weight(y, x).
  WeightedDigraph transposed() const {
    const int m = size();
    std::vector<std::int64_t> t(w_.size());
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        t[static_cast<std::size_t>(y) * m + x] = w_[static_cast<std::size_t>(x) * m + y];
    return WeightedDigraph(candidates_, std::move(t));
  }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.candidates_ == b.candidates_ && a.w_ == b.w_;
  }

 private:
  CandidateSet candidates_;
  std::vector<std::int64_t> w_;
};

/// The weighted majority graph: pairwise net margins P(x,y) - P(y,x).
/// Stronger contract than WeightedDigraph: antisymmetric, zero diagonal.
class MarginMatrix {
 public:
  explicit MarginMatrix(WeightedDigraph g) : g_(std::move(g)) {
    const int m = g_.size();
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        if (g_.weight(x, y) != -g_.weight(y, x))
          throw std::invalid_argument("margin matrix must be antisymmetric: w(" +
                                      g_.candidates().name(x) + "," + g_.candidates().name(y) +
                                      ") != -w(" + g_.candidates().name(y) + "," +
                                      g_.candidates().name(x) + ")");
  }

  MarginMatrix(CandidateSet candidates, std::vector<std::int64_t> weights)
      : MarginMatrix(WeightedDigraph(std::move(candidates), std::move(weights))) {}

  int size() const { return g_.size(); }
  const CandidateSet& candidates() const { return g_.candidates(); }
  std::int64_t margin(int x, int y) const { return g_.weight(x, y); }

  /// The margins viewed as a general weighted digraph (no copy).
  const WeightedDigraph& graph() const { return g_; }

  friend bool operator==(const MarginMatrix& a, const MarginMatrix& b) { return a.g_ == b.g_; }

 private:
  WeightedDigraph g_;
};

/// Extended integer: the codomain of beatpath strength B(x,y).
/// Totally ordered as -inf < any finite < +inf.
class BeatpathValue {
 public:
  constexpr BeatpathValue() : rank_(0), value_(0) {}

  static constexpr BeatpathValue neg_infinity() { return BeatpathValue(-1, 0); }
  static constexpr BeatpathValue pos_infinity() { return BeatpathValue(+1, 0); }
  static constexpr BeatpathValue finite(std::int64_t v) { return BeatpathValue(0, v); }

  constexpr bool is_finite() const { return rank_ == 0; }
  constexpr bool is_neg_infinity() const { return rank_ < 0; }
  constexpr bool is_pos_infinity() const { return rank_ > 0; }

  /// Finite payload; meaningless for the infinities.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(BeatpathValue a, BeatpathValue b) {
    return a.rank_ == b.rank_ && a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(BeatpathValue a, BeatpathValue b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr BeatpathValue(std::int8_t rank, std::int64_t value) : rank_(rank), value_(value) {}

  std::int8_t rank_;  // -1: -inf, 0: finite, +1: +inf
  std::int64_t value_;
};

constexpr BeatpathValue min(BeatpathValue a, BeatpathValue b) { return a < b ? a : b; }
constexpr BeatpathValue max(BeatpathValue a, BeatpathValue b) { return a < b ? b : a; }

/// Outcome of comparing two candidates in the Schulze order.
enum class SchulzeComparison { Less, Greater, Incomparable, Same };

/// Compare candidate x against y given the two beatpath strengths:
/// x < y exactly when B(x,y) < B(y,x); equal strengths are incomparable.
constexpr SchulzeComparison compare_by_beatpaths(BeatpathValue b_xy, BeatpathValue b_yx) {
  if (b_xy < b_yx) return SchulzeComparison::Less;
  if (b_yx < b_xy) return SchulzeComparison::Greater;
  return SchulzeComparison::Incomparable;
}

/// All-pairs beatpath strengths B(x,y) for one graph. B(x,x) = +inf.
class BeatpathMatrix {
 public:
  BeatpathMatrix(CandidateSet candidates, std::vector<BeatpathValue> values)
      : candidates_(std::move(candidates)), b_(std::move(values)) {
    const auto m = static_cast<std::size_t>(candidates_.size());
    if (b_.size() != m * m)
      throw std::invalid_argument("beatpath matrix size does not match candidate count");
    for (std::size_t x = 0; x < m; ++x)
      if (!b_[x * m + x].is_pos_infinity())
        throw std::invalid_argument("beatpath matrix diagonal must be +inf");
  }

  int size() const { return candidates_.size(); }
  const CandidateSet& candidates() const { return candidates_; }

  BeatpathValue strength(int x, int y) const {
    return b_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y)];
  }

  /// Schulze comparison of x against y. Same only when x == y.
  SchulzeComparison compare(int x, int y) const {
    if (x == y) return SchulzeComparison::Same;
    return compare_by_beatpaths(strength(x, y), strength(y, x));
  }

  friend bool operator==(const BeatpathMatrix& a, const BeatpathMatrix& b) {
    return a.candidates_ == b.candidates_ && a.b_ == b.b_;
  }

 private:
  CandidateSet candidates_;
  std::vector<BeatpathValue> b_;
};

/// A strict partial order on a candidate set, stored as the full relation.
/// Construction enforces asymmetry and transitive closure; violations throw.
class PartialOrderSpec {
 public:
  /// pairs lists (x, y) meaning x < y. The relation must already be
  /// transitively closed; use transitive_closure() first for raw input.
  PartialOrderSpec(CandidateSet candidates, const std::vector<std::pair<int, int>>& pairs)
      : candidates_(std::move(candidates)),
        less_(static_cast<std::size_t>(candidates_.size()) * static_cast<std::size_t>(candidates_.size()), 0) {
    const int m = candidates_.size();
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= m || y < 0 || y >= m)
        throw std::invalid_argument("partial order pair references invalid candidate index");
      if (x == y) throw std::invalid_argument("partial order must be irreflexive");
      less_[idx(x, y)] = 1;
    }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (less_[idx(x, y)] && less_[idx(y, x)])
          throw std::invalid_argument("partial order must be asymmetric: both " +
                                      candidates_.name(x) + "<" + candidates_.name(y) +
                                      " and the reverse given");
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (less_[idx(x, y)])
          for (int z = 0; z < m; ++z)
            if (less_[idx(y, z)] && !less_[idx(x, z)])
              throw std::invalid_argument("partial order is not transitively closed: " +
                                          candidates_.name(x) + "<" + candidates_.name(y) + "<" +
                                          candidates_.name(z));
  }

  int size() const { return candidates_.size(); }
  const CandidateSet& candidates() const { return candidates_; }

  /// True when x < y.
  bool less(int x, int y) const { return less_[idx(x, y)] != 0; }

  /// Number of ordered pairs in the relation.
  int pair_count() const {
    return static_cast<int>(std::count(less_.begin(), less_.end(), std::uint8_t{1}));
  }

  friend bool operator==(const PartialOrderSpec& a, const PartialOrderSpec& b) {
    return a.candidates_ == b.candidates_ && a.less_ == b.less_;
  }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(y);
  }

  CandidateSet candidates_;
  std::vector<std::uint8_t> less_;
};

/// Reachability closure of a raw relation, for building a PartialOrderSpec
/// from user input that only lists covering pairs.
inline std::vector<std::pair<int, int>> transitive_closure(int m,
                                                           std::vector<std::pair<int, int>> pairs) {
  std::vector<std::uint8_t> r(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m)
      throw std::invalid_argument("relation pair references invalid candidate index");
    r[static_cast<std::size_t>(x) * m + y] = 1;
  }
  for (int z = 0; z < m; ++z)
    for (int x = 0; x < m; ++x)
      if (r[static_cast<std::size_t>(x) * m + z])
        for (int y = 0; y < m; ++y)
          if (r[static_cast<std::size_t>(z) * m + y]) r[static_cast<std::size_t>(x) * m + y] = 1;
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (r[static_cast<std::size_t>(x) * m + y]) out.emplace_back(x, y);
  return out;
}

/// Result of partitioning a queried set against a pivot candidate p:
/// low contains v < p, high contains v > p, incomparable the rest (p itself
/// always lands in incomparable). Each set is sorted by candidate index.
struct PivotPartition {
  int pivot = -1;
  std::vector<int> low;
  std::vector<int> incomparable;
  std::vector<int> high;
};

/// Outcome of one quickselect election.
struct ElectionResult {
  int winner = -1;
  bool is_unique = false;
  int iterations = 0;     // while-loop rounds, excluding the final uniqueness check
  std::uint64_t seed = 0;  // the RNG seed the election ran with
};

/// All Schulze-maximal candidates, in order of discovery, with the
/// quickselect iteration count that produced each one.
struct MaximalSet {
  std::vector<int> members;
  std::vector<int> rounds;
};

}  // namespace schulze
