#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schulze/core.hpp"
#include "schulze/rng.hpp"

/// Ballot parsing, aggregation into a margin matrix, and the McGarvey-style
/// construction of ballots realizing a prescribed margin matrix.
///
/// Ballot file grammar (UTF-8, line oriented):
///   line   := comment | ballot          comment := '#' to end of line
///   ballot := [count 'x' SP] group ('>' group)*
///   group  := name ('=' name)*          name := [A-Za-z0-9_.-]+
///   count  := positive decimal integer (default 1)
/// Blank lines are ignored and whitespace around tokens is insignificant.
/// Earlier groups are preferred to every later group; names within a group
/// are tied; candidates a ballot omits are incomparable to all others.
namespace schulze {

/// Ballot-file syntax or validation failure, with the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// One ranked ballot: ordered preference groups over candidate indices,
/// counted `multiplicity` times.
struct Ballot {
  std::vector<std::vector<int>> groups;
  std::uint32_t multiplicity = 1;
};

/// A multiset of ballots over one candidate set. n is the number of voters,
/// i.e. the sum of multiplicities.
class BallotSet {
 public:
  BallotSet(CandidateSet candidates, std::vector<Ballot> ballots)
      : candidates_(std::move(candidates)), ballots_(std::move(ballots)) {
    const int m = candidates_.size();
    for (const Ballot& b : ballots_) {
      if (b.multiplicity == 0) throw std::invalid_argument("ballot multiplicity must be positive");
      std::vector<char> seen(static_cast<std::size_t>(m), 0);
      for (const auto& group : b.groups) {
        if (group.empty()) throw std::invalid_argument("ballot group must not be empty");
        for (int c : group) {
          if (c < 0 || c >= m) throw std::invalid_argument("ballot references invalid candidate");
          if (seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("candidate appears twice in one ballot: " +
                                        candidates_.name(c));
          seen[static_cast<std::size_t>(c)] = 1;
        }
      }
      n_ += b.multiplicity;
    }
  }

  const CandidateSet& candidates() const { return candidates_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  std::uint64_t voter_count() const { return n_; }

 private:
  CandidateSet candidates_;
  std::vector<Ballot> ballots_;
  std::uint64_t n_ = 0;
};

namespace detail {

struct RawBallot {
  int line = 0;
  std::uint32_t multiplicity = 1;
  std::vector<std::vector<std::string>> groups;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

/// Grammar pass only: group structure and multiplicities, names unresolved.
inline std::vector<RawBallot> parse_raw_ballots(std::string_view text) {
  std::vector<RawBallot> out;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    RawBallot raw;
    raw.line = line_no;

    // Optional "<count>x " prefix. A bare token like "3x" with nothing after
    // it is a candidate name, not a count.
    std::size_t digits = 0;
    while (digits < body.size() && body[digits] >= '0' && body[digits] <= '9') ++digits;
    if (digits > 0 && digits + 1 < body.size() && body[digits] == 'x' &&
        (body[digits + 1] == ' ' || body[digits + 1] == '\t')) {
      std::uint64_t count = 0;
      for (std::size_t i = 0; i < digits; ++i) {
        count = count * 10 + static_cast<std::uint64_t>(body[i] - '0');
        if (count > std::numeric_limits<std::uint32_t>::max())
          throw ParseError(line_no, "ballot multiplicity exceeds 4294967295");
      }
      if (count == 0) throw ParseError(line_no, "ballot multiplicity must be positive");
      raw.multiplicity = static_cast<std::uint32_t>(count);
      body = trim(body.substr(digits + 1));
    }

    for (std::string_view group : split(body, '>')) {
      std::vector<std::string> names;
      for (std::string_view token : split(group, '=')) {
        token = trim(token);
        if (token.empty()) throw ParseError(line_no, "empty preference group");
        for (char c : token)
          if (!CandidateSet::is_name_char(c))
            throw ParseError(line_no, "invalid candidate name '" + std::string(token) + "'");
        names.emplace_back(token);
      }
      raw.groups.push_back(std::move(names));
    }
    out.push_back(std::move(raw));
  }
  return out;
}

}  // namespace detail

/// The sorted set of candidate names a ballot file mentions. Grammar errors
/// are reported the same way parse_ballots reports them.
inline std::vector<std::string> scan_candidate_names(std::string_view text) {
  std::vector<std::string> names;
  for (const auto& raw : detail::parse_raw_ballots(text))
    for (const auto& group : raw.groups)
      for (const auto& name : group) names.push_back(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

/// Parse a ballot file against a known candidate set. Unknown names,
/// duplicated candidates within a ballot, zero multiplicities and grammar
/// violations raise ParseError with the offending line number.
inline BallotSet parse_ballots(std::string_view text, const CandidateSet& candidates) {
  std::vector<Ballot> ballots;
  for (const auto& raw : detail::parse_raw_ballots(text)) {
    Ballot ballot;
    ballot.multiplicity = raw.multiplicity;
    std::vector<char> seen(static_cast<std::size_t>(candidates.size()), 0);
    for (const auto& group : raw.groups) {
      std::vector<int> indices;
      for (const std::string& name : group) {
        const int c = candidates.index_of(name);
        if (c < 0) throw ParseError(raw.line, "unknown candidate '" + name + "'");
        if (seen[static_cast<std::size_t>(c)])
          throw ParseError(raw.line, "duplicate candidate '" + name + "' in ballot");
        seen[static_cast<std::size_t>(c)] = 1;
        indices.push_back(c);
      }
      std::sort(indices.begin(), indices.end());
      ballot.groups.push_back(std::move(indices));
    }
    ballots.push_back(std::move(ballot));
  }
  return BallotSet(candidates, std::move(ballots));
}

/// Pairwise net margins w(x,y) = P(x,y) - P(y,x), where a ballot counts
/// toward P(x,y) exactly when x's group strictly precedes y's group.
inline MarginMatrix aggregate(const BallotSet& ballots) {
  const int m = ballots.candidates().size();
  std::vector<std::int64_t> w(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (const Ballot& b : ballots.ballots()) {
    const auto mult = static_cast<std::int64_t>(b.multiplicity);
    for (std::size_t i = 0; i < b.groups.size(); ++i)
      for (std::size_t j = i + 1; j < b.groups.size(); ++j)
        for (int x : b.groups[i])
          for (int y : b.groups[j]) {
            w[static_cast<std::size_t>(x) * m + y] += mult;
            w[static_cast<std::size_t>(y) * m + x] -= mult;
          }
  }
  return MarginMatrix(ballots.candidates(), std::move(w));
}

/// Construct total-order ballots whose aggregate margins equal `target`
/// exactly. Margins must all be even (double them first if not: scaling
/// every margin uniformly preserves every Schulze comparison).
///
/// With 2k at least the largest margin magnitude (k >= 1), each candidate
/// pair {x, y} contributes 2k voters ranking x and y as their top two:
/// k + w(x,y)/2 of them put x first. Exactly k of the pair's voters order
/// the remaining candidates by a seed-derived permutation and exactly k by
/// its reverse, so a pair's block is neutral for every pair it does not
/// feature; the blocks featuring x contribute symmetrically to every other
/// candidate and cancel across blocks. n = 2k * m(m-1)/2.
inline BallotSet mcgarvey_ballots(const MarginMatrix& target, std::uint64_t seed) {
  const int m = target.size();
  std::int64_t max_abs = 0;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const std::int64_t w = target.margin(x, y);
      if (w % 2 != 0)
        throw std::invalid_argument("margin between " + target.candidates().name(x) + " and " +
                                    target.candidates().name(y) + " is odd; double all margins first");
      const std::int64_t a = w < 0 ? -w : w;
      if (a > max_abs) max_abs = a;
    }
  const std::int64_t k = std::max<std::int64_t>(1, max_abs / 2);
  if (2 * k > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("margins too large to realize with 32-bit ballot multiplicities");

  std::vector<Ballot> ballots;
  std::uint64_t pair_index = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y, ++pair_index) {
      std::vector<int> others;
      others.reserve(static_cast<std::size_t>(m) - 2);
      for (int v = 0; v < m; ++v)
        if (v != x && v != y) others.push_back(v);

      SplitMix64 pair_rng(derive_seed(seed, pair_index));
      std::vector<int> forward(others);
      shuffle(forward, pair_rng);
      std::vector<int> backward(forward.rbegin(), forward.rend());

      const std::int64_t x_first = k + target.margin(x, y) / 2;
      const std::int64_t forward_x_first = std::min(x_first, k);
      // (lead, trail, tail order, multiplicity), splitting the k forward /
      // k backward tail orders across the x-first and y-first voters.
      const struct {
        int lead, trail;
        const std::vector<int>* tail;
        std::int64_t count;
      } blocks[4] = {
          {x, y, &forward, forward_x_first},
          {x, y, &backward, x_first - forward_x_first},
          {y, x, &forward, k - forward_x_first},
          {y, x, &backward, (2 * k - x_first) - (k - forward_x_first)},
      };
      for (const auto& block : blocks) {
        if (block.count == 0) continue;
        Ballot b;
        b.multiplicity = static_cast<std::uint32_t>(block.count);
        b.groups.reserve(static_cast<std::size_t>(m));
        b.groups.push_back({block.lead});
        b.groups.push_back({block.trail});
        for (int v : *block.tail) b.groups.push_back({v});
        ballots.push_back(std::move(b));
      }
    }
  }
  return BallotSet(target.candidates(), std::move(ballots));
}

}  // namespace schulze
