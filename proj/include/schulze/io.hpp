#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schulze/ballots.hpp"
#include "schulze/core.hpp"

/// Text formats:
///
/// Weight / margin matrix CSV — header "candidates,<names>", then one row per
/// candidate in header order: the candidate's name followed by one integer
/// per column. The diagonal is zero.
///
/// Beatpath matrix CSV — same shape; the diagonal is "inf" and pairs with no
/// connecting path are "-inf".
///
/// Order file — one constraint per line, "x < y" meaning x loses to y; '#'
/// starts a comment and blank lines are ignored. The listed constraints are
/// closed transitively and must be acyclic.
namespace schulze {

namespace detail {

inline std::int64_t parse_int64(std::string_view token, int line) {
  token = trim(token);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line, "value out of range: '" + std::string(token) + "'");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, found '" + std::string(token) + "'");
  return value;
}

struct CsvLine {
  int number = 0;
  std::string_view body;
};

inline std::vector<CsvLine> nonblank_lines(std::string_view text) {
  std::vector<CsvLine> lines;
  int number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++number;
    std::string_view body = trim(line);
    if (!body.empty()) lines.push_back({number, body});
  }
  return lines;
}

}  // namespace detail

/// Whether text is matrix CSV (as opposed to a ballot file): its first
/// non-blank line starts with the literal header field "candidates,".
inline bool looks_like_matrix_csv(std::string_view text) {
  for (std::string_view line : detail::split(text, '\n')) {
    std::string_view body = detail::trim(line);
    if (body.empty()) continue;
    return body.substr(0, 11) == "candidates,";
  }
  return false;
}

inline WeightedDigraph parse_weight_csv(std::string_view text) {
  const auto lines = detail::nonblank_lines(text);
  if (lines.empty()) throw ParseError(1, "empty matrix file");

  const auto header = detail::split(lines[0].body, ',');
  if (detail::trim(header[0]) != "candidates")
    throw ParseError(lines[0].number, "expected header starting with 'candidates,'");
  std::vector<std::string> names;
  for (std::size_t i = 1; i < header.size(); ++i) names.emplace_back(detail::trim(header[i]));

  CandidateSet candidates = [&] {
    try {
      return CandidateSet(names);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lines[0].number, e.what());
    }
  }();

  const int m = candidates.size();
  if (lines.size() != static_cast<std::size_t>(m) + 1)
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(m) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));

  std::vector<std::int64_t> weights(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    const auto& line = lines[static_cast<std::size_t>(x) + 1];
    const auto fields = detail::split(line.body, ',');
    if (detail::trim(fields[0]) != candidates.name(x))
      throw ParseError(line.number, "expected row for '" + candidates.name(x) +
                                        "' (rows follow header order)");
    if (fields.size() != static_cast<std::size_t>(m) + 1)
      throw ParseError(line.number, "expected " + std::to_string(m) + " entries, found " +
                                        std::to_string(fields.size() - 1));
    for (int y = 0; y < m; ++y)
      weights[static_cast<std::size_t>(x) * m + y] = detail::parse_int64(fields[y + 1], line.number);
  }

  try {
    return WeightedDigraph(std::move(candidates), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].number, e.what());
  }
}

inline MarginMatrix parse_margin_csv(std::string_view text) {
  try {
    return MarginMatrix(parse_weight_csv(text));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

inline std::string write_matrix_csv(const WeightedDigraph& g) {
  const int m = g.size();
  std::string out = "candidates";
  for (int x = 0; x < m; ++x) {
    out += ',';
    out += g.candidates().name(x);
  }
  out += '\n';
  for (int x = 0; x < m; ++x) {
    out += g.candidates().name(x);
    for (int y = 0; y < m; ++y) {
      out += ',';
      out += std::to_string(g.weight(x, y));
    }
    out += '\n';
  }
  return out;
}

inline std::string write_matrix_csv(const MarginMatrix& margins) {
  return write_matrix_csv(margins.graph());
}

inline std::string write_beatpaths_csv(const BeatpathMatrix& b) {
  const int m = b.size();
  std::string out = "candidates";
  for (int x = 0; x < m; ++x) {
    out += ',';
    out += b.candidates().name(x);
  }
  out += '\n';
  for (int x = 0; x < m; ++x) {
    out += b.candidates().name(x);
    for (int y = 0; y < m; ++y) {
      out += ',';
      const BeatpathValue v = b.strength(x, y);
      if (v == BeatpathValue::pos_infinity())
        out += "inf";
      else if (v == BeatpathValue::neg_infinity())
        out += "-inf";
      else
        out += std::to_string(v.value());
    }
    out += '\n';
  }
  return out;
}

/// Raw "x < y" constraints from an order file, in file order, unresolved.
inline std::vector<std::pair<std::string, std::string>> parse_order_pairs(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  int number = 0;
  for (std::string_view line : detail::split(text, '\n')) {
    ++number;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;

    const auto parts = detail::split(body, '<');
    if (parts.size() != 2) throw ParseError(number, "expected 'x < y'");
    const std::string_view lo = detail::trim(parts[0]);
    const std::string_view hi = detail::trim(parts[1]);
    for (std::string_view token : {lo, hi}) {
      if (token.empty()) throw ParseError(number, "expected 'x < y'");
      for (char c : token)
        if (!CandidateSet::is_name_char(c))
          throw ParseError(number, "invalid candidate name '" + std::string(token) + "'");
    }
    if (lo == hi) throw ParseError(number, "candidate '" + std::string(lo) + "' ordered below itself");
    pairs.emplace_back(std::string(lo), std::string(hi));
  }
  return pairs;
}

/// Resolve order-file constraints against a candidate set and close them
/// transitively. Cycles and unknown names raise std::invalid_argument.
inline PartialOrderSpec build_partial_order(
    const std::vector<std::pair<std::string, std::string>>& pairs, const CandidateSet& candidates) {
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) {
    const int x = candidates.index_of(lo);
    const int y = candidates.index_of(hi);
    if (x < 0) throw std::invalid_argument("unknown candidate '" + lo + "'");
    if (y < 0) throw std::invalid_argument("unknown candidate '" + hi + "'");
    indexed.emplace_back(x, y);
  }
  const int m = candidates.size();
  const std::vector<std::pair<int, int>> closed = transitive_closure(m, std::move(indexed));
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (auto [x, y] : closed) rel[static_cast<std::size_t>(x) * m + y] = 1;
  for (int x = 0; x < m; ++x) {
    if (rel[static_cast<std::size_t>(x) * m + x])
      throw std::invalid_argument("order constraints contain a cycle through '" +
                                  candidates.name(x) + "'");
    for (int y = x + 1; y < m; ++y)
      if (rel[static_cast<std::size_t>(x) * m + y] && rel[static_cast<std::size_t>(y) * m + x])
        throw std::invalid_argument("order constraints contain a cycle through '" +
                                    candidates.name(x) + "' and '" + candidates.name(y) + "'");
  }
  return PartialOrderSpec(candidates, closed);
}

inline std::string write_ballots(const BallotSet& ballots) {
  std::string out;
  for (const Ballot& b : ballots.ballots()) {
    if (b.multiplicity != 1) {
      out += std::to_string(b.multiplicity);
      out += "x ";
    }
    for (std::size_t i = 0; i < b.groups.size(); ++i) {
      if (i > 0) out += " > ";
      for (std::size_t j = 0; j < b.groups[i].size(); ++j) {
        if (j > 0) out += " = ";
        out += ballots.candidates().name(b.groups[i][j]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace schulze
