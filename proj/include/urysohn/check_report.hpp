#pragma once

#include "urysohn/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace urysohn {

enum class Verdict { PassedExhaustive, PassedHeuristic, Failed };

std::string to_string(Verdict verdict);

/// Outcome of one of the checkers. A Failed report always carries a witness
/// that can be re-evaluated independently.
struct CheckReport {
  Verdict verdict = Verdict::PassedExhaustive;
  /// Random samples examined (PassedHeuristic only).
  std::size_t sample_count = 0;
  /// Named numeric witness values, in a fixed order, e.g. a, b, c.
  std::vector<std::pair<std::string, Rational>> witness;
  /// Point or vertex ids belonging to the witness (edges, trails, stuck points).
  std::vector<std::string> witness_points;
  /// The two evaluated sides of the violated relation, when there is one.
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  /// Which procedure produced the verdict.
  std::string method;
  std::vector<std::string> notes;

  bool passed() const { return verdict != Verdict::Failed; }
  bool failed() const { return verdict == Verdict::Failed; }
  /// Looks up a named witness value; throws std::out_of_range if absent.
  const Rational& witness_value(const std::string& name) const;
};

}  // namespace urysohn
