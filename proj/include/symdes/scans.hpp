#pragma once

/**
 * @file scans.hpp
 * @brief Registry of exact inequality predicates evaluated over finite
 *        parameter grids for the classical-group eliminations.
 *
 * A predicate is a chain of stages. A grid point is eliminated by the first
 * stage whose inequality fails; a point that passes every stage survives.
 * Each predicate also carries the conclusion its survivor set must satisfy
 * (usually emptiness). Grids are finite; emptiness beyond them is not
 * claimed here.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdes/feasibility.hpp"
#include "symdes/records.hpp"

namespace symdes {

struct StageResult {
  std::string name;
  bool holds = false;
};

struct PointVerdict {
  std::vector<std::int64_t> values;  // one per axis, in axis order
  std::vector<StageResult> stages;   // evaluated prefix; stops at the first failure
  json derived = json::object();

  bool survives() const {
    for (const auto& s : stages)
      if (!s.holds) return false;
    return true;
  }
  bool passed_stage(std::size_t index) const { return index < stages.size() && stages[index].holds; }
};

enum class QKind { any, odd, even };

struct ScanPredicate {
  std::string id;
  std::string description;
  std::string basis;
  std::vector<std::string> axes;
  std::map<std::string, Range> default_ranges;
  bool claims_empty = true;
  std::string survivor_verdict = "survivor";  // used when survivors are expected
  std::function<std::vector<std::vector<std::int64_t>>(const std::map<std::string, Range>&)> enumerate;
  std::function<PointVerdict(const std::vector<std::int64_t>&)> evaluate;
  /// Returns a failure message when the survivors contradict the expected
  /// conclusion. Receives every evaluated point.
  std::function<std::optional<std::string>(const std::vector<PointVerdict>&)> check;
  std::string conclusion;
};

const std::vector<ScanPredicate>& scan_registry();
/// Throws std::invalid_argument for an unregistered id.
const ScanPredicate& find_predicate(const std::string& id);

struct ScanOutcome {
  const ScanPredicate* predicate = nullptr;
  std::map<std::string, Range> ranges;
  std::vector<PointVerdict> points;  // sorted by values
  std::vector<std::size_t> stage_pass_counts;
  std::size_t survivor_count = 0;
  std::optional<std::string> conclusion_failure;

  bool conclusion_holds() const { return !conclusion_failure.has_value(); }
};

/// Missing range keys take the predicate defaults; unknown keys throw
/// std::invalid_argument. The result does not depend on jobs.
ScanOutcome run_scan(const ScanPredicate& predicate, const std::map<std::string, Range>& ranges = {},
                     unsigned jobs = 1);

/// One grid record, then one record per point that passed its first stage.
CommandResult scan_records(const ScanOutcome& outcome);

/// q values in [lo, hi] that are prime powers of the requested parity.
std::vector<std::int64_t> prime_powers_in(const Range& r, QKind kind);

}  // namespace symdes
