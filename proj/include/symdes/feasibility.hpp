#pragma once

/**
 * @file feasibility.hpp
 * @brief Prime-part constraints on a point stabilizer, the orthogonal
 *        monomial-stabilizer table, and the alternating-socle searches.
 *
 * Every search keeps its rejected candidates together with the reason, so
 * reports show each elimination rather than only the empty end result.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "symdes/arith.hpp"
#include "symdes/design_params.hpp"
#include "symdes/groups.hpp"
#include "symdes/records.hpp"

namespace symdes {

/// Inclusive integer range; lo > hi is empty.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Grid description read from a JSON file:
/// {"predicate": "...", "family": "...", "ranges": {"m": [5, 24], ...}, "output": "..."}.
struct SearchConfig {
  std::string predicate;
  std::string family;
  std::map<std::string, Range> ranges;
  std::optional<std::string> output;

  /// Canonical text used for the report's config hash.
  std::string canonical() const;
};

/// Throws std::invalid_argument on malformed input (missing brackets,
/// lo/hi not integers, unknown top-level keys).
SearchConfig parse_search_config(const json& j);
SearchConfig load_search_config(const std::string& path);

// ---------------------------------------------------------------------------
// Prime-part constraints

struct PrimeOrderConstraints {
  Integer group_order;
  Factorization stabilizer;
  std::uint64_t p = 0;
  Integer stabilizer_p_prime;
  std::vector<Integer> allowed_n;  // odd primes dividing |M0|_p'
  std::optional<Integer> n_max;
  bool volume_bound = false;  // |X| < 2 |M0| (|M0|_p')^2
  bool cube_bound = false;    // |X| < |M0|^3
};

/// Requires |M0| to divide |X|; throws std::invalid_argument otherwise.
PrimeOrderConstraints prime_order_constraints(const GroupFamily& group, const Factorization& stabilizer);
PrimeOrderConstraints prime_order_constraints(const Integer& group_order, std::uint64_t p,
                                              const Factorization& stabilizer);

// ---------------------------------------------------------------------------
// Orthogonal groups with monomial stabilizer 2^(2m).A(2m+1) or 2^(2m).S(2m+1)

struct MonomialLine {
  unsigned line = 0;
  GroupFamily group;
  std::string stabilizer_label;
  Factorization stabilizer;
  Factorization order;
  Factorization v;
  PrimeOrderConstraints constraints;
  bool v_exceeds_2n2 = false;

  // Values as printed in the reference table.
  Factorization printed_order;
  Factorization printed_v;
  unsigned printed_n_max = 0;
  bool order_matches_printed = false;
  bool v_matches_printed = false;
  bool n_max_matches_printed = false;
};

/// Stabilizer of an orthonormal frame in O(2m+1,q), q odd.
Factorization monomial_stabilizer(unsigned m, std::uint64_t q, std::string* label = nullptr);

/// The four surviving (X, M0) pairs with their printed columns.
std::vector<MonomialLine> monomial_table();

// ---------------------------------------------------------------------------
// Alternating socle

struct GridRow {
  unsigned fixed = 0;  // s for subsets, t for partitions
  unsigned lo = 0, hi = 0;
};

/// s >= 3 and m >= 2s+1 with C(m,s) < 2 s (m-s)^2.
std::vector<GridRow> derive_subset_grid();
/// t >= 2 and s >= 3 with (t!)^(s-1) < s^3 t^2 (t-1).
std::vector<GridRow> derive_partition_grid();

struct AltTuple {
  DesignParams params;
  unsigned s = 0, m = 0;
  std::int64_t k_star = 0;
  std::int64_t n = 0;  // the prime used to form k = n k*
  bool divides_alt = false;
  bool divides_sym = false;
  bool order_prime = false;
};

struct ExternalCase {
  DesignParams params;
  std::string socle;
  std::string note;
};

struct SubsetSearch {
  std::vector<GridRow> grid;
  std::vector<AltTuple> tuples;  // satisfy every arithmetic condition; sorted
  std::vector<ExternalCase> external;
};

/// ranges may restrict "s" and "m"; by default the derived grid is used.
SubsetSearch search_alternating_intransitive(const std::map<std::string, Range>& ranges = {});

struct LambdaCandidate {
  std::int64_t v = 0, k = 0;
  std::int64_t k_star = 0, n = 0;
  boost::rational<std::int64_t> lambda;
  bool trivial = false;
  bool order_prime = false;
  std::vector<std::string> groups;

  bool integral() const { return lambda.denominator() == 1; }
  bool survives() const { return integral() && !trivial && order_prime; }
};

struct PartitionCandidate {
  unsigned t = 0, s = 0, m = 0;
  Integer v, d2;
  bool prefilter = false;  // v < 2 max(s,t) d2
};

struct PartitionSearch {
  std::vector<GridRow> grid;
  std::vector<PartitionCandidate> candidates;
  std::vector<AltTuple> arithmetic_matches;  // vk | |G| with integral lambda, k-lambda any
  // s = 2 branch: (2t-1)!! < 2 t^2 (t-1) forces t = 3, v = 15, d2 = 6.
  std::vector<unsigned> s2_t_values;
  std::vector<LambdaCandidate> s2_candidates;
};

PartitionSearch search_alternating_imprimitive(const std::map<std::string, Range>& ranges = {});

/// v in {10, 36, 45} for M10, PGL(2,9), PGammaL(2,9); k* | v-1 with k* >= 3
/// and k = n k* dividing the point stabilizer order.
std::vector<LambdaCandidate> search_m6_special();

/// v = 15 for A7 and A8 with point stabilizers PSL(2,7) and AGL(3,2)
/// (orders 168 and 1344); k* | 14 with k* >= 2.
std::vector<LambdaCandidate> search_alternating_primitive();

// ---------------------------------------------------------------------------
// Records

CommandResult intransitive_records(const SubsetSearch& search);
CommandResult imprimitive_records(const PartitionSearch& search);
CommandResult lambda_records(const std::vector<LambdaCandidate>& candidates, const std::string& basis);
CommandResult monomial_records(const std::vector<MonomialLine>& lines);
json constraints_json(const PrimeOrderConstraints& c);

}  // namespace symdes
