#pragma once

/**
 * @file groups.hpp
 * @brief Finite simple classical and alternating groups: exact orders,
 *        centre divisor d, |Out|, minimal permutation degrees and the
 *        analytic order bounds used by the elimination scans.
 *
 * Families are indexed by the rank parameter m as written in
 * PSL(m,q), PSU(m,q), PSp(2m,q), O(2m+1,q), O+(2m,q), O-(2m,q), A(m), S(m).
 * The order bounds are stated in the natural module dimension N instead;
 * natural_dimension() is the only adapter between the two conventions.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "symdes/arith.hpp"

namespace symdes {

enum class FamilyKind {
  linear,
  unitary,
  symplectic,
  orthogonal_odd,
  orthogonal_plus,
  orthogonal_minus,
  alternating,
  symmetric,
};

struct GroupFamily {
  FamilyKind kind = FamilyKind::alternating;
  unsigned m = 0;
  std::optional<PrimePower> q;  // absent for A(m), S(m)

  bool classical() const { return kind != FamilyKind::alternating && kind != FamilyKind::symmetric; }
  /// m, m, 2m, 2m+1, 2m, 2m for the classical kinds; m for A(m), S(m).
  unsigned natural_dimension() const;
  /// Defining characteristic; throws for A(m), S(m).
  std::uint64_t characteristic() const;
  std::uint64_t q_value() const;
  std::string to_string() const;

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

/// Throws std::invalid_argument when q is not a prime power or m is zero.
GroupFamily make_family(FamilyKind kind, unsigned m, std::uint64_t q = 0);

/// Parses the plain-text grammar above. Dimensions are given as written:
/// "PSp(6,3)" has m = 3, "O(7,3)" has m = 3. Throws std::invalid_argument.
GroupFamily parse_family(const std::string& text);

/// Names the violated constraint, or empty when admissible.
std::optional<std::string> admissibility_violation(const GroupFamily& family);
void require_admissible(const GroupFamily& family);

/// The tabulated order formula evaluated without admissibility checks.
/// Small-rank members (O(3,q), O(5,q), PSL(2,2), ...) are well defined
/// and used by the isomorphism cross-checks.
Integer order_formula(const GroupFamily& family);

/// Checked versions; throw when the family is inadmissible.
Integer group_order_value(const GroupFamily& family);
Factorization group_order(const GroupFamily& family);

/// The centre divisor d of the order formula (classical kinds only).
std::uint64_t center_divisor(const GroupFamily& family);

/// |Out(X)|. A(m): 2, or 4 when m = 6. S(m): 1, or 2 when m = 6.
std::uint64_t out_order(const GroupFamily& family);

struct MinDegree {
  Integer value;
  bool exact = false;  // false: only a lower bound
  std::string source;
};

/// Minimal faithful transitive degree, or a lower bound for it, over the
/// ranges the elimination arguments use. Throws std::invalid_argument
/// outside them.
MinDegree min_degree_lower_bound(const GroupFamily& family);

/// lower < |X| and |X| < upper (or <= where the bound is inclusive),
/// compared exactly. For an odd natural dimension N the orthogonal upper
/// bound contains q^(-N/2), which is irrational; the comparison with
/// upper_base * (1 + q^(-N/2)) is then made by squaring.
struct OrderBounds {
  unsigned natural_dimension = 0;
  Integer order;
  Rational lower;
  Rational upper_base;
  bool half_power_factor = false;  // upper = upper_base * (1 + q^(-N/2)), irrational
  bool upper_inclusive = false;
  bool above_lower = false;
  bool below_upper = false;  // strictly
  bool equals_upper = false;
  std::string lower_text;
  std::string upper_text;

  bool strictly_inside() const { return above_lower && below_upper; }
  bool holds() const { return above_lower && (below_upper || (upper_inclusive && equals_upper)); }
};

/// Defined for PSL and PSU with N >= 2, PSp with N >= 4 and the orthogonal
/// kinds with N >= 6; throws std::invalid_argument otherwise.
OrderBounds order_bounds(const GroupFamily& family);

/// t! < 2^(4t(t-3)/3) for t >= 4 and t! < 5^((t^2-3t+1)/3) for t >= 5,
/// compared as (t!)^3 against the integer right-hand sides.
struct FactorialBoundVerdict {
  unsigned t = 0;
  Integer factorial_cubed;
  bool base2_applies = false;
  bool base2_holds = false;
  Integer base2_rhs;
  bool base5_applies = false;
  bool base5_holds = false;
  Integer base5_rhs;
};

FactorialBoundVerdict factorial_power_bounds(unsigned t);

}  // namespace symdes
