#pragma once

/**
 * @file actions.hpp
 * @brief Degrees and subdegrees of the subset, partition and coset actions.
 */

#include <string>
#include <variant>
#include <vector>

#include "symdes/arith.hpp"
#include "symdes/groups.hpp"

namespace symdes {

struct Subdegree {
  unsigned index = 0;  // d_index
  Integer value;
};

/// Designated non-trivial subdegrees of an action of degree `degree`.
/// residual = degree - 1 - sum(values); zero iff the list is complete.
struct SubdegreeList {
  Integer degree;
  std::vector<Subdegree> entries;
  Integer residual;

  Integer sum() const;
  bool complete() const { return residual == 0; }
  /// d_index, or zero when absent.
  Integer at(unsigned index) const;
};

/// Action on s-subsets of an m-set: v = C(m,s) and
/// d_{i+1} = C(s,i) C(m-s,s-i) for i = 0..s-1, zero entries omitted.
/// Requires 1 <= s < m.
SubdegreeList subset_action(unsigned m, unsigned s);

/// Action on partitions of an st-set into t blocks of size s:
/// v = (st)! / ((s!)^t t!), with the designated subdegrees
/// d_j = 2^(j-1) C(t,j) for s = 2 and d_j = s^j C(t,j) for s >= 3, j = 1..t.
/// These need not exhaust the orbits, so the residual may be non-zero or
/// negative. Requires s, t >= 2.
SubdegreeList partition_action(unsigned s, unsigned t);

/// |X| / |M0| as a factorization. Throws std::invalid_argument when |M0|
/// does not divide |X|.
Factorization coset_degree(const GroupFamily& family, const Factorization& stabilizer);
Factorization coset_degree(const Factorization& group, const Factorization& stabilizer);

/// (v-1)_p. Requires v >= 2 and p prime.
Integer v_minus_one_p_part(const Integer& v, const Integer& p);

struct SubsetAction {
  unsigned m = 0, s = 0;
};
struct PartitionAction {
  unsigned s = 0, t = 0;
};
struct CosetAction {
  GroupFamily group;
  Factorization stabilizer;
  std::string label;
};
using ActionSpec = std::variant<SubsetAction, PartitionAction, CosetAction>;

Integer action_degree(const ActionSpec& action);
std::string describe(const ActionSpec& action);

}  // namespace symdes
