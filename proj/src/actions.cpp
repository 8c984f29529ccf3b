#include "symdes/actions.hpp"

#include <stdexcept>

namespace symdes {

Integer SubdegreeList::sum() const {
  Integer s = 0;
  for (const auto& e : entries) s += e.value;
  return s;
}

Integer SubdegreeList::at(unsigned index) const {
  for (const auto& e : entries)
    if (e.index == index) return e.value;
  return 0;
}

SubdegreeList subset_action(unsigned m, unsigned s) {
  if (s < 1 || s >= m) throw std::invalid_argument("subset_action: need 1 <= s < m");
  SubdegreeList out;
  out.degree = binomial(m, s);
  for (unsigned i = 0; i < s; ++i) {
    Integer d = binomial(s, i) * binomial(m - s, s - i);
    if (d != 0) out.entries.push_back({i + 1, d});
  }
  out.residual = out.degree - 1 - out.sum();
  return out;
}

SubdegreeList partition_action(unsigned s, unsigned t) {
  if (s < 2 || t < 2) throw std::invalid_argument("partition_action: need s, t >= 2");
  SubdegreeList out;
  out.degree = factorial(s * t) / (ipow(factorial(s), t) * factorial(t));
  for (unsigned j = 1; j <= t; ++j) {
    Integer d = s == 2 ? Integer(ipow(Integer(2), j - 1) * binomial(t, j)) : Integer(ipow(Integer(s), j) * binomial(t, j));
    out.entries.push_back({j, d});
  }
  out.residual = out.degree - 1 - out.sum();
  return out;
}

Factorization coset_degree(const Factorization& group, const Factorization& stabilizer) {
  auto q = group.divide(stabilizer);
  if (!q)
    throw std::invalid_argument("stabilizer order " + stabilizer.to_string() + " does not divide " +
                                group.to_string());
  return *q;
}

Factorization coset_degree(const GroupFamily& family, const Factorization& stabilizer) {
  return coset_degree(group_order(family), stabilizer);
}

Integer v_minus_one_p_part(const Integer& v, const Integer& p) {
  if (v < 2) throw std::invalid_argument("v_minus_one_p_part: need v >= 2");
  return p_parts(v - 1, p).p_part;
}

Integer action_degree(const ActionSpec& action) {
  struct Visitor {
    Integer operator()(const SubsetAction& a) const { return subset_action(a.m, a.s).degree; }
    Integer operator()(const PartitionAction& a) const { return partition_action(a.s, a.t).degree; }
    Integer operator()(const CosetAction& a) const { return coset_degree(a.group, a.stabilizer).value(); }
  };
  return std::visit(Visitor{}, action);
}

std::string describe(const ActionSpec& action) {
  struct Visitor {
    std::string operator()(const SubsetAction& a) const {
      return std::to_string(a.s) + "-subsets of " + std::to_string(a.m) + " points";
    }
    std::string operator()(const PartitionAction& a) const {
      return std::to_string(a.t) + " blocks of size " + std::to_string(a.s);
    }
    std::string operator()(const CosetAction& a) const {
      return "cosets of " + a.label + " in " + a.group.to_string();
    }
  };
  return std::visit(Visitor{}, action);
}

}  // namespace symdes
