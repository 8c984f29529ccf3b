#include <doctest.h>

#include "support/oracles.hpp"
#include "symdes/actions.hpp"

using namespace symdes;

namespace {

std::vector<Integer> values(const SubdegreeList& l) {
  std::vector<Integer> out;
  for (const auto& e : l.entries) out.push_back(e.value);
  return out;
}

}  // namespace

TEST_SUITE("actions") {
  TEST_CASE("subset_action examples") {
    const SubdegreeList a = subset_action(10, 3);
    CHECK(a.degree == 120);
    CHECK(values(a) == std::vector<Integer>{35, 63, 21});
    CHECK(a.at(3) == 21);
    CHECK(a.complete());

    const SubdegreeList b = subset_action(9, 1);
    CHECK(b.degree == 9);
    CHECK(values(b) == std::vector<Integer>{8});

    const SubdegreeList c = subset_action(8, 2);
    CHECK(c.degree == 28);
    CHECK(values(c) == std::vector<Integer>{15, 12});
    CHECK_THROWS_AS(subset_action(4, 4), std::invalid_argument);
  }

  TEST_CASE("subset subdegrees sum to C(m,s) for m <= 30") {
    for (unsigned m = 2; m <= 30; ++m)
      for (unsigned s = 1; 2 * s <= m; ++s) {
        const SubdegreeList l = subset_action(m, s);
        CHECK(l.degree == oracle::pascal(m, s));
        CHECK(1 + l.sum() == oracle::pascal(m, s));
        CHECK(l.residual == 0);
      }
  }

  TEST_CASE("subset subdegrees match orbit enumeration for m <= 14") {
    for (unsigned m = 2; m <= 14; ++m)
      for (unsigned s = 1; 2 * s <= m; ++s) {
        const auto counts = oracle::subset_orbits_by_enumeration(m, s);
        const SubdegreeList l = subset_action(m, s);
        // d_{i+1} counts subsets meeting the base subset in i points.
        for (unsigned i = 0; i < s; ++i) CHECK(l.at(i + 1) == counts[i]);
        CHECK(counts[s] == 1);
      }
  }

  TEST_CASE("partition_action examples") {
    const SubdegreeList a = partition_action(2, 3);
    CHECK(a.degree == 15);
    CHECK(a.at(2) == 6);
    CHECK(partition_action(3, 2).degree == 10);
    CHECK(partition_action(4, 2).degree == 35);
    CHECK(partition_action(5, 2).degree == 126);
    CHECK_THROWS_AS(partition_action(1, 3), std::invalid_argument);
  }

  TEST_CASE("partition degrees match recursive counting and the odd product") {
    for (unsigned t = 2; t <= 10; ++t) {
      const Integer v = partition_action(2, t).degree;
      CHECK(v == oracle::double_factorial_odd(t));
      if (t <= 7) CHECK(v == oracle::Big(oracle::matchings_by_listing(t)));
      CHECK(v % 2 == 1);
    }
    for (unsigned s = 2; s <= 8; ++s)
      for (unsigned t = 2; t <= 8; ++t) CHECK(partition_action(s, t).degree == oracle::partitions_by_recursion(s * t, s));
  }

  TEST_CASE("coset_degree") {
    const Factorization a = coset_degree(parse_family("O(7,3)"), factorize(Integer(512) * 9 * 5 * 7));
    CHECK(a.to_string() == "3^7*13");
    const Factorization b = coset_degree(parse_family("O(9,3)"), factorize(Integer(16384) * 81 * 5 * 7));
    CHECK(b.to_string() == "3^12*5*13*41");
    CHECK(coset_degree(parse_family("PSL(2,11)"), factorize(60)).value() == 11);
    CHECK_THROWS_AS(coset_degree(parse_family("PSL(2,11)"), factorize(7)), std::invalid_argument);
  }

  TEST_CASE("coset_degree times stabilizer is the group order") {
    for (const char* g : {"PSL(2,11)", "PSL(3,3)", "O(7,3)", "PSU(4,2)", "A(8)"}) {
      const GroupFamily f = parse_family(g);
      const Factorization order = group_order(f);
      for (const auto& [p, e] : order.terms()) {
        const Factorization stab = Factorization::prime_power(p, e);
        CHECK((coset_degree(f, stab) * stab) == order);
      }
    }
  }

  TEST_CASE("v_minus_one_p_part") {
    CHECK(v_minus_one_p_part(15, 2) == 2);
    CHECK(v_minus_one_p_part(28431, 3) == 1);
    CHECK(v_minus_one_p_part(1025, 2) == 1024);
    CHECK_THROWS_AS(v_minus_one_p_part(1, 2), std::invalid_argument);
  }

  TEST_CASE("action_degree dispatch") {
    CHECK(action_degree(SubsetAction{10, 3}) == 120);
    CHECK(action_degree(PartitionAction{2, 3}) == 15);
    CHECK(action_degree(CosetAction{parse_family("PSL(2,11)"), factorize(60), "A5"}) == 11);
    CHECK_FALSE(describe(SubsetAction{10, 3}).empty());
  }
}
