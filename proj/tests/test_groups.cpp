#include <doctest.h>

#include "support/oracles.hpp"
#include "symdes/groups.hpp"

using namespace symdes;

namespace {

GroupFamily fam(const std::string& s) { return parse_family(s); }

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("parse_family grammar") {
    CHECK(fam("PSL(5,3)") == make_family(FamilyKind::linear, 5, 3));
    CHECK(fam("PSp(6,3)").m == 3);
    CHECK(fam("O(7,3)").m == 3);
    CHECK(fam("O+(8,2)").kind == FamilyKind::orthogonal_plus);
    CHECK(fam("O-(10,4)").m == 5);
    CHECK(fam("A(7)").kind == FamilyKind::alternating);
    CHECK(fam("S(6)").kind == FamilyKind::symmetric);
    CHECK(fam("PSU(4,3)").to_string() == "PSU(4,3)");
    CHECK_THROWS_AS(fam("PSL(5,6)"), std::invalid_argument);
    CHECK_THROWS_AS(fam("PSp(5,3)"), std::invalid_argument);
    CHECK_THROWS_AS(fam("O(8,3)"), std::invalid_argument);
    CHECK_THROWS_AS(fam("PSL 5 3"), std::invalid_argument);
    CHECK_THROWS_AS(fam("G2(3)"), std::invalid_argument);
  }

  TEST_CASE("admissibility") {
    CHECK(admissibility_violation(fam("PSL(2,3)")));
    CHECK(admissibility_violation(fam("PSU(3,2)")));
    CHECK(admissibility_violation(fam("PSp(4,2)")));
    CHECK(admissibility_violation(fam("O(7,4)")));
    CHECK(admissibility_violation(fam("O+(6,3)")));
    CHECK(admissibility_violation(fam("A(4)")));
    CHECK_FALSE(admissibility_violation(fam("PSL(2,4)")));
    CHECK_THROWS_AS(group_order(fam("PSL(2,2)")), std::invalid_argument);
  }

  TEST_CASE("group_order") {
    CHECK(group_order(fam("O(7,3)")).to_string() == "2^9*3^9*5*7*13");
    CHECK(group_order(fam("PSL(2,11)")).value() == 660);
    CHECK(group_order(fam("A(7)")).value() == 2520);
    CHECK(group_order(fam("PSL(3,3)")).value() == 5616);
    CHECK(group_order(fam("PSU(3,3)")).value() == 6048);
    CHECK(group_order(fam("PSp(6,2)")).value() == 1451520);
    CHECK(group_order(fam("O+(8,2)")).value() == 174182400);
    CHECK(group_order(fam("O-(8,2)")).value() == 197406720);
  }

  TEST_CASE("factorized and evaluated orders agree with the cover formulas") {
    for (unsigned m = 2; m <= 8; ++m)
      for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const GroupFamily l = make_family(FamilyKind::linear, m, q);
        if (!admissibility_violation(l)) {
          CHECK(group_order(l).value() == group_order_value(l));
          CHECK(group_order_value(l) == oracle::sl(m, q) / oracle::gcd(m, q - 1));
          CHECK(center_divisor(l) == oracle::gcd(m, q - 1));
        }
        const GroupFamily u = make_family(FamilyKind::unitary, m, q);
        if (!admissibility_violation(u)) {
          CHECK(group_order(u).value() == group_order_value(u));
          CHECK(group_order_value(u) == oracle::su(m, q) / oracle::gcd(m, q + 1));
        }
        const GroupFamily s = make_family(FamilyKind::symplectic, m, q);
        if (!admissibility_violation(s)) {
          CHECK(group_order(s).value() == oracle::sp(2 * m, q) / oracle::gcd(2, q - 1));
        }
        const GroupFamily o = make_family(FamilyKind::orthogonal_odd, m, q);
        if (!admissibility_violation(o)) CHECK(group_order(o).value() == oracle::omega_odd(m, q));
        for (auto [kind, eps] : {std::pair{FamilyKind::orthogonal_plus, 1}, std::pair{FamilyKind::orthogonal_minus, -1}}) {
          const GroupFamily e = make_family(kind, m, q);
          if (!admissibility_violation(e)) CHECK(group_order(e).value() == oracle::p_omega_even(2 * m, q, eps));
        }
      }
  }

  TEST_CASE("small isomorphisms as order equalities") {
    for (std::uint64_t q = 3; q <= 49; q += 2) {
      if (!recognize_prime_power(q)) continue;
      CHECK(order_formula(make_family(FamilyKind::orthogonal_odd, 1, q)) ==
            order_formula(make_family(FamilyKind::linear, 2, q)));
      CHECK(order_formula(make_family(FamilyKind::orthogonal_odd, 2, q)) ==
            order_formula(make_family(FamilyKind::symplectic, 2, q)));
    }
    CHECK(order_formula(make_family(FamilyKind::linear, 2, 4)) == order_formula(make_family(FamilyKind::alternating, 5)));
    CHECK(order_formula(make_family(FamilyKind::linear, 4, 2)) == order_formula(make_family(FamilyKind::alternating, 8)));
  }

  TEST_CASE("out_order") {
    CHECK(out_order(fam("PSL(3,4)")) == 12);
    CHECK(out_order(fam("O+(8,3)")) == 24);
    CHECK(out_order(fam("O(7,5)")) == 2);
    CHECK(out_order(fam("A(6)")) == 4);
    CHECK(out_order(fam("A(7)")) == 2);
    CHECK(out_order(fam("S(6)")) == 2);
    CHECK(out_order(fam("PSL(2,11)")) == 2);
  }

  TEST_CASE("min_degree_lower_bound") {
    CHECK(min_degree_lower_bound(fam("PSL(5,3)")).value == 121);
    CHECK(min_degree_lower_bound(fam("PSp(4,5)")).value == 156);
    CHECK(min_degree_lower_bound(fam("O+(8,2)")).value == 120);
  }

  TEST_CASE("order bounds examples") {
    const OrderBounds b = order_bounds(fam("PSL(5,3)"));
    CHECK(b.order == 237783237120);
    CHECK(b.lower == Rational(ipow(3, 23)));
    CHECK(b.upper_base == Rational(8, 9) * Rational(ipow(3, 24)));
    CHECK(b.strictly_inside());

    // |SU(3,q)| = (1-q^-2)(1+q^-3) q^8 exactly; with (3, q+1) = 1 the
    // simple group attains the stated strict upper bound.
    const OrderBounds u = order_bounds(fam("PSU(3,4)"));
    CHECK(u.equals_upper);
    CHECK_FALSE(u.below_upper);
    const OrderBounds u5 = order_bounds(fam("PSU(3,5)"));
    CHECK(u5.strictly_inside());

    // Sp(4,2^f) attains the inclusive symplectic bound.
    const OrderBounds s = order_bounds(fam("PSp(4,4)"));
    CHECK(s.upper_inclusive);
    CHECK(s.equals_upper);
    CHECK(s.holds());

    CHECK_THROWS_AS(order_bounds(fam("A(7)")), std::invalid_argument);
  }

  TEST_CASE("order bounds hold (possibly with equality) for every admissible group of dimension up to 10") {
    std::size_t checked = 0, equalities = 0;
    for (FamilyKind kind : {FamilyKind::linear, FamilyKind::unitary, FamilyKind::symplectic, FamilyKind::orthogonal_odd,
                            FamilyKind::orthogonal_plus, FamilyKind::orthogonal_minus})
      for (unsigned m = 2; m <= 10; ++m)
        for (std::uint64_t q = 2; q <= 32; ++q) {
          if (!recognize_prime_power(q)) continue;
          const GroupFamily g = make_family(kind, m, q);
          if (admissibility_violation(g) || g.natural_dimension() > 10) continue;
          OrderBounds b;
          try {
            b = order_bounds(g);
          } catch (const std::invalid_argument&) {
            continue;
          }
          ++checked;
          CHECK_MESSAGE(b.above_lower, g.to_string());
          CHECK_MESSAGE((b.below_upper || b.equals_upper), g.to_string());
          if (b.equals_upper) {
            ++equalities;
            // |SL(2,q)| = (1-q^-2) q^3, |SU(3,q)| = (1-q^-2)(1+q^-3) q^8 and
            // |Sp(4,q)| = (1-q^-2)(1-q^-4) q^10 exactly; the simple group
            // reaches the bound when the centre is trivial.
            const bool sl2_even = kind == FamilyKind::linear && m == 2 && q % 2 == 0;
            const bool su3 = kind == FamilyKind::unitary && m == 3 && oracle::gcd(3, q + 1) == 1;
            const bool sp4_even = kind == FamilyKind::symplectic && m == 2 && q % 2 == 0;
            CHECK_MESSAGE((sl2_even || su3 || sp4_even), g.to_string());
          }
        }
    CHECK(checked > 200);
    CHECK(equalities > 0);
  }

  TEST_CASE("factorial power bounds") {
    const FactorialBoundVerdict t4 = factorial_power_bounds(4);
    CHECK(t4.base2_applies);
    CHECK(t4.base2_holds);
    CHECK(t4.factorial_cubed == 13824);
    CHECK(t4.base2_rhs == 65536);
    const FactorialBoundVerdict t5 = factorial_power_bounds(5);
    CHECK(t5.base5_applies);
    CHECK(t5.base5_holds);
    CHECK(t5.base5_rhs == 48828125);
    CHECK_FALSE(factorial_power_bounds(3).base2_applies);
    for (unsigned t = 4; t <= 40; ++t) {
      const FactorialBoundVerdict f = factorial_power_bounds(t);
      CHECK(f.base2_holds);
      if (t >= 5) CHECK(f.base5_holds);
    }
  }
}
