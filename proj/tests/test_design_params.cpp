#include <doctest.h>

#include <numeric>

#include "support/oracles.hpp"
#include "symdes/design_params.hpp"

using namespace symdes;

TEST_SUITE("design-params") {
  TEST_CASE("validate_symmetric") {
    CHECK(validate_symmetric({11, 5, 2}).ok());
    CHECK(validate_symmetric({13, 9, 6}).ok());
    const ParamsVerdict bad = validate_symmetric({10, 6, 3});
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.pair_count_identity);
    CHECK_FALSE(bad.failures().empty());
    const ParamsVerdict trivial = validate_symmetric({10, 9, 8});
    CHECK(trivial.pair_count_identity);
    CHECK_FALSE(trivial.nontrivial);
    CHECK_FALSE(validate_symmetric({0, 0, 0}).positive);
  }

  TEST_CASE("lambda_ratio keeps non-integral values exact") {
    CHECK(lambda_ratio(10, 6) == boost::rational<std::int64_t>(10, 3));
    CHECK(lambda_ratio(36, 10) == boost::rational<std::int64_t>(18, 7));
    CHECK(lambda_ratio(45, 8) == boost::rational<std::int64_t>(14, 11));
    CHECK_FALSE(lambda_for(10, 6));
    CHECK(lambda_for(11, 5) == 2);
  }

  TEST_CASE("complement") {
    CHECK(complement({11, 5, 2}) == DesignParams{11, 6, 3});
    CHECK(complement({7, 3, 1}) == DesignParams{7, 4, 2});
    CHECK(complement({13, 4, 1}) == DesignParams{13, 9, 6});
  }

  TEST_CASE("decompose_prime_order") {
    auto a = decompose_prime_order({11, 5, 2});
    REQUIRE(a);
    CHECK(a->n == 3);
    CHECK(a->g == 1);
    CHECK_FALSE(a->point_count_identity);

    auto b = decompose_prime_order({13, 9, 6});
    REQUIRE(b);
    CHECK(b->n == 3);
    CHECK(b->g == 3);
    CHECK(b->k_star == 3);
    CHECK(b->lambda_star == 2);
    CHECK(b->point_count_identity == true);

    auto c = decompose_prime_order({7, 4, 2});
    REQUIRE(c);
    CHECK(c->n == 2);
    CHECK(c->g == 2);
    CHECK(c->k_star == 2);
    CHECK(c->lambda_star == 1);

    CHECK_FALSE(decompose_prime_order({16, 6, 2}));  // order 4
  }

  TEST_CASE("subdegree_filter") {
    CHECK(subdegree_filter(7, 21, 120).pass());
    CHECK_FALSE(subdegree_filter(7, 20, 120).pass());
    const SubdegreeVerdict s = subdegree_filter(14, 84, 4495);
    CHECK(s.pass());
    CHECK(s.gcd_v1_d == 42);
  }

  TEST_CASE("bound_v_lt_2k") {
    CHECK(bound_v_lt_2k(13, 9).pass);
    CHECK(bound_v_lt_2k(7, 4).pass);
    const BoundVerdict f = bound_v_lt_2k(120, 35);
    CHECK_FALSE(f.pass);
    CHECK(f.limit == 69);
    CHECK_THROWS_AS(bound_v_lt_2k(*decompose_prime_order({11, 5, 2}), 11, 5), std::invalid_argument);
  }

  TEST_CASE("every solution of the pair-count identity satisfies the complement identity (v <= 2000)") {
    std::size_t tuples = 0;
    for (std::int64_t v = 4; v <= 2000; ++v)
      for (std::int64_t k = 2; k < v - 1; ++k) {
        if ((k * (k - 1)) % (v - 1) != 0) continue;
        const std::int64_t lambda = k * (k - 1) / (v - 1);
        if (!(0 < lambda && lambda < k)) continue;
        ++tuples;
        const ParamsVerdict pv = validate_symmetric({v, k, lambda});
        CHECK(pv.pair_count_identity);
        CHECK(pv.complement_identity);
        CHECK((v - k) * lambda == (k - 1) * (k - lambda));
      }
    CHECK(tuples > 1000);
  }

  TEST_CASE("complement is an involution that preserves the order") {
    for (std::int64_t v = 4; v <= 600; ++v)
      for (std::int64_t k = 3; k < v - 2; ++k) {
        const auto lambda = lambda_for(v, k);
        if (!lambda) continue;
        const DesignParams p{v, k, *lambda};
        if (!validate_symmetric(p).ok()) continue;
        const DesignParams c = complement(p);
        CHECK(validate_symmetric(c).ok());
        CHECK(c.order() == p.order());
        CHECK(complement(c) == p);
      }
  }

  TEST_CASE("prime order with g = n gives k* - lambda* = 1 and v <= 2k - 1 (v <= 5000)") {
    std::size_t cases = 0;
    for (std::int64_t v = 4; v <= 5000; ++v)
      for (std::int64_t k = 3; k < v - 1; ++k) {
        if ((k * (k - 1)) % (v - 1) != 0) continue;
        const std::int64_t lambda = k * (k - 1) / (v - 1);
        if (!oracle::prime(k - lambda)) continue;
        const auto d = decompose_prime_order({v, k, lambda});
        REQUIRE(d);
        CHECK(d->g == std::gcd(k, lambda));
        if (d->g != d->n) continue;
        ++cases;
        CHECK(d->k_star - d->lambda_star == 1);
        CHECK(d->point_count_identity == true);
        CHECK(bound_v_lt_2k(*d, v, k).pass);
      }
    CHECK(cases > 10);
  }
}
