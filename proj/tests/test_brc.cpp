#include <doctest.h>

#include <numeric>

#include "support/oracles.hpp"
#include "symdes/brc.hpp"

using namespace symdes;

TEST_SUITE("brc") {
  TEST_CASE("classical gates") {
    const BrcVerdict a = brc_check({43, 7, 1});
    CHECK_FALSE(a.pass);
    REQUIRE(a.obstruction);
    CHECK(a.obstruction->prime == 3);
    CHECK(confirm_obstruction(a.normal_form, *a.obstruction));

    const BrcVerdict b = brc_check({7, 3, 1});
    CHECK(b.pass);
    REQUIRE(b.witness);
    CHECK(b.equation.evaluate(b.witness->x, b.witness->y, b.witness->z) == 0);

    const BrcVerdict c = brc_check({22, 7, 2});
    CHECK_FALSE(c.pass);
    CHECK(c.route == BrcVerdict::Route::even_square);
    CHECK(brc_check({16, 6, 2}).pass);  // order 4 is a square
  }

  TEST_CASE("brc_sign") {
    CHECK(brc_sign(7) == -1);
    CHECK(brc_sign(11) == -1);
    CHECK(brc_sign(13) == 1);
    CHECK(brc_sign(43) == -1);
  }

  TEST_CASE("normalize_ternary") {
    const NormalizedTernary a = normalize_ternary(6, 2, -1);
    CHECK(a.form == LegendreForm{3, 1, -2});
    CHECK(a.transform.z_scale == 2);
    CHECK(normalize_ternary(1, 1, -1).form == LegendreForm{1, 1, -1});
    CHECK(normalize_ternary(4, 9, -1).form == LegendreForm{1, 1, -1});
    CHECK(normalize_ternary(1, 1, 1).definite);
    CHECK_THROWS_AS(normalize_ternary(0, 1, -1), std::invalid_argument);
  }

  TEST_CASE("normal form solutions map back to the original equation") {
    for (std::int64_t a = -30; a <= 30; ++a)
      for (std::int64_t b = -30; b <= 30; ++b)
        for (std::int64_t c : {-12, -8, -6, -1, 1, 3, 18}) {
          if (a == 0 || b == 0) continue;
          const NormalizedTernary n = normalize_ternary(a, b, c);
          const LegendreResult r = legendre_solvable(n.form);
          if (!r.witness) continue;
          const TernaryWitness w = n.transform.apply(*r.witness);
          CHECK(w.nontrivial());
          CHECK(LegendreForm{a, b, c}.evaluate(w.x, w.y, w.z) == 0);
        }
  }

  TEST_CASE("legendre_solvable examples") {
    const LegendreResult a = legendre_solvable({1, 1, -6});
    CHECK_FALSE(a.solvable());
    REQUIRE(a.obstruction);
    CHECK(a.obstruction->prime == 3);

    const LegendreResult b = legendre_solvable({1, 1, -2});
    REQUIRE(b.witness);
    CHECK(LegendreForm{1, 1, -2}.evaluate(b.witness->x, b.witness->y, b.witness->z) == 0);

    // 3x^2 + y^2 = 2z^2 has no solution: modulo 3 it forces 3 | y, z.
    CHECK_FALSE(legendre_solvable({3, 1, -2}).solvable());
    const LegendreResult c = legendre_solvable({3, -1, -2});
    REQUIRE(c.witness);
    CHECK(LegendreForm{3, -1, -2}.evaluate(c.witness->x, c.witness->y, c.witness->z) == 0);

    const LegendreResult d = legendre_solvable({1, 1, 1});
    CHECK_FALSE(d.solvable());
    REQUIRE(d.obstruction);
    CHECK(d.obstruction->place == LocalObstruction::Place::real);
  }

  TEST_CASE("an exhausted witness search is reported separately") {
    const LegendreResult r = legendre_solvable({1, 1, -2}, 0);
    CHECK(r.status == Solvability::solvable_witness_not_found);
    CHECK(r.solvable());
  }

  TEST_CASE("legendre_solvable agrees with exhaustive search (coefficients up to 20)") {
    std::size_t forms = 0;
    for (std::int64_t a = 1; a <= 20; ++a)
      for (std::int64_t b = a; b <= 20; ++b)
        for (std::int64_t c = b; c <= 20; ++c) {
          if (!oracle::squarefree(a) || !oracle::squarefree(b) || !oracle::squarefree(c)) continue;
          if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
          for (auto [x, y, z] : {std::tuple{a, b, -c}, std::tuple{a, -b, c}, std::tuple{-a, b, c}}) {
            ++forms;
            const bool want = oracle::ternary_search(x, y, z, 400).has_value();
            const LegendreResult got = legendre_solvable({x, y, z});
            CHECK_MESSAGE(got.solvable() == want, x << " " << y << " " << z);
            if (got.obstruction) CHECK(confirm_obstruction({x, y, z}, *got.obstruction));
          }
        }
    CHECK(forms > 100);
  }

  TEST_CASE("every passing verdict carries a witness of the original equation") {
    for (std::int64_t v = 5; v <= 800; v += 2)
      for (std::int64_t k = 3; k < v - 1; ++k) {
        if ((k * (k - 1)) % (v - 1) != 0) continue;
        const DesignParams p{v, k, k * (k - 1) / (v - 1)};
        const BrcVerdict b = brc_check(p);
        if (!b.pass) {
          REQUIRE(b.obstruction);
          CHECK(confirm_obstruction(b.normal_form, *b.obstruction));
          continue;
        }
        REQUIRE(b.witness);
        CHECK(b.witness->nontrivial());
        CHECK(b.equation == LegendreForm{p.order(), brc_sign(v) * p.lambda, -1});
        CHECK(b.equation.evaluate(b.witness->x, b.witness->y, b.witness->z) == 0);
      }
  }

  TEST_CASE("prime order and even v never pass") {
    for (std::int64_t v = 4; v <= 3000; v += 2)
      for (std::int64_t k = 3; k < v - 1; ++k) {
        if ((k * (k - 1)) % (v - 1) != 0) continue;
        const std::int64_t lambda = k * (k - 1) / (v - 1);
        const BrcVerdict b = brc_check({v, k, lambda});
        CHECK(b.pass == oracle::perfect_square(k - lambda));
        if (oracle::prime(k - lambda)) CHECK_FALSE(b.pass);
        if (2 * k - lambda < v) CHECK(brc_check({v, v - k, v - 2 * k + lambda}).pass == b.pass);
      }
  }

  TEST_CASE("legendre_symbol") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 101})
      for (std::int64_t a = 0; a < p; ++a) {
        int want = 0;
        if (a % p != 0) {
          want = -1;
          for (std::int64_t x = 1; x < p; ++x)
            if ((x * x) % p == a) want = 1;
        }
        CHECK(legendre_symbol(a, p) == want);
      }
  }
}
