#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/oracles.hpp"
#include "symdes/brc.hpp"
#include "symdes/incidence.hpp"

using namespace symdes;

namespace {

std::vector<std::vector<int>> images(const std::vector<Permutation>& gens) {
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) out.push_back(g.image());
  return out;
}

Permutation affine_11(int a, int b) {
  std::vector<int> img(11);
  for (int x = 0; x < 11; ++x) img[static_cast<std::size_t>(x)] = (a * x + b) % 11;
  return Permutation(img);
}

}  // namespace

TEST_SUITE("incidence") {
  TEST_CASE("built structures have the expected parameters") {
    CHECK(verify_design(build_biplane_11()).params == DesignParams{11, 5, 2});
    CHECK(verify_design(complement_structure(build_biplane_11())).params == DesignParams{11, 6, 3});
    CHECK(verify_design(build_projective_plane(2)).params == DesignParams{7, 3, 1});
    CHECK(verify_design(complement_structure(build_projective_plane(2))).params == DesignParams{7, 4, 2});
    CHECK(verify_design(build_projective_plane(3)).params == DesignParams{13, 4, 1});
    CHECK(verify_design(complement_structure(build_projective_plane(3))).params == DesignParams{13, 9, 6});
    CHECK(verify_design(build_projective_plane(5)).params == DesignParams{31, 6, 1});
    CHECK_THROWS_AS(build_projective_plane(4), std::invalid_argument);
  }

  TEST_CASE("structure invariants on every built case") {
    std::vector<IncidenceStructure> all{build_biplane_11(), build_projective_plane(2), build_projective_plane(3),
                                        build_projective_plane(5), build_projective_plane(7)};
    for (const auto& d : all) {
      const auto p = verify_design(d).params;
      REQUIRE(p);
      const auto c = verify_design(complement_structure(d)).params;
      REQUIRE(c);
      CHECK(*c == complement(*p));
      CHECK(complement_structure(complement_structure(d)) == d);
      CHECK(brc_check(*p).pass);
      CHECK(brc_check(*c).pass);
    }
  }

  TEST_CASE("verify_design names the first failure") {
    auto blocks = build_biplane_11().blocks();
    // Swap one point of the first block for a point outside it.
    auto& b = blocks[0];
    for (int x = 0; x < 11; ++x)
      if (std::find(b.begin(), b.end(), x) == b.end()) {
        b.back() = x;
        break;
      }
    const DesignCheck r = verify_design(IncidenceStructure(11, blocks));
    CHECK_FALSE(r.params);
    CHECK(r.failure == "pair multiplicity non-constant");

    auto fewer = build_biplane_11().blocks();
    fewer.pop_back();
    CHECK(verify_design(IncidenceStructure(11, fewer)).failure.find("block count") == 0);
    CHECK_THROWS_AS(IncidenceStructure(3, {{0, 5}}), std::invalid_argument);
  }

  TEST_CASE("automorphism_check") {
    const IncidenceStructure d = build_biplane_11();
    CHECK(automorphism_check(d, affine_11(1, 1)));
    CHECK(automorphism_check(d, Permutation::identity(11)));
    // Multiplication by a residue fixes the residue set; by 2, a
    // non-residue mod 11, it maps {1,3,4,5,9} to the non-residues.
    CHECK(automorphism_check(d, affine_11(3, 0)));
    CHECK_FALSE(automorphism_check(d, affine_11(2, 0)));
    CHECK(automorphism_check(build_projective_plane(3), Permutation::identity(13)));
  }

  TEST_CASE("permutation algebra") {
    const Permutation a = affine_11(1, 1), b = affine_11(3, 0);
    CHECK((a * b)(1) == a(b(1)));
    CHECK(a * a.inverse() == Permutation::identity(11));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  }

  TEST_CASE("flag transitivity") {
    const IncidenceStructure b = build_biplane_11();
    const FlagOrbit f = flag_transitive(b, psl2_11_generators());
    CHECK(f.flags == 55);
    CHECK(f.orbit == 55);
    CHECK(f.transitive);
    CHECK(f.point_orbit == 11);

    const FlagOrbit t = flag_transitive(b, {affine_11(1, 1)});
    CHECK(t.orbit == 11);
    CHECK_FALSE(t.transitive);

    const IncidenceStructure pc = complement_structure(build_projective_plane(3));
    const FlagOrbit g = flag_transitive(pc, psl3_generators(3));
    CHECK(g.flags == 117);
    CHECK(g.orbit == 117);
    CHECK(g.transitive);

    CHECK_THROWS_AS(flag_transitive(b, {affine_11(2, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(flag_transitive(b, {Permutation::identity(5)}), std::invalid_argument);
  }

  TEST_CASE("orbit sizes divide vk and match the full closure") {
    struct Case {
      IncidenceStructure d;
      std::vector<Permutation> gens;
      std::size_t order;
    };
    std::vector<Case> cases{{build_biplane_11(), psl2_11_generators(), 660},
                            {build_projective_plane(2), psl3_generators(2), 168},
                            {complement_structure(build_projective_plane(3)), psl3_generators(3), 5616}};
    for (const auto& c : cases) {
      const FlagOrbit f = flag_transitive(c.d, c.gens);
      const auto p = *verify_design(c.d).params;
      CHECK((p.v * p.k) % f.orbit == 0);
      CHECK(f.point_orbit == p.v);
      CHECK(PermGroup(c.gens).order() == c.order);
      CHECK(oracle::closure_size(images(c.gens), 100000) == c.order);
      // Orbit of the first flag, counted from the full element list.
      const auto elements = *PermGroup(c.gens).elements();
      const int x = c.d.blocks()[0][0];
      std::set<std::pair<int, std::vector<int>>> orbit;
      for (const auto& g : elements) {
        std::vector<int> img;
        for (int y : c.d.blocks()[0]) img.push_back(g(y));
        std::sort(img.begin(), img.end());
        orbit.insert({g(x), img});
      }
      CHECK(static_cast<std::int64_t>(orbit.size()) == f.orbit);
    }
    CHECK_FALSE(PermGroup(psl3_generators(7)).order(1000));
  }

  TEST_CASE("text round trip") {
    const IncidenceStructure d = build_projective_plane(3);
    std::stringstream s;
    write_structure(s, d);
    CHECK(read_structure(s) == d);
    std::stringstream g;
    write_generators(g, psl3_generators(3));
    CHECK(read_generators(g) == psl3_generators(3));

    std::stringstream bad("3 2\n0 1\n0 1 2\n1 2\n");
    CHECK_THROWS_AS(read_structure(bad), std::invalid_argument);
    std::stringstream junk("x y\n");
    CHECK_THROWS_AS(read_structure(junk), std::invalid_argument);
    std::stringstream badgen("0 0 1\n");
    CHECK_THROWS_AS(read_generators(badgen), std::invalid_argument);
  }

  TEST_CASE("checked-in fixtures match the builders") {
    const std::string dir = SYMDES_FIXTURE_DIR;
    std::ifstream s(dir + "/biplane11.txt"), g(dir + "/biplane11.gens");
    REQUIRE(s);
    REQUIRE(g);
    CHECK(read_structure(s) == build_biplane_11());
    CHECK(read_generators(g) == psl2_11_generators());
    std::ifstream pc(dir + "/pg2_3_complement.txt"), pg(dir + "/pg2_3.gens");
    REQUIRE(pc);
    CHECK(read_structure(pc) == complement_structure(build_projective_plane(3)));
    CHECK(read_generators(pg) == psl3_generators(3));
  }
}
