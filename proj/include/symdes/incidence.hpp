#pragma once

/**
 * @file incidence.hpp
 * @brief Explicit symmetric designs, permutation automorphisms and
 *        flag-orbit verification.
 */

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "symdes/design_params.hpp"

namespace symdes {

/// Points are 0..v-1. Blocks are sorted, deduplicated point lists kept in
/// lexicographic order, each mirrored by a membership bitset.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Sorts and deduplicates; throws std::invalid_argument for a point
  /// outside 0..v-1.
  IncidenceStructure(int v, std::vector<std::vector<int>> blocks);

  int v() const { return v_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool incident(int point, std::size_t block) const { return members_[block][static_cast<std::size_t>(point)]; }
  /// Index of the block equal to the given sorted point list, if any.
  std::optional<std::size_t> find_block(const std::vector<int>& sorted_points) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  int v_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<boost::dynamic_bitset<>> members_;
};

/// Translates of the quadratic residues {1,3,4,5,9} mod 11.
IncidenceStructure build_biplane_11();

/// Points and lines of PG(2,n) for n prime. Point j is the j-th vector of
/// (1,a,b), (0,1,a), (0,0,1) in lexicographic order of (a,b).
/// Throws std::invalid_argument for composite n.
IncidenceStructure build_projective_plane(int n);

IncidenceStructure complement_structure(const IncidenceStructure& d);

struct DesignCheck {
  std::optional<DesignParams> params;
  std::string failure;  // first violated axiom when params is empty
};

DesignCheck verify_design(const IncidenceStructure& d);

/// A bijection of 0..n-1 given by its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless image is a bijection.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& image() const { return image_; }
  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

bool automorphism_check(const IncidenceStructure& d, const Permutation& g);

struct FlagOrbit {
  std::int64_t flags = 0;
  std::int64_t orbit = 0;
  std::int64_t point_orbit = 0;
  bool transitive = false;
};

/// Orbit of the first flag under the group generated by gens, found by
/// breadth-first search over flags. Throws std::invalid_argument when a
/// generator has the wrong degree or is not an automorphism.
FlagOrbit flag_transitive(const IncidenceStructure& d, const std::vector<Permutation>& gens);

/// Group given by generators; elements are enumerated on demand.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> gens);

  const std::vector<Permutation>& generators() const { return gens_; }
  /// All elements, or nothing when there are more than cap.
  std::optional<std::vector<Permutation>> elements(std::size_t cap = 100000) const;
  std::optional<std::uint64_t> order(std::size_t cap = 100000) const;

 private:
  std::vector<Permutation> gens_;
};

/// Three generators of PSL(2,11) in its action on the biplane points.
std::vector<Permutation> psl2_11_generators();

/// Elementary transvections of SL(3,n), n prime, acting on the points of
/// build_projective_plane(n).
std::vector<Permutation> psl3_generators(int n);

/// "v k" on the first line, then one block per line.
void write_structure(std::ostream& out, const IncidenceStructure& d);
/// Throws std::invalid_argument on malformed text.
IncidenceStructure read_structure(std::istream& in);

/// One permutation per line as its image list.
void write_generators(std::ostream& out, const std::vector<Permutation>& gens);
std::vector<Permutation> read_generators(std::istream& in);

}  // namespace symdes
