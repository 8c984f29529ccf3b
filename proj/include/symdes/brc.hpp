#pragma once

/**
 * @file brc.hpp
 * @brief Bruck-Ryser-Chowla gate and a certified decision procedure for
 *        ternary forms a x^2 + b y^2 + c z^2 = 0.
 *
 * The decision itself is Legendre's criterion on the squarefree, pairwise
 * coprime normal form. A witness is then looked for inside Holzer's box
 * (|x| <= sqrt|bc|, |y| <= sqrt|ca|, |z| <= sqrt|ab|); an unsolvable form
 * comes with the prime (or the real place) that obstructs it.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "symdes/arith.hpp"
#include "symdes/design_params.hpp"

namespace symdes {

struct LegendreForm {
  Integer a, b, c;

  Integer evaluate(const Integer& x, const Integer& y, const Integer& z) const {
    return a * x * x + b * y * y + c * z * z;
  }
  friend bool operator==(const LegendreForm&, const LegendreForm&) = default;
};

struct TernaryWitness {
  Integer x, y, z;
  bool nontrivial() const { return x != 0 || y != 0 || z != 0; }
};

/// Diagonal substitution taking a solution of the normal form back to the
/// original form: (x, y, z) -> (x_scale x, y_scale y, z_scale z).
struct TernaryTransform {
  Integer x_scale = 1, y_scale = 1, z_scale = 1;

  TernaryWitness apply(const TernaryWitness& w) const {
    return {w.x * x_scale, w.y * y_scale, w.z * z_scale};
  }
};

struct NormalizedTernary {
  LegendreForm form;
  TernaryTransform transform;
  /// All three coefficients share a sign: no real, hence no integer, solution.
  bool definite = false;
};

/// Strips square factors and clears common factors pairwise. Throws
/// std::invalid_argument when a coefficient is zero.
NormalizedTernary normalize_ternary(const Integer& a, const Integer& b, const Integer& c);

struct LocalObstruction {
  enum class Place { real, prime } place = Place::prime;
  Integer prime = 0;
  /// Index (0, 1, 2) of the coefficient the prime divides.
  int coefficient = -1;
  /// The residue that fails to be a square modulo `prime`.
  Integer residue = 0;

  std::string describe() const;
};

enum class Solvability { solvable, solvable_witness_not_found, unsolvable };

struct LegendreResult {
  Solvability status = Solvability::unsolvable;
  std::optional<TernaryWitness> witness;
  std::optional<LocalObstruction> obstruction;

  bool solvable() const { return status != Solvability::unsolvable; }
};

/// Default cap on candidate (x, y) pairs examined by the witness search.
inline constexpr std::uint64_t kWitnessSearchCap = 50'000'000;

/// The form must be squarefree and pairwise coprime; a definite form is
/// reported unsolvable at the real place.
LegendreResult legendre_solvable(const LegendreForm& form, std::uint64_t search_cap = kWitnessSearchCap);

/// Re-derives an obstruction without Legendre's criterion: for a prime,
/// exhausts residues mod p^2 and confirms no primitive solution exists;
/// for the real place, checks the signs.
bool confirm_obstruction(const LegendreForm& form, const LocalObstruction& obstruction);

struct BrcVerdict {
  enum class Route { even_square, odd_ternary } route = Route::odd_ternary;
  bool pass = false;
  bool witness_search_exhausted = false;
  /// Original equation (k-lambda) x^2 + sign lambda y^2 = z^2 (odd v).
  LegendreForm equation;
  std::optional<TernaryWitness> witness;
  std::optional<LocalObstruction> obstruction;
  LegendreForm normal_form;
  std::string evidence;
};

/// Even v: pass iff k-lambda is a square. Odd v: pass iff
/// (k-lambda) x^2 + (-1)^((v-1)/2) lambda y^2 = z^2 has a non-zero solution.
BrcVerdict brc_check(const DesignParams& params);

/// (-1)^((v-1)/2) for odd v, read off v mod 4.
int brc_sign(std::int64_t v);

/// Legendre symbol (a/p) for an odd prime p: -1, 0 or 1.
int legendre_symbol(const Integer& a, const Integer& p);

}  // namespace symdes
