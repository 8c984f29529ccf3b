#include "symdes/brc.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/integer.hpp>

namespace symdes {

namespace bmp = boost::multiprecision;

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

int sign_of(const Integer& x) { return x < 0 ? -1 : 1; }

bool squarefree(const Integer& x) {
  const Factorization f = factorize(abs_value(x));
  for (const auto& [p, e] : f.terms())
    if (e > 1) return false;
  return true;
}

bool same_sign(const std::array<Integer, 3>& c) {
  return sign_of(c[0]) == sign_of(c[1]) && sign_of(c[1]) == sign_of(c[2]);
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r = a % m;
  return r < 0 ? Integer(r + m) : r;
}

// Holzer-box search with machine integers; every bound fits comfortably.
std::optional<TernaryWitness> small_witness_search(std::int64_t a, std::int64_t b, std::int64_t c,
                                                    std::uint64_t cap, bool& exhausted) {
  using wide = __int128;
  const std::int64_t xmax = static_cast<std::int64_t>(isqrt(Integer(std::abs(b * c))));
  const std::int64_t ymax = static_cast<std::int64_t>(isqrt(Integer(std::abs(a * c))));
  const std::int64_t zmax = static_cast<std::int64_t>(isqrt(Integer(std::abs(a * b))));
  std::uint64_t examined = 0;
  for (std::int64_t x = 0; x <= xmax; ++x) {
    for (std::int64_t y = 0; y <= ymax; ++y) {
      if (x == 0 && y == 0) continue;
      if (++examined > cap) {
        exhausted = true;
        return std::nullopt;
      }
      const wide s = wide(a) * x * x + wide(b) * y * y;
      if (s % c != 0) continue;
      const wide zz = -s / c;
      if (zz < 0) continue;
      const auto z = static_cast<std::int64_t>(isqrt(Integer(static_cast<std::int64_t>(zz))));
      if (wide(z) * z == zz && z <= zmax) return TernaryWitness{x, y, z};
    }
  }
  return std::nullopt;
}

std::optional<TernaryWitness> big_witness_search(const LegendreForm& f, std::uint64_t cap,
                                                  bool& exhausted) {
  const Integer xmax = isqrt(abs_value(f.b * f.c));
  const Integer ymax = isqrt(abs_value(f.a * f.c));
  const Integer zmax = isqrt(abs_value(f.a * f.b));
  std::uint64_t examined = 0;
  for (Integer x = 0; x <= xmax; ++x) {
    for (Integer y = 0; y <= ymax; ++y) {
      if (x == 0 && y == 0) continue;
      if (++examined > cap) {
        exhausted = true;
        return std::nullopt;
      }
      const Integer s = f.a * x * x + f.b * y * y;
      if (s % f.c != 0) continue;
      const Integer zz = -s / f.c;
      if (zz < 0) continue;
      const Integer z = isqrt(zz);
      if (z * z == zz && z <= zmax) return TernaryWitness{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string LocalObstruction::describe() const {
  if (place == Place::real) return "definite form: no real solution";
  static constexpr const char* names[] = {"a", "b", "c"};
  std::string which = coefficient >= 0 && coefficient < 3 ? names[coefficient] : "?";
  return "no solution mod " + prime.str() + ": " + residue.str() +
         " is not a square modulo " + prime.str() + " (prime divides " + which + ")";
}

int legendre_symbol(const Integer& a, const Integer& p) {
  Integer r = mod_positive(a, p);
  if (r == 0) return 0;
  Integer e = bmp::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int brc_sign(std::int64_t v) {
  if (v % 2 == 0) throw std::invalid_argument("brc_sign: v must be odd");
  return (v % 4 == 1) ? 1 : -1;
}

NormalizedTernary normalize_ternary(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("normalize_ternary: zero coefficient");
  std::array<Integer, 3> co{a, b, c};
  std::array<Integer, 3> scale{1, 1, 1};

  bool changed = true;
  while (changed) {
    changed = false;
    // c_i = c_i' s^2: a solution of the reduced form lifts by scaling the
    // other two variables by s.
    for (int i = 0; i < 3; ++i) {
      Integer s = 1;
      const Factorization f = factorize(abs_value(co[i]));
      for (const auto& [p, e] : f.terms()) s *= ipow(p, e / 2);
      if (s == 1) continue;
      co[i] /= s * s;
      for (int j = 0; j < 3; ++j)
        if (j != i) scale[j] *= s;
      changed = true;
    }
    // g = gcd(c_i, c_j): (c_i/g, c_j/g, g c_k) lifts by scaling the third
    // variable by g.
    for (int i = 0; i < 3 && !changed; ++i) {
      for (int j = i + 1; j < 3 && !changed; ++j) {
        Integer g = bmp::gcd(abs_value(co[i]), abs_value(co[j]));
        if (g == 1) continue;
        const int k = 3 - i - j;
        co[i] /= g;
        co[j] /= g;
        co[k] *= g;
        scale[k] *= g;
        changed = true;
      }
    }
  }

  NormalizedTernary out;
  out.form = {co[0], co[1], co[2]};
  out.transform = {scale[0], scale[1], scale[2]};
  out.definite = same_sign(co);
  return out;
}

LegendreResult legendre_solvable(const LegendreForm& form, std::uint64_t search_cap) {
  const std::array<Integer, 3> co{form.a, form.b, form.c};
  for (const auto& x : co) {
    if (x == 0 || !squarefree(x))
      throw std::invalid_argument("legendre_solvable: coefficients must be nonzero and squarefree");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (bmp::gcd(abs_value(co[i]), abs_value(co[j])) != 1)
        throw std::invalid_argument("legendre_solvable: coefficients must be pairwise coprime");

  LegendreResult result;
  if (same_sign(co)) {
    result.status = Solvability::unsolvable;
    result.obstruction = LocalObstruction{LocalObstruction::Place::real, 0, -1, 0};
    return result;
  }

  // -bc must be a square mod |a|, and cyclically. Modulo 2 every unit is
  // a square, so only odd primes can obstruct.
  for (int i = 0; i < 3; ++i) {
    const Integer residue = -co[(i + 1) % 3] * co[(i + 2) % 3];
    for (const auto& p : factorize(abs_value(co[i])).primes()) {
      if (p == 2) continue;
      if (legendre_symbol(residue, p) != 1) {
        result.status = Solvability::unsolvable;
        result.obstruction =
            LocalObstruction{LocalObstruction::Place::prime, p, i, mod_positive(residue, p)};
        return result;
      }
    }
  }

  bool exhausted = false;
  constexpr std::int64_t small = std::int64_t{1} << 20;
  const bool fits = abs_value(form.a) < small && abs_value(form.b) < small && abs_value(form.c) < small;
  result.witness = fits ? small_witness_search(static_cast<std::int64_t>(form.a),
                                               static_cast<std::int64_t>(form.b),
                                               static_cast<std::int64_t>(form.c), search_cap, exhausted)
                        : big_witness_search(form, search_cap, exhausted);
  result.status = result.witness ? Solvability::solvable : Solvability::solvable_witness_not_found;
  return result;
}

bool confirm_obstruction(const LegendreForm& form, const LocalObstruction& obstruction) {
  const std::array<Integer, 3> co{form.a, form.b, form.c};
  if (obstruction.place == LocalObstruction::Place::real) return same_sign(co);

  const Integer& p = obstruction.prime;
  if (p > 1000) throw std::invalid_argument("confirm_obstruction: prime too large for residue scan");
  const std::int64_t pp = static_cast<std::int64_t>(p);
  const std::int64_t m = pp * pp;

  // Solve for a variable whose coefficient is a unit mod p.
  int solved = -1;
  for (int i = 0; i < 3; ++i)
    if (co[i] % p != 0) solved = i;
  if (solved < 0) return false;
  const int u = (solved + 1) % 3, w = (solved + 2) % 3;

  std::vector<std::int64_t> coef(3);
  for (int i = 0; i < 3; ++i) coef[i] = static_cast<std::int64_t>(mod_positive(co[i], m));
  const std::int64_t inv = static_cast<std::int64_t>(
      bmp::powm(Integer(coef[solved]), Integer(pp * (pp - 1) - 1), Integer(m)));

  std::vector<std::vector<std::int64_t>> roots(m);
  for (std::int64_t z = 0; z < m; ++z) roots[(z * z) % m].push_back(z);

  for (std::int64_t x = 0; x < m; ++x) {
    for (std::int64_t y = 0; y < m; ++y) {
      const std::int64_t s = (coef[u] * ((x * x) % m) + coef[w] * ((y * y) % m)) % m;
      const std::int64_t target = (((m - s) % m) * inv) % m;
      for (std::int64_t z : roots[target])
        if (x % pp != 0 || y % pp != 0 || z % pp != 0) return false;
    }
  }
  return true;
}

BrcVerdict brc_check(const DesignParams& params) {
  BrcVerdict out;
  const std::int64_t n = params.order();
  if (params.v % 2 == 0) {
    out.route = BrcVerdict::Route::even_square;
    out.pass = n >= 0 && is_square(Integer(n));
    out.evidence = out.pass ? "v even and n = " + std::to_string(n) + " is a square"
                            : "v even and n = " + std::to_string(n) + " is not a square";
    return out;
  }

  out.route = BrcVerdict::Route::odd_ternary;
  const int sign = brc_sign(params.v);
  out.equation = {Integer(n), Integer(sign * params.lambda), Integer(-1)};
  if (n <= 0 || params.lambda <= 0) {
    out.pass = false;
    out.evidence = "order and lambda must be positive";
    return out;
  }

  const NormalizedTernary norm = normalize_ternary(out.equation.a, out.equation.b, out.equation.c);
  out.normal_form = norm.form;
  LegendreResult lr = legendre_solvable(norm.form);
  out.pass = lr.solvable();
  out.obstruction = lr.obstruction;
  out.witness_search_exhausted = lr.status == Solvability::solvable_witness_not_found;
  if (lr.witness) {
    out.witness = norm.transform.apply(*lr.witness);
    if (out.equation.evaluate(out.witness->x, out.witness->y, out.witness->z) != 0)
      throw std::logic_error("brc_check: witness failed to lift to the original equation");
  }
  if (out.pass && out.witness) {
    out.evidence = "witness (x,y,z) = (" + out.witness->x.str() + "," + out.witness->y.str() + "," +
                   out.witness->z.str() + ")";
  } else if (out.pass) {
    out.evidence = "local conditions hold; witness search exhausted its cap";
  } else {
    out.evidence = lr.obstruction->describe();
  }
  return out;
}

}  // namespace symdes
