#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer arithmetic: primality, factorization, p-parts.
 *
 * Everything here works on unbounded integers. Nothing is ever rounded;
 * all comparisons downstream are made on exact values.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symdes {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Strong probable-prime test. Deterministic below 3.3e24, which covers
/// every prime this library ever needs to certify.
bool is_prime(const Integer& n);

Integer ipow(const Integer& base, unsigned exponent);
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
Integer factorial(unsigned n);
Integer binomial(unsigned m, unsigned s);

/// A prime power q = p^f.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned f = 0;
  std::uint64_t value = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::optional<PrimePower> recognize_prime_power(std::uint64_t q);

/// Ordered list of prime powers (p ascending, exponent >= 1).
class Factorization {
 public:
  using Term = std::pair<Integer, unsigned>;

  Factorization() = default;

  static Factorization prime_power(const Integer& p, unsigned e);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Integer value() const;
  unsigned exponent(const Integer& p) const;
  std::vector<Integer> primes() const;

  /// Largest power of p dividing the value.
  Integer p_part(const Integer& p) const;
  /// value() / p_part(p).
  Integer p_prime_part(const Integer& p) const;

  Factorization& operator*=(const Factorization& other);
  friend Factorization operator*(Factorization a, const Factorization& b) {
    a *= b;
    return a;
  }

  bool divides(const Factorization& other) const;
  /// Exact quotient; empty when divisor does not divide *this.
  std::optional<Factorization> divide(const Factorization& divisor) const;

  /// "2^9*3^9*5*7*13"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument for a == 0.
Factorization factorize(const Integer& a);

/// Factorization of q^e - 1 and q^e + 1, split along cyclotomic factors
/// first so that only small cofactors ever reach Pollard rho.
Factorization factorize_power_minus_one(const Integer& q, unsigned e);
Factorization factorize_power_plus_one(const Integer& q, unsigned e);

struct PParts {
  Integer p_part;
  Integer p_prime_part;
};

/// a = a_p * a_p' with a_p a power of p and p not dividing a_p'.
/// Throws std::invalid_argument when p is not prime or a < 1.
PParts p_parts(const Integer& a, const Integer& p);

}  // namespace symdes
