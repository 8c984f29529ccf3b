#include "symdes/groups.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace symdes {

namespace {

std::uint64_t gcd4(const Integer& x) {
  if (x % 4 == 0) return 4;
  if (x % 2 == 0) return 2;
  return 1;
}

Integer q_int(const GroupFamily& g) { return Integer(g.q_value()); }

// Exponent of q in the order formula.
unsigned q_exponent(const GroupFamily& g) {
  const unsigned m = g.m;
  switch (g.kind) {
    case FamilyKind::linear:
    case FamilyKind::unitary: return m * (m - 1) / 2;
    case FamilyKind::symplectic:
    case FamilyKind::orthogonal_odd: return m * m;
    case FamilyKind::orthogonal_plus:
    case FamilyKind::orthogonal_minus: return m * (m - 1);
    default: return 0;
  }
}

// The centre divisor as the formula defines it, for any m and q.
std::uint64_t raw_center_divisor(const GroupFamily& g) {
  const std::uint64_t q = g.q_value();
  switch (g.kind) {
    case FamilyKind::linear: return std::gcd<std::uint64_t>(g.m, q - 1);
    case FamilyKind::unitary: return std::gcd<std::uint64_t>(g.m, q + 1);
    case FamilyKind::symplectic:
    case FamilyKind::orthogonal_odd: return std::gcd<std::uint64_t>(2, q - 1);
    case FamilyKind::orthogonal_plus:
      return static_cast<std::uint64_t>(gcd4(ipow(Integer(q), g.m) - 1));
    case FamilyKind::orthogonal_minus:
      return static_cast<std::uint64_t>(gcd4(ipow(Integer(q), g.m) + 1));
    default: throw std::invalid_argument("centre divisor is defined for classical families only");
  }
}

std::string kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::linear: return "PSL";
    case FamilyKind::unitary: return "PSU";
    case FamilyKind::symplectic: return "PSp";
    case FamilyKind::orthogonal_odd: return "O";
    case FamilyKind::orthogonal_plus: return "O+";
    case FamilyKind::orthogonal_minus: return "O-";
    case FamilyKind::alternating: return "A";
    case FamilyKind::symmetric: return "S";
  }
  return "?";
}

Rational inverse_power(const Integer& q, unsigned e) { return Rational(Integer(1), ipow(q, e)); }

}  // namespace

unsigned GroupFamily::natural_dimension() const {
  switch (kind) {
    case FamilyKind::symplectic:
    case FamilyKind::orthogonal_plus:
    case FamilyKind::orthogonal_minus: return 2 * m;
    case FamilyKind::orthogonal_odd: return 2 * m + 1;
    default: return m;
  }
}

std::uint64_t GroupFamily::characteristic() const {
  if (!q) throw std::invalid_argument(to_string() + " has no defining characteristic");
  return q->p;
}

std::uint64_t GroupFamily::q_value() const {
  if (!q) throw std::invalid_argument(to_string() + " has no field parameter");
  return q->value;
}

std::string GroupFamily::to_string() const {
  if (!classical()) return kind_name(kind) + "(" + std::to_string(m) + ")";
  const std::string qs = q ? std::to_string(q->value) : "?";
  return kind_name(kind) + "(" + std::to_string(natural_dimension()) + "," + qs + ")";
}

GroupFamily make_family(FamilyKind kind, unsigned m, std::uint64_t q) {
  if (m == 0) throw std::invalid_argument("family parameter m must be positive");
  GroupFamily g;
  g.kind = kind;
  g.m = m;
  if (g.classical()) {
    if (q < 2) throw std::invalid_argument("classical family needs a field size q >= 2");
    g.q = recognize_prime_power(q);
    if (!g.q) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  }
  return g;
}

GroupFamily parse_family(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' '; });
  static const std::regex classical_re(R"(^(PSL|PSU|PSp|O\+|O-|O)\((\d{1,4}),(\d{1,9})\)$)");
  static const std::regex perm_re(R"(^(A|S)\((\d{1,4})\)$)");
  std::smatch mt;
  if (std::regex_match(s, mt, perm_re)) {
    const unsigned m = static_cast<unsigned>(std::stoul(mt[2]));
    return make_family(mt[1] == "A" ? FamilyKind::alternating : FamilyKind::symmetric, m);
  }
  if (!std::regex_match(s, mt, classical_re))
    throw std::invalid_argument("unrecognised family '" + text +
                                "'; expected PSL(m,q) PSU(m,q) PSp(2m,q) O(2m+1,q) O+(2m,q) O-(2m,q) A(m) S(m)");
  const std::string name = mt[1];
  const unsigned dim = static_cast<unsigned>(std::stoul(mt[2]));
  const std::uint64_t q = std::stoull(mt[3]);
  if (name == "PSL") return make_family(FamilyKind::linear, dim, q);
  if (name == "PSU") return make_family(FamilyKind::unitary, dim, q);
  if (name == "O") {
    if (dim % 2 == 0) throw std::invalid_argument("O(n,q) needs odd n; use O+ or O- for even n");
    return make_family(FamilyKind::orthogonal_odd, dim / 2, q);
  }
  if (dim % 2 != 0) throw std::invalid_argument(name + "(n,q) needs even n");
  if (name == "PSp") return make_family(FamilyKind::symplectic, dim / 2, q);
  return make_family(name == "O+" ? FamilyKind::orthogonal_plus : FamilyKind::orthogonal_minus, dim / 2, q);
}

std::optional<std::string> admissibility_violation(const GroupFamily& g) {
  const unsigned m = g.m;
  if (g.classical() && !g.q) return "classical family without q";
  const std::uint64_t q = g.classical() ? g.q->value : 0;
  switch (g.kind) {
    case FamilyKind::linear:
      if (m < 2) return "PSL(m,q) needs m >= 2";
      if (m == 2 && (q == 2 || q == 3)) return "PSL(m,q) excludes (m,q) = (2,2), (2,3)";
      break;
    case FamilyKind::unitary:
      if (m < 3) return "PSU(m,q) needs m >= 3";
      if (m == 3 && q == 2) return "PSU(m,q) excludes (m,q) = (3,2)";
      break;
    case FamilyKind::symplectic:
      if (m < 2) return "PSp(2m,q) needs m >= 2";
      if (m == 2 && q == 2) return "PSp(2m,q) excludes (m,q) = (2,2)";
      break;
    case FamilyKind::orthogonal_odd:
      if (m < 3) return "O(2m+1,q) needs m >= 3";
      if (q % 2 == 0) return "O(2m+1,q) needs q odd";
      break;
    case FamilyKind::orthogonal_plus:
    case FamilyKind::orthogonal_minus:
      if (m < 4) return "O+-(2m,q) needs m >= 4";
      break;
    case FamilyKind::alternating:
    case FamilyKind::symmetric:
      if (m < 5) return "A(m), S(m) need m >= 5";
      break;
  }
  return std::nullopt;
}

void require_admissible(const GroupFamily& g) {
  if (auto why = admissibility_violation(g)) throw std::invalid_argument(g.to_string() + ": " + *why);
}

Integer order_formula(const GroupFamily& g) {
  const unsigned m = g.m;
  if (g.kind == FamilyKind::alternating) return factorial(m) / 2;
  if (g.kind == FamilyKind::symmetric) return factorial(m);
  const Integer q = q_int(g);
  Integer r = ipow(q, q_exponent(g));
  switch (g.kind) {
    case FamilyKind::linear:
      for (unsigned i = 2; i <= m; ++i) r *= ipow(q, i) - 1;
      break;
    case FamilyKind::unitary:
      for (unsigned i = 2; i <= m; ++i) r *= i % 2 == 0 ? Integer(ipow(q, i) - 1) : Integer(ipow(q, i) + 1);
      break;
    case FamilyKind::symplectic:
    case FamilyKind::orthogonal_odd:
      for (unsigned i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
      break;
    case FamilyKind::orthogonal_plus:
    case FamilyKind::orthogonal_minus:
      r *= g.kind == FamilyKind::orthogonal_plus ? Integer(ipow(q, m) - 1) : Integer(ipow(q, m) + 1);
      for (unsigned i = 1; i < m; ++i) r *= ipow(q, 2 * i) - 1;
      break;
    default: break;
  }
  return r / raw_center_divisor(g);
}

Integer group_order_value(const GroupFamily& g) {
  require_admissible(g);
  return order_formula(g);
}

Factorization group_order(const GroupFamily& g) {
  require_admissible(g);
  const unsigned m = g.m;
  Factorization f;
  if (!g.classical()) {
    for (unsigned i = 2; i <= m; ++i) f *= factorize(Integer(i));
    if (g.kind == FamilyKind::alternating) f = *f.divide(Factorization::prime_power(2, 1));
    return f;
  }
  const Integer q = q_int(g);
  f *= Factorization::prime_power(Integer(g.q->p), g.q->f * q_exponent(g));
  switch (g.kind) {
    case FamilyKind::linear:
      for (unsigned i = 2; i <= m; ++i) f *= factorize_power_minus_one(q, i);
      break;
    case FamilyKind::unitary:
      for (unsigned i = 2; i <= m; ++i)
        f *= i % 2 == 0 ? factorize_power_minus_one(q, i) : factorize_power_plus_one(q, i);
      break;
    case FamilyKind::symplectic:
    case FamilyKind::orthogonal_odd:
      for (unsigned i = 1; i <= m; ++i) f *= factorize_power_minus_one(q, 2 * i);
      break;
    default:
      f *= g.kind == FamilyKind::orthogonal_plus ? factorize_power_minus_one(q, m) : factorize_power_plus_one(q, m);
      for (unsigned i = 1; i < m; ++i) f *= factorize_power_minus_one(q, 2 * i);
      break;
  }
  const std::uint64_t d = raw_center_divisor(g);
  if (d > 1) f = *f.divide(factorize(Integer(d)));
  return f;
}

std::uint64_t center_divisor(const GroupFamily& g) {
  require_admissible(g);
  return raw_center_divisor(g);
}

std::uint64_t out_order(const GroupFamily& g) {
  require_admissible(g);
  if (g.kind == FamilyKind::alternating) return g.m == 6 ? 4 : 2;
  if (g.kind == FamilyKind::symmetric) return g.m == 6 ? 2 : 1;
  const std::uint64_t d = raw_center_divisor(g);
  const std::uint64_t f = g.q->f;
  const std::uint64_t p = g.q->p;
  switch (g.kind) {
    case FamilyKind::linear: return g.m == 2 ? d * f : 2 * d * f;
    case FamilyKind::unitary: return 2 * d * f;
    // (2,p)df at m = 2: the graph automorphism of PSp(4, 2^f) doubles Out.
    case FamilyKind::symplectic: return g.m == 2 ? std::gcd<std::uint64_t>(2, p) * d * f : d * f;
    case FamilyKind::orthogonal_odd: return 2 * f;
    case FamilyKind::orthogonal_plus: return g.m == 4 ? 6 * d * f : 2 * d * f;
    case FamilyKind::orthogonal_minus: return 2 * d * f;
    default: return 1;
  }
}

MinDegree min_degree_lower_bound(const GroupFamily& g) {
  require_admissible(g);
  if (!g.classical()) throw std::invalid_argument("minimal degree is only tabulated for classical families");
  const Integer q = q_int(g);
  const unsigned m = g.m;
  const std::string name = g.to_string();
  switch (g.kind) {
    case FamilyKind::linear:
      if (m < 5) throw std::invalid_argument(name + ": minimal degree tabulated for m >= 5 only");
      return {(ipow(q, m) - 1) / (q - 1), true, "(q^m-1)/(q-1)"};
    case FamilyKind::unitary: {
      if (m < 5) throw std::invalid_argument(name + ": minimal degree tabulated for m >= 5 only");
      if (q == 2 && m % 6 == 0)
        return {ipow(q, m - 1) * (ipow(q, m) - 1) / 3, false, "2^(m-1)(2^m-1)/3"};
      const Integer a = m % 2 == 0 ? Integer(ipow(q, m) - 1) : Integer(ipow(q, m) + 1);
      const Integer b = (m - 1) % 2 == 0 ? Integer(ipow(q, m - 1) - 1) : Integer(ipow(q, m - 1) + 1);
      return {a * b / (q * q - 1), false, "(q^m-(-1)^m)(q^(m-1)-(-1)^(m-1))/(q^2-1)"};
    }
    case FamilyKind::symplectic:
      if (q == 2) throw std::invalid_argument(name + ": minimal degree tabulated for q > 2 only");
      if (m == 2 && q == 3) return {27, true, "P(PSp(4,3)) = 27"};
      return {(ipow(q, 2 * m) - 1) / (q - 1), true, "(q^(2m)-1)/(q-1)"};
    case FamilyKind::orthogonal_odd:
      if (q == 3) return {ipow(q, m) * (ipow(q, m) - 1) / 2, true, "3^m(3^m-1)/2"};
      return {(ipow(q, 2 * m) - 1) / (q - 1), true, "(q^(2m)-1)/(q-1)"};
    case FamilyKind::orthogonal_plus:
      if (q == 2) return {ipow(q, m - 1) * (ipow(q, m) - 1), true, "2^(m-1)(2^m-1)"};
      [[fallthrough]];
    default:
      return {(ipow(q, m) + 1) * (ipow(q, m - 1) - 1) / (q - 1), false, "(q^m+1)(q^(m-1)-1)/(q-1)"};
  }
}

OrderBounds order_bounds(const GroupFamily& g) {
  if (!g.classical()) throw std::invalid_argument("order bounds apply to classical families only");
  const unsigned N = g.natural_dimension();
  const Integer q = q_int(g);
  const Rational one(1);
  OrderBounds b;
  b.natural_dimension = N;
  b.order = order_formula(g);

  switch (g.kind) {
    case FamilyKind::linear:
      if (N < 2) throw std::invalid_argument("linear order bounds need N >= 2");
      b.lower = Rational(ipow(q, N * N - 2));
      b.upper_base = (one - inverse_power(q, 2)) * Rational(ipow(q, N * N - 1));
      b.lower_text = "q^(N^2-2)";
      b.upper_text = "(1-q^-2) q^(N^2-1)";
      break;
    case FamilyKind::unitary:
      if (N < 2) throw std::invalid_argument("unitary order bounds need N >= 2");
      b.lower = (one - inverse_power(q, 1)) * Rational(ipow(q, N * N - 2));
      b.upper_base = (one - inverse_power(q, 2)) * (one + inverse_power(q, 3)) * Rational(ipow(q, N * N - 1));
      b.lower_text = "(1-q^-1) q^(N^2-2)";
      b.upper_text = "(1-q^-2)(1+q^-3) q^(N^2-1)";
      break;
    case FamilyKind::symplectic: {
      if (N < 4) throw std::invalid_argument("symplectic order bounds need N >= 4");
      const unsigned e = N * (N + 1) / 2;
      const Integer beta = q % 2 == 0 ? 1 : 2;
      b.lower = Rational(ipow(q, e), 2 * beta);
      b.upper_base = (one - inverse_power(q, 2)) * (one - inverse_power(q, 4)) * Rational(ipow(q, e));
      b.upper_inclusive = true;
      b.lower_text = "q^(N(N+1)/2)/(2 beta)";
      b.upper_text = "(1-q^-2)(1-q^-4) q^(N(N+1)/2)";
      break;
    }
    default: {
      if (N < 6) throw std::invalid_argument("orthogonal order bounds need N >= 6");
      const unsigned e = N * (N - 1) / 2;
      const Integer delta = q % 2 == 0 ? 2 : 1;
      b.lower = Rational(ipow(q, e), Integer(8));
      b.upper_base = Rational(delta) * (one - inverse_power(q, 2)) * (one - inverse_power(q, 4)) * Rational(ipow(q, e));
      if (N % 2 == 0) {
        b.upper_base *= one + inverse_power(q, N / 2);
      } else {
        b.half_power_factor = true;
      }
      b.lower_text = "q^(N(N-1)/2)/8";
      b.upper_text = "delta (1-q^-2)(1-q^-4)(1+q^(-N/2)) q^(N(N-1)/2)";
      break;
    }
  }

  const Rational x(b.order);
  b.above_lower = b.lower < x;
  if (!b.half_power_factor) {
    b.below_upper = x < b.upper_base;
    b.equals_upper = x == b.upper_base;
  } else {
    // x < B (1 + q^(-N/2)) iff r < 0 or r^2 q^N < 1, with r = x/B - 1 exact.
    const Rational r = x / b.upper_base - one;
    b.below_upper = r < 0 || r * r * Rational(ipow(q, N)) < one;
    b.equals_upper = false;
  }
  return b;
}

FactorialBoundVerdict factorial_power_bounds(unsigned t) {
  if (t < 1) throw std::invalid_argument("factorial_power_bounds: t must be positive");
  FactorialBoundVerdict v;
  v.t = t;
  v.factorial_cubed = ipow(factorial(t), 3);
  if (t >= 4) {
    v.base2_applies = true;
    v.base2_rhs = ipow(Integer(2), 4 * t * (t - 3));
    v.base2_holds = v.factorial_cubed < v.base2_rhs;
  }
  if (t >= 5) {
    v.base5_applies = true;
    v.base5_rhs = ipow(Integer(5), t * t - 3 * t + 1);
    v.base5_holds = v.factorial_cubed < v.base5_rhs;
  }
  return v;
}

}  // namespace symdes
