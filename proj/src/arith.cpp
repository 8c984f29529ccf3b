#include "symdes/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace symdes {

namespace bmp = boost::multiprecision;

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1u << 16;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool strong_probable_prime(const Integer& n, const Integer& d, unsigned r, unsigned base) {
  Integer x = bmp::powm(Integer(base), d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

Integer gcd(const Integer& a, const Integer& b) { return bmp::gcd(a, b); }

// Brent's variant of Pollard rho. Returns a non-trivial divisor of a
// composite n, or n itself if this constant c fails.
Integer pollard_brent(const Integer& n, unsigned c) {
  if (bmp::bit_test(n, 0) == false) return Integer(2);
  auto step = [&](const Integer& v) { return (v * v + c) % n; };
  Integer y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  constexpr std::uint64_t batch = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
        y = step(y);
        q = (q * (x > y ? x - y : y - x)) % n;
      }
      g = gcd(q, n);
      k += batch;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned c = 1;; ++c) {
    Integer d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_into(d, out);
      split_into(n / d, out);
      return;
    }
  }
}

Factorization from_map(const std::map<Integer, unsigned>& m) {
  Factorization f;
  for (const auto& [p, e] : m) f *= Factorization::prime_power(p, e);
  return f;
}

std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int moebius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Phi_n(q) = prod_{d | n} (q^d - 1)^{mu(n/d)}
Integer cyclotomic_value(const Integer& q, unsigned n) {
  Integer num = 1, den = 1;
  for (unsigned d : divisors_of(n)) {
    int mu = moebius(n / d);
    if (mu == 1) num *= ipow(q, d) - 1;
    if (mu == -1) den *= ipow(q, d) - 1;
  }
  return num / den;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (std::uint32_t p : small_primes()) {
    if (n == p) return true;
    if (n % p == 0) return false;
    if (Integer(p) * p > n) return true;
  }
  Integer d = n - 1;
  unsigned r = 0;
  while (!bmp::bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  // The first 13 prime bases are deterministic below 3.3e24; past that the
  // longer list keeps the error probability below 4^-24.
  static constexpr unsigned bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                       41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (unsigned a : bases)
    if (!strong_probable_prime(n, d, r, a)) return false;
  return true;
}

Integer ipow(const Integer& base, unsigned exponent) { return bmp::pow(base, exponent); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative integer");
  return bmp::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = bmp::sqrt(n);
  return r * r == n;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(unsigned m, unsigned s) {
  if (s > m) return 0;
  s = std::min(s, m - s);
  Integer r = 1;
  for (unsigned i = 1; i <= s; ++i) r = r * (m - s + i) / i;
  return r;
}

std::optional<PrimePower> recognize_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("recognize_prime_power: q must be >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1, q};
  std::uint64_t rest = q;
  unsigned f = 0;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, f, q};
}

// Factorization

Factorization Factorization::prime_power(const Integer& p, unsigned e) {
  Factorization f;
  if (e > 0) f.terms_.emplace_back(p, e);
  return f;
}

Integer Factorization::value() const {
  Integer r = 1;
  for (const auto& [p, e] : terms_) r *= ipow(p, e);
  return r;
}

unsigned Factorization::exponent(const Integer& p) const {
  for (const auto& [q, e] : terms_)
    if (q == p) return e;
  return 0;
}

std::vector<Integer> Factorization::primes() const {
  std::vector<Integer> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

Integer Factorization::p_part(const Integer& p) const { return ipow(p, exponent(p)); }

Integer Factorization::p_prime_part(const Integer& p) const {
  Integer r = 1;
  for (const auto& [q, e] : terms_)
    if (q != p) r *= ipow(q, e);
  return r;
}

Factorization& Factorization::operator*=(const Factorization& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

bool Factorization::divides(const Factorization& other) const {
  for (const auto& [p, e] : terms_)
    if (other.exponent(p) < e) return false;
  return true;
}

std::optional<Factorization> Factorization::divide(const Factorization& divisor) const {
  if (!divisor.divides(*this)) return std::nullopt;
  Factorization out;
  for (const auto& [p, e] : terms_) {
    unsigned rest = e - divisor.exponent(p);
    if (rest > 0) out.terms_.emplace_back(p, rest);
  }
  return out;
}

std::string Factorization::to_string() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : terms_) {
    if (!s.empty()) s += '*';
    s += p.str();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

Factorization factorize(const Integer& a) {
  if (a <= 0) throw std::invalid_argument("factorize: argument must be positive");
  std::map<Integer, unsigned> found;
  Integer rest = a;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[Integer(p)];
    }
  }
  split_into(rest, found);
  return from_map(found);
}

Factorization factorize_power_minus_one(const Integer& q, unsigned e) {
  if (q < 2 || e == 0) throw std::invalid_argument("factorize_power_minus_one: need q >= 2, e >= 1");
  Factorization f;
  for (unsigned d : divisors_of(e)) f *= factorize(cyclotomic_value(q, d));
  return f;
}

Factorization factorize_power_plus_one(const Integer& q, unsigned e) {
  if (q < 2 || e == 0) throw std::invalid_argument("factorize_power_plus_one: need q >= 2, e >= 1");
  Factorization f;
  for (unsigned d : divisors_of(2 * e))
    if (e % d != 0) f *= factorize(cyclotomic_value(q, d));
  return f;
}

PParts p_parts(const Integer& a, const Integer& p) {
  if (a < 1) throw std::invalid_argument("p_parts: a must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p_parts: " + p.str() + " is not prime");
  Integer part = 1, rest = a;
  while (rest % p == 0) {
    rest /= p;
    part *= p;
  }
  return {part, rest};
}

}  // namespace symdes
