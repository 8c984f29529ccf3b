#include "symdes/design_params.hpp"

#include <numeric>
#include <stdexcept>

namespace symdes {

using wide = __int128;

std::string DesignParams::to_string() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
}

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::string> ParamsVerdict::failures() const {
  std::vector<std::string> out;
  if (!positive) out.emplace_back("parameters must be positive");
  if (!pair_count_identity) out.emplace_back("lambda(v-1) != k(k-1)");
  if (!complement_identity) out.emplace_back("(v-k)lambda != (k-1)(k-lambda)");
  if (!nontrivial) out.emplace_back("trivial: need 2 < k < v-1");
  return out;
}

ParamsVerdict validate_symmetric(const DesignParams& p) {
  ParamsVerdict r;
  r.positive = p.v >= 1 && p.k >= 1 && p.lambda >= 1;
  const wide v = p.v, k = p.k, l = p.lambda;
  r.pair_count_identity = l * (v - 1) == k * (k - 1);
  r.complement_identity = (v - k) * l == (k - 1) * (k - l);
  r.nontrivial = 2 < p.k && p.k < p.v - 1;
  return r;
}

boost::rational<std::int64_t> lambda_ratio(std::int64_t v, std::int64_t k) {
  if (v < 2) throw std::invalid_argument("lambda_ratio: v must be at least 2");
  return boost::rational<std::int64_t>(k * (k - 1), v - 1);
}

std::optional<std::int64_t> lambda_for(std::int64_t v, std::int64_t k) {
  auto r = lambda_ratio(v, k);
  if (r.denominator() != 1) return std::nullopt;
  return r.numerator();
}

DesignParams complement(const DesignParams& p) {
  DesignParams c{p.v, p.v - p.k, p.v - 2 * p.k + p.lambda};
  if (c.lambda <= 0)
    throw std::invalid_argument("complement of " + p.to_string() + " has v-2k+lambda <= 0");
  return c;
}

std::optional<PrimeOrderDecomposition> decompose_prime_order(const DesignParams& p) {
  const std::int64_t n = p.order();
  if (!is_prime_i64(n)) return std::nullopt;
  PrimeOrderDecomposition d;
  d.n = n;
  d.g = std::gcd(p.k, p.lambda);
  d.k_star = p.k / d.g;
  d.lambda_star = p.lambda / d.g;
  if (d.g == n) {
    const std::int64_t ks1 = d.k_star - 1;
    d.point_count_identity = ks1 > 0 && (n - 1) % ks1 == 0 &&
                             p.v == n * (d.k_star + 1) + (n - 1) / ks1;
  }
  return d;
}

std::vector<std::string> SubdegreeVerdict::failures() const {
  std::vector<std::string> out;
  if (k_divides_lambda_d == false) out.emplace_back("k does not divide lambda*d");
  if (!kstar_divides_d) out.emplace_back("k* does not divide d");
  if (!kstar_divides_gcd) out.emplace_back("k* does not divide gcd(v-1,d)=" + std::to_string(gcd_v1_d));
  return out;
}

SubdegreeVerdict subdegree_filter(std::int64_t k_star, std::int64_t d, std::int64_t v) {
  if (d < 1 || k_star < 1) throw std::invalid_argument("subdegree_filter: d and k* must be positive");
  SubdegreeVerdict r;
  r.gcd_v1_d = std::gcd(v - 1, d);
  r.kstar_divides_d = d % k_star == 0;
  r.kstar_divides_gcd = r.gcd_v1_d % k_star == 0;
  return r;
}

SubdegreeVerdict subdegree_filter(const DesignParams& p, std::int64_t d) {
  const std::int64_t g = std::gcd(p.k, p.lambda);
  SubdegreeVerdict r = subdegree_filter(p.k / g, d, p.v);
  r.k_divides_lambda_d = (wide(p.lambda) * d) % p.k == 0;
  return r;
}

BoundVerdict bound_v_lt_2k(std::int64_t v, std::int64_t k) {
  return {v <= 2 * k - 1, v, 2 * k - 1};
}

BoundVerdict bound_v_lt_2k(const PrimeOrderDecomposition& decomp, std::int64_t v, std::int64_t k) {
  if (decomp.g != decomp.n)
    throw std::invalid_argument("bound_v_lt_2k: requires gcd(k,lambda) = n");
  return bound_v_lt_2k(v, k);
}

}  // namespace symdes
