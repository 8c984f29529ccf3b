#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace symdes {

/// Parameters (v, k, lambda) of a symmetric 2-design.
struct DesignParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;

  std::int64_t order() const { return k - lambda; }
  std::string to_string() const;

  friend auto operator<=>(const DesignParams&, const DesignParams&) = default;
};

/// Each defining condition is reported on its own so callers can cite
/// exactly which one failed.
struct ParamsVerdict {
  bool positive = false;
  bool pair_count_identity = false;   // lambda(v-1) = k(k-1)
  bool complement_identity = false;   // (v-k)lambda = (k-1)(k-lambda)
  bool nontrivial = false;            // 2 < k < v-1

  bool ok() const { return positive && pair_count_identity && complement_identity && nontrivial; }
  std::vector<std::string> failures() const;
};

ParamsVerdict validate_symmetric(const DesignParams& params);

/// lambda = k(k-1)/(v-1) as a reduced fraction (v >= 2).
boost::rational<std::int64_t> lambda_ratio(std::int64_t v, std::int64_t k);
/// The integral lambda, if k(k-1)/(v-1) is an integer.
std::optional<std::int64_t> lambda_for(std::int64_t v, std::int64_t k);

/// (v, v-k, v-2k+lambda). Throws std::invalid_argument if the complement
/// would have v-2k+lambda <= 0.
DesignParams complement(const DesignParams& params);

/// k = g k*, lambda = g lambda* with g = gcd(k, lambda) and prime order n.
struct PrimeOrderDecomposition {
  std::int64_t n = 0;
  std::int64_t g = 0;
  std::int64_t k_star = 0;
  std::int64_t lambda_star = 0;
  /// Only meaningful when g == n: (k*-1) | (n-1) and
  /// v = n(k*+1) + (n-1)/(k*-1).
  std::optional<bool> point_count_identity;
};

/// Empty when k - lambda is not prime.
std::optional<PrimeOrderDecomposition> decompose_prime_order(const DesignParams& params);

struct SubdegreeVerdict {
  std::optional<bool> k_divides_lambda_d;  // evaluated only when k, lambda are known
  bool kstar_divides_d = false;
  bool kstar_divides_gcd = false;          // k* | gcd(v-1, d)
  std::int64_t gcd_v1_d = 0;

  bool pass() const { return k_divides_lambda_d.value_or(true) && kstar_divides_d && kstar_divides_gcd; }
  std::vector<std::string> failures() const;
};

SubdegreeVerdict subdegree_filter(std::int64_t k_star, std::int64_t d, std::int64_t v);
SubdegreeVerdict subdegree_filter(const DesignParams& params, std::int64_t d);

struct BoundVerdict {
  bool pass = false;
  std::int64_t v = 0;
  std::int64_t limit = 0;  // 2k - 1
};

/// v <= 2k - 1.
BoundVerdict bound_v_lt_2k(std::int64_t v, std::int64_t k);
/// Same bound, but only meaningful for g == n; throws otherwise.
BoundVerdict bound_v_lt_2k(const PrimeOrderDecomposition& decomp, std::int64_t v, std::int64_t k);

bool is_prime_i64(std::int64_t n);

}  // namespace symdes
