#include "symdes/feasibility.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symdes/actions.hpp"

namespace symdes {

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p)
    if (is_prime_i64(p)) out.push_back(p);
  return out;
}

std::string rational_text(const boost::rational<std::int64_t>& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Factorization from_terms(std::initializer_list<std::pair<unsigned, unsigned>> terms) {
  Factorization f;
  for (const auto& [p, e] : terms) f *= Factorization::prime_power(p, e);
  return f;
}

Range range_or(const std::map<std::string, Range>& ranges, const std::string& key, Range fallback) {
  auto it = ranges.find(key);
  return it == ranges.end() ? fallback : it->second;
}

void require_keys(const std::map<std::string, Range>& ranges, const std::set<std::string>& allowed) {
  for (const auto& [k, r] : ranges)
    if (!allowed.count(k)) throw std::invalid_argument("unknown range '" + k + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Config

std::string SearchConfig::canonical() const {
  json j;
  j["predicate"] = predicate;
  j["family"] = family;
  json r = json::object();
  for (const auto& [k, v] : ranges) r[k] = {v.lo, v.hi};
  j["ranges"] = r;
  return j.dump();
}

SearchConfig parse_search_config(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  static const std::set<std::string> known{"predicate", "family", "ranges", "output"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw std::invalid_argument("unknown config key '" + k + "'");
  SearchConfig c;
  if (j.contains("predicate")) c.predicate = j.at("predicate").get<std::string>();
  if (j.contains("family")) c.family = j.at("family").get<std::string>();
  if (j.contains("output")) c.output = j.at("output").get<std::string>();
  if (j.contains("ranges")) {
    const json& r = j.at("ranges");
    if (!r.is_object()) throw std::invalid_argument("'ranges' must map names to [lo, hi]");
    for (const auto& [name, v] : r.items()) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw std::invalid_argument("range '" + name + "' must be [lo, hi] with integer bounds");
      c.ranges[name] = Range{v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
    }
  }
  return c;
}

SearchConfig load_search_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed config '" + path + "': " + e.what());
  }
  return parse_search_config(j);
}

// ---------------------------------------------------------------------------
// Prime-part constraints

PrimeOrderConstraints prime_order_constraints(const Integer& group_order, std::uint64_t p,
                                              const Factorization& stabilizer) {
  const Integer m0 = stabilizer.value();
  if (m0 < 1 || group_order % m0 != 0)
    throw std::invalid_argument("stabilizer order " + stabilizer.to_string() + " does not divide the group order");
  PrimeOrderConstraints c;
  c.group_order = group_order;
  c.stabilizer = stabilizer;
  c.p = p;
  c.stabilizer_p_prime = stabilizer.p_prime_part(Integer(p));
  for (const auto& [r, e] : stabilizer.terms()) {
    if (r == 2 || r == p) continue;
    c.allowed_n.push_back(r);
  }
  if (!c.allowed_n.empty()) c.n_max = c.allowed_n.back();
  c.volume_bound = group_order < 2 * m0 * c.stabilizer_p_prime * c.stabilizer_p_prime;
  c.cube_bound = group_order < m0 * m0 * m0;
  return c;
}

PrimeOrderConstraints prime_order_constraints(const GroupFamily& group, const Factorization& stabilizer) {
  return prime_order_constraints(group_order_value(group), group.characteristic(), stabilizer);
}

json constraints_json(const PrimeOrderConstraints& c) {
  json n = json::array();
  for (const auto& x : c.allowed_n) n.push_back(big(x));
  return json{{"p", c.p},
              {"stabilizer_order", c.stabilizer.to_string()},
              {"stabilizer_p_prime_part", big(c.stabilizer_p_prime)},
              {"allowed_n", n},
              {"n_max", c.n_max ? big(*c.n_max) : "none"},
              {"volume_bound", c.volume_bound},
              {"cube_bound", c.cube_bound}};
}

// ---------------------------------------------------------------------------
// Monomial table

Factorization monomial_stabilizer(unsigned m, std::uint64_t q, std::string* label) {
  const bool alternating = q % 8 == 3 || q % 8 == 5;
  const unsigned deg = 2 * m + 1;
  Factorization f = Factorization::prime_power(2, 2 * m);
  for (unsigned i = 2; i <= deg; ++i) f *= factorize(Integer(i));
  if (alternating) f = *f.divide(Factorization::prime_power(2, 1));
  if (label) *label = "2^" + std::to_string(2 * m) + "." + (alternating ? "A" : "S") + std::to_string(deg);
  return f;
}

std::vector<MonomialLine> monomial_table() {
  struct Printed {
    unsigned m;
    std::uint64_t q;
    Factorization order, v;
    unsigned n_max;
  };
  const std::vector<Printed> printed{
      {3, 3, from_terms({{2, 9}, {3, 9}, {5, 1}, {7, 1}, {13, 1}}), from_terms({{3, 7}, {13, 1}}), 7},
      {3, 5, from_terms({{2, 9}, {3, 4}, {5, 9}, {7, 1}, {13, 1}, {31, 1}}),
       from_terms({{3, 2}, {5, 8}, {13, 1}, {31, 1}}), 7},
      {4, 3, from_terms({{2, 14}, {3, 16}, {5, 2}, {7, 1}, {13, 1}, {41, 1}}),
       from_terms({{3, 12}, {5, 1}, {13, 1}, {41, 1}}), 7},
      {5, 3, from_terms({{2, 17}, {3, 4}, {5, 2}, {7, 1}, {11, 1}}),
       from_terms({{3, 21}, {11, 1}, {13, 1}, {41, 1}, {61, 1}}), 11},
  };
  std::vector<MonomialLine> out;
  unsigned line = 0;
  for (const auto& pr : printed) {
    MonomialLine l;
    l.line = ++line;
    l.group = make_family(FamilyKind::orthogonal_odd, pr.m, pr.q);
    l.stabilizer = monomial_stabilizer(pr.m, pr.q, &l.stabilizer_label);
    l.order = group_order(l.group);
    l.v = coset_degree(l.order, l.stabilizer);
    l.constraints = prime_order_constraints(l.order.value(), l.group.characteristic(), l.stabilizer);
    const Integer n = l.constraints.n_max.value_or(0);
    l.v_exceeds_2n2 = l.v.value() > 2 * n * n;
    l.printed_order = pr.order;
    l.printed_v = pr.v;
    l.printed_n_max = pr.n_max;
    l.order_matches_printed = l.order == pr.order;
    l.v_matches_printed = l.v == pr.v;
    l.n_max_matches_printed = n == pr.n_max;
    out.push_back(std::move(l));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grids

std::vector<GridRow> derive_subset_grid() {
  std::vector<GridRow> rows;
  for (unsigned s = 3; s <= 40; ++s) {
    std::vector<unsigned> ms;
    for (unsigned m = 2 * s + 1; m <= 400; ++m) {
      const Integer bound = 2 * Integer(s) * Integer(m - s) * Integer(m - s);
      if (binomial(m, s) < bound) ms.push_back(m);
    }
    if (ms.empty()) continue;
    // The admissible m form one interval; split defensively if not.
    unsigned lo = ms.front(), prev = ms.front();
    for (std::size_t i = 1; i <= ms.size(); ++i) {
      if (i == ms.size() || ms[i] != prev + 1) {
        rows.push_back({s, lo, prev});
        if (i < ms.size()) lo = ms[i];
      }
      if (i < ms.size()) prev = ms[i];
    }
  }
  return rows;
}

std::vector<GridRow> derive_partition_grid() {
  std::vector<GridRow> rows;
  for (unsigned t = 2; t <= 30; ++t) {
    std::vector<unsigned> ss;
    for (unsigned s = 3; s <= 200; ++s) {
      const Integer lhs = ipow(factorial(t), s - 1);
      const Integer rhs = ipow(Integer(s), 3) * Integer(t) * Integer(t) * Integer(t - 1);
      if (lhs < rhs) ss.push_back(s);
    }
    if (ss.empty()) continue;
    unsigned lo = ss.front(), prev = ss.front();
    for (std::size_t i = 1; i <= ss.size(); ++i) {
      if (i == ss.size() || ss[i] != prev + 1) {
        rows.push_back({t, lo, prev});
        if (i < ss.size()) lo = ss[i];
      }
      if (i < ss.size()) prev = ss[i];
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Intransitive point stabilizer: points are s-subsets

SubsetSearch search_alternating_intransitive(const std::map<std::string, Range>& ranges) {
  require_keys(ranges, {"s", "m"});
  SubsetSearch out;
  if (ranges.count("s") || ranges.count("m")) {
    const Range rs = range_or(ranges, "s", Range{3, 4});
    const Range rm = range_or(ranges, "m", Range{7, 32});
    for (std::int64_t s = std::max<std::int64_t>(rs.lo, 1); s <= rs.hi; ++s) {
      const std::int64_t lo = std::max<std::int64_t>(rm.lo, 2 * s + 1);
      if (lo <= rm.hi) out.grid.push_back({unsigned(s), unsigned(lo), unsigned(rm.hi)});
    }
  } else {
    out.grid = derive_subset_grid();
  }

  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, unsigned, unsigned>> seen;
  for (const auto& row : out.grid) {
    const unsigned s = row.fixed;
    for (unsigned m = row.lo; m <= row.hi; ++m) {
      const Integer v = binomial(m, s);
      const Integer ds = Integer(s) * (m - s);
      const Integer g = boost::multiprecision::gcd(v - 1, ds);
      const Integer sym = factorial(m);
      const Integer alt = sym / 2;
      for (std::int64_t ks : divisors(static_cast<std::int64_t>(g))) {
        for (std::int64_t n : primes_up_to(m - s)) {
          const Integer k = Integer(n) * ks;
          if (k >= v) continue;
          const Integer num = k * (k - 1);
          if (num % (v - 1) != 0) continue;
          const Integer lambda = num / (v - 1);
          if (lambda < 1) continue;
          const bool da = alt % (v * k) == 0;
          const bool dsym = sym % (v * k) == 0;
          if (!da && !dsym) continue;
          AltTuple t;
          t.params = {static_cast<std::int64_t>(v), static_cast<std::int64_t>(k), static_cast<std::int64_t>(lambda)};
          t.s = s;
          t.m = m;
          if (!seen.insert({t.params.v, t.params.k, t.params.lambda, s, m}).second) continue;
          const std::int64_t gk = std::gcd(t.params.k, t.params.lambda);
          t.k_star = t.params.k / gk;
          t.n = n;
          t.divides_alt = da;
          t.divides_sym = dsym;
          t.order_prime = is_prime_i64(t.params.order());
          out.tuples.push_back(t);
        }
      }
    }
  }
  std::sort(out.tuples.begin(), out.tuples.end(), [](const AltTuple& a, const AltTuple& b) {
    return std::tie(a.params, a.s, a.m) < std::tie(b.params, b.s, b.m);
  });
  out.external = {
      {{15, 7, 3}, "A6", "2-subsets of a 6-set: rank 3, classified externally"},
      {{35, 17, 8}, "A8", "2-subsets of an 8-set: rank 3, classified externally"},
  };
  return out;
}

// ---------------------------------------------------------------------------
// Transitive imprimitive point stabilizer: points are partitions

PartitionSearch search_alternating_imprimitive(const std::map<std::string, Range>& ranges) {
  require_keys(ranges, {"t", "s"});
  PartitionSearch out;
  if (ranges.count("t") || ranges.count("s")) {
    const Range rt = range_or(ranges, "t", Range{2, 4});
    const Range rs = range_or(ranges, "s", Range{3, 14});
    for (std::int64_t t = std::max<std::int64_t>(rt.lo, 2); t <= rt.hi; ++t) {
      const std::int64_t lo = std::max<std::int64_t>(rs.lo, 3);
      if (lo <= rs.hi) out.grid.push_back({unsigned(t), unsigned(lo), unsigned(rs.hi)});
    }
  } else {
    out.grid = derive_partition_grid();
  }

  for (const auto& row : out.grid) {
    const unsigned t = row.fixed;
    for (unsigned s = row.lo; s <= row.hi; ++s) {
      const SubdegreeList sub = partition_action(s, t);
      PartitionCandidate c;
      c.t = t;
      c.s = s;
      c.m = s * t;
      c.v = sub.degree;
      c.d2 = sub.at(2);
      c.prefilter = c.v < 2 * Integer(std::max(s, t)) * c.d2;
      out.candidates.push_back(c);
    }
  }

  for (const auto& c : out.candidates) {
    if (!c.prefilter) continue;
    const Integer sym = factorial(c.m);
    const Integer alt = sym / 2;
    const std::int64_t v = static_cast<std::int64_t>(c.v);
    for (std::int64_t k = 3; k <= v - 2; ++k) {
      const bool da = alt % (Integer(v) * k) == 0;
      const bool ds = sym % (Integer(v) * k) == 0;
      if (!da && !ds) continue;
      auto lambda = lambda_for(v, k);
      if (!lambda) continue;
      AltTuple t;
      t.params = {v, k, *lambda};
      t.s = c.s;
      t.m = c.m;
      const std::int64_t g = std::gcd(k, *lambda);
      t.k_star = k / g;
      t.n = t.params.order();
      t.divides_alt = da;
      t.divides_sym = ds;
      t.order_prime = is_prime_i64(t.params.order());
      out.arithmetic_matches.push_back(t);
    }
  }

  // Blocks of size 2: v = (2t-1)!! and d2 = t(t-1).
  for (unsigned t = 3; t <= 30; ++t) {
    Integer v = 1;
    for (unsigned j = 3; j <= 2 * t - 1; j += 2) v *= j;
    if (v < 2 * Integer(t) * t * (t - 1)) out.s2_t_values.push_back(t);
  }
  for (unsigned t : out.s2_t_values) {
    const std::int64_t v = static_cast<std::int64_t>(partition_action(2, t).degree);
    const std::int64_t d2 = static_cast<std::int64_t>(t) * (t - 1);
    std::map<std::int64_t, LambdaCandidate> by_k;
    for (std::int64_t n : primes_up_to(t)) {
      for (std::int64_t ks : divisors(d2)) {
        if (ks < 2) continue;
        const std::int64_t k = n * ks;
        if (k >= v || by_k.count(k)) continue;
        LambdaCandidate lc;
        lc.v = v;
        lc.k = k;
        lc.k_star = ks;
        lc.n = n;
        lc.lambda = lambda_ratio(v, k);
        lc.trivial = !(2 < k && k < v - 1);
        lc.order_prime = lc.integral() && is_prime_i64(k - lc.lambda.numerator());
        lc.groups = {"A" + std::to_string(2 * t), "S" + std::to_string(2 * t)};
        by_k[k] = lc;
      }
    }
    for (auto& [k, lc] : by_k) out.s2_candidates.push_back(lc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small exceptional searches

namespace {

struct SmallGroup {
  std::string name;
  std::int64_t order;
};

std::vector<LambdaCandidate> small_degree_search(const std::vector<SmallGroup>& groups,
                                                 const std::vector<std::int64_t>& degrees, std::int64_t min_k_star) {
  std::map<std::pair<std::int64_t, std::int64_t>, LambdaCandidate> found;
  for (std::int64_t v : degrees) {
    for (const auto& g : groups) {
      if (g.order % v != 0) continue;
      const std::int64_t stab = g.order / v;
      for (std::int64_t ks : divisors(v - 1)) {
        if (ks < min_k_star) continue;
        for (std::int64_t n : primes_up_to(v)) {
          const std::int64_t k = n * ks;
          if (k >= v || stab % k != 0) continue;
          auto key = std::make_pair(v, k);
          auto it = found.find(key);
          if (it != found.end()) {
            if (std::find(it->second.groups.begin(), it->second.groups.end(), g.name) == it->second.groups.end())
              it->second.groups.push_back(g.name);
            continue;
          }
          LambdaCandidate lc;
          lc.v = v;
          lc.k = k;
          lc.k_star = ks;
          lc.n = n;
          lc.lambda = lambda_ratio(v, k);
          lc.trivial = !(2 < k && k < v - 1);
          lc.order_prime = lc.integral() && is_prime_i64(k - lc.lambda.numerator());
          lc.groups = {g.name};
          found.emplace(key, lc);
        }
      }
    }
  }
  std::vector<LambdaCandidate> out;
  for (auto& [key, lc] : found) out.push_back(lc);
  return out;
}

}  // namespace

std::vector<LambdaCandidate> search_m6_special() {
  return small_degree_search({{"M10", 720}, {"PGL(2,9)", 720}, {"PGammaL(2,9)", 1440}}, {10, 36, 45}, 3);
}

std::vector<LambdaCandidate> search_alternating_primitive() {
  return small_degree_search({{"A7", 2520}, {"A8", 20160}}, {15}, 2);
}

// ---------------------------------------------------------------------------
// Records

namespace {

json params_json(const DesignParams& p) { return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}}; }

}  // namespace

CommandResult intransitive_records(const SubsetSearch& search) {
  CommandResult r;
  std::size_t survivors = 0;
  for (const auto& t : search.tuples) {
    Record rec;
    rec.inputs = json{{"s", t.s}, {"m", t.m}};
    rec.derived = params_json(t.params);
    rec.derived["k_star"] = t.k_star;
    rec.derived["n_used"] = t.n;
    rec.derived["order"] = t.params.order();
    rec.derived["vk_divides_alt"] = t.divides_alt;
    rec.derived["vk_divides_sym"] = t.divides_sym;
    if (t.order_prime) {
      rec.verdict = "survivor";
      ++survivors;
    } else {
      rec.verdict = "rejected";
      rec.reasons.push_back("k-lambda = " + std::to_string(t.params.order()) + " is not prime");
    }
    rec.basis =
        "points are s-subsets: v = C(m,s), k* | gcd(v-1, s(m-s)), n prime <= m-s, vk | m!, lambda = k(k-1)/(v-1)";
    r.records.push_back(rec);
  }
  for (const auto& e : search.external) {
    Record rec;
    rec.inputs = json{{"s", 2}, {"socle", e.socle}};
    rec.derived = params_json(e.params);
    rec.derived["order"] = e.params.order();
    rec.verdict = "external";
    rec.reasons.push_back(e.note);
    rec.reasons.push_back("k-lambda = " + std::to_string(e.params.order()) + " is not prime");
    rec.basis = "symmetric designs with a primitive rank 3 group";
    r.records.push_back(rec);
  }
  r.claim_violated = survivors > 0;
  r.summary = std::to_string(search.tuples.size()) + " tuples, " + std::to_string(survivors) + " with prime order";
  return r;
}

CommandResult imprimitive_records(const PartitionSearch& search) {
  CommandResult r;
  std::size_t survivors = 0, prefiltered = 0;
  for (const auto& c : search.candidates) {
    Record rec;
    rec.inputs = json{{"t", c.t}, {"s", c.s}};
    rec.derived = json{{"v", big(c.v)}, {"d2", big(c.d2)}, {"m", c.m}};
    if (c.prefilter) {
      ++prefiltered;
      rec.verdict = "candidate";
    } else {
      rec.verdict = "rejected";
      rec.reasons.push_back("v >= 2 max(s,t) d2");
    }
    rec.basis = "points are partitions into t blocks of size s; v < 2k <= 2 max(s,t) d2";
    r.records.push_back(rec);
  }
  for (const auto& t : search.arithmetic_matches) {
    Record rec;
    rec.inputs = json{{"s", t.s}, {"m", t.m}};
    rec.derived = params_json(t.params);
    rec.derived["order"] = t.params.order();
    rec.derived["vk_divides_alt"] = t.divides_alt;
    rec.derived["vk_divides_sym"] = t.divides_sym;
    if (t.order_prime) {
      rec.verdict = "survivor";
      ++survivors;
    } else {
      rec.verdict = "rejected";
      rec.reasons.push_back("k-lambda = " + std::to_string(t.params.order()) + " is not prime");
    }
    rec.basis = "vk | |G| for G = A(m) or S(m), lambda = k(k-1)/(v-1), k-lambda prime";
    r.records.push_back(rec);
  }
  for (const auto& lc : search.s2_candidates) {
    Record rec;
    rec.inputs = json{{"s", 2}, {"v", lc.v}, {"groups", lc.groups}};
    rec.derived = json{{"v", lc.v}, {"k", lc.k}, {"k_star", lc.k_star}, {"n", lc.n}, {"lambda", rational_text(lc.lambda)}};
    if (lc.survives()) {
      rec.verdict = "survivor";
      ++survivors;
    } else {
      rec.verdict = "rejected";
      if (!lc.integral()) rec.reasons.push_back("lambda = " + rational_text(lc.lambda) + " is not an integer");
      else if (lc.trivial) rec.reasons.push_back("trivial design");
      else rec.reasons.push_back("k-lambda is not prime");
    }
    rec.basis = "blocks of size 2: v = (2t-1)!!, k = n k* with n <= t, k* | d2 = t(t-1)";
    r.records.push_back(rec);
  }
  r.claim_violated = survivors > 0;
  r.summary = std::to_string(prefiltered) + " partition candidates, " + std::to_string(search.arithmetic_matches.size()) +
              " arithmetic matches, " + std::to_string(survivors) + " survivors";
  return r;
}

CommandResult lambda_records(const std::vector<LambdaCandidate>& candidates, const std::string& basis) {
  CommandResult r;
  std::size_t survivors = 0;
  for (const auto& lc : candidates) {
    Record rec;
    rec.inputs = json{{"v", lc.v}, {"groups", lc.groups}};
    rec.derived = json{{"k", lc.k}, {"k_star", lc.k_star}, {"n", lc.n}, {"lambda", rational_text(lc.lambda)}};
    if (lc.survives()) {
      rec.verdict = "survivor";
      ++survivors;
    } else {
      rec.verdict = "rejected";
      if (lc.trivial) rec.reasons.push_back("(" + std::to_string(lc.v) + "," + std::to_string(lc.k) + "," +
                                            rational_text(lc.lambda) + ") is trivial");
      else if (!lc.integral()) rec.reasons.push_back("lambda = " + rational_text(lc.lambda) + " is not an integer");
      else rec.reasons.push_back("k-lambda is not prime");
    }
    rec.basis = basis;
    r.records.push_back(rec);
  }
  r.claim_violated = survivors > 0;
  r.summary = std::to_string(candidates.size()) + " candidates, " + std::to_string(survivors) + " survivors";
  return r;
}

CommandResult monomial_records(const std::vector<MonomialLine>& lines) {
  CommandResult r;
  std::size_t survivors = 0, inconsistent = 0;
  for (const auto& l : lines) {
    Record rec;
    rec.inputs = json{{"line", l.line}, {"X", l.group.to_string()}, {"M0", l.stabilizer_label}};
    const Integer n = l.constraints.n_max.value_or(0);
    rec.derived = json{{"order", l.order.to_string()},
                       {"v", l.v.to_string()},
                       {"v_value", big(l.v.value())},
                       {"n_max", big(n)},
                       {"two_n_max_squared", big(2 * n * n)},
                       {"printed_order", l.printed_order.to_string()},
                       {"printed_v", l.printed_v.to_string()},
                       {"printed_n_max", l.printed_n_max},
                       {"order_matches_printed", l.order_matches_printed},
                       {"v_matches_printed", l.v_matches_printed},
                       {"n_max_matches_printed", l.n_max_matches_printed},
                       {"constraints", constraints_json(l.constraints)}};
    if (l.v_exceeds_2n2) {
      rec.verdict = "rejected";
      rec.reasons.push_back("v > 2 n_max^2 >= 2k");
    } else {
      rec.verdict = "survivor";
      ++survivors;
    }
    if (!l.order_matches_printed) {
      ++inconsistent;
      rec.reasons.push_back("printed |X| = " + l.printed_order.to_string() +
                            " disagrees with the order formula " + l.order.to_string());
    }
    if (!l.v_matches_printed) rec.reasons.push_back("printed v disagrees with |X : M0|");
    rec.basis = "monomial stabilizer of O(2m+1,q): |X| < 2|M0| (|M0|_p')^2, n | |M0|_p', v < 2n^2";
    r.records.push_back(rec);
  }
  r.claim_violated = survivors > 0;
  r.summary = std::to_string(lines.size()) + " lines, " + std::to_string(survivors) + " survivors, " +
              std::to_string(inconsistent) + " printed |X| entries inconsistent";
  return r;
}

}  // namespace symdes
