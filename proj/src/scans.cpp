#include "symdes/scans.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "symdes/actions.hpp"
#include "symdes/groups.hpp"

namespace symdes {

namespace {

using Point = std::vector<std::int64_t>;
using Ranges = std::map<std::string, Range>;

Integer pw(std::int64_t q, std::int64_t e) {
  if (e < 0) throw std::logic_error("negative exponent in scan predicate");
  return ipow(Integer(q), static_cast<unsigned>(e));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

const Range& at(const Ranges& r, const std::string& key) {
  auto it = r.find(key);
  if (it == r.end()) throw std::logic_error("scan range '" + key + "' missing");
  return it->second;
}

std::vector<std::int64_t> values_in(const Range& r) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = r.lo; x <= r.hi; ++x) out.push_back(x);
  return out;
}

// Grid over (m, q, i) with i restricted by the predicate.
std::vector<Point> mqi_grid(const Ranges& r, QKind kind,
                            const std::function<std::pair<std::int64_t, std::int64_t>(std::int64_t m)>& i_bounds,
                            const std::function<bool(std::int64_t m, std::int64_t q, std::int64_t i)>& keep = {}) {
  std::vector<Point> out;
  const auto qs = prime_powers_in(at(r, "q"), kind);
  const Range& ri = at(r, "i");
  for (std::int64_t m : values_in(at(r, "m"))) {
    const auto [ilo, ihi] = i_bounds(m);
    for (std::int64_t q : qs)
      for (std::int64_t i = std::max(ilo, ri.lo); i <= std::min(ihi, ri.hi); ++i)
        if (!keep || keep(m, q, i)) out.push_back({m, q, i});
  }
  return out;
}

std::vector<Point> mq_grid(const Ranges& r, QKind kind) {
  std::vector<Point> out;
  const auto qs = prime_powers_in(at(r, "q"), kind);
  for (std::int64_t m : values_in(at(r, "m")))
    for (std::int64_t q : qs) out.push_back({m, q});
  return out;
}

PointVerdict verdict(const Point& p) {
  PointVerdict v;
  v.values = p;
  return v;
}

// Appends a stage; returns whether evaluation should continue.
bool stage(PointVerdict& v, std::string name, bool holds) {
  v.stages.push_back({std::move(name), holds});
  return holds;
}

std::optional<std::string> check_stage1_index(const std::vector<PointVerdict>& pts, std::size_t axis,
                                              const std::set<std::int64_t>& allowed, const std::string& axis_name) {
  for (const auto& p : pts)
    if (p.passed_stage(0) && !allowed.count(p.values[axis]))
      return "first-stage survivor with " + axis_name + " = " + std::to_string(p.values[axis]);
  return std::nullopt;
}

std::optional<std::string> check_empty(const std::vector<PointVerdict>& pts) {
  std::size_t n = 0;
  for (const auto& p : pts)
    if (p.survives()) ++n;
  if (n == 0) return std::nullopt;
  return std::to_string(n) + " grid points survive every stage";
}

std::optional<std::string> both(std::optional<std::string> a, std::optional<std::string> b) { return a ? a : b; }

std::string kind_label(std::int64_t k) {
  switch (static_cast<FamilyKind>(k)) {
    case FamilyKind::linear: return "PSL";
    case FamilyKind::unitary: return "PSU";
    case FamilyKind::symplectic: return "PSp";
    case FamilyKind::orthogonal_odd: return "O";
    case FamilyKind::orthogonal_plus: return "O+";
    case FamilyKind::orthogonal_minus: return "O-";
    default: return "?";
  }
}

// Largest odd prime dividing |Out(X)| * p.
std::optional<std::uint64_t> odd_prime_bound(const GroupFamily& g) {
  const Integer a = Integer(out_order(g)) * g.characteristic();
  const Factorization f = factorize(a);
  std::optional<std::uint64_t> best;
  for (const auto& [r, e] : f.terms())
    if (r != 2) best = static_cast<std::uint64_t>(r);
  return best;
}

// v = |X : P_i| for the orthogonal parabolic in dimension 2m, q even.
Integer orthogonal_parabolic_degree(std::int64_t m, std::int64_t q, std::int64_t i, std::int64_t eps) {
  Integer num = 1, den = 1;
  for (std::int64_t j = 0; j < i; ++j) {
    num *= (pw(q, m - j) - eps) * (pw(q, m - j - 1) + eps);
    den *= pw(q, j + 1) - 1;
  }
  if (num % den != 0) throw std::logic_error("parabolic degree is not integral");
  return num / den;
}

std::vector<ScanPredicate> build_registry() {
  std::vector<ScanPredicate> reg;

  {
    ScanPredicate p;
    p.id = "psl-parabolic";
    p.description = "PSL(m,q), stabilizer of an i-space, 2 <= i <= m/2";
    p.basis = "q^(i(m-i)) < v < 2n^2 <= 2((q^(m-i)-1)/(q-1))^2";
    p.axes = {"m", "q", "i"};
    p.default_ranges = {{"m", {5, 24}}, {"q", {2, 32}}, {"i", {2, 12}}};
    p.claims_empty = false;
    p.survivor_verdict = "external";
    p.enumerate = [](const Ranges& r) {
      return mqi_grid(r, QKind::any, [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(2, m / 2); });
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i] = std::tuple(x[0], x[1], x[2]);
      auto v = verdict(x);
      stage(v, "q^(i(m-i)) (q-1)^2 < 2 (q^(m-i)-1)^2",
            pw(q, i * (m - i)) * (q - 1) * (q - 1) < 2 * (pw(q, m - i) - 1) * (pw(q, m - i) - 1));
      return v;
    };
    p.check = [](const std::vector<PointVerdict>& pts) { return check_stage1_index(pts, 2, {2}, "i"); };
    p.conclusion = "every survivor has i = 2, a rank 3 action covered by the rank 3 classification";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "psu-parabolic";
    p.description = "PSU(m,q), q even, parabolic P_i with i <= m/2";
    p.basis = "q^(i(2m-3i)) < v < 2k <= 2 k* n with k* | (v-1)_2 and n <= q^(m-2)+1";
    p.axes = {"m", "q", "i"};
    p.default_ranges = {{"m", {5, 24}}, {"q", {2, 64}}, {"i", {1, 12}}};
    p.enumerate = [](const Ranges& r) {
      return mqi_grid(r, QKind::even, [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(1, m / 2); });
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i] = std::tuple(x[0], x[1], x[2]);
      auto v = verdict(x);
      const Integer lhs = pw(q, i * (2 * m - 3 * i));
      const Integer nb = pw(q, m - 2) + 1;
      if (!stage(v, "q^(i(2m-3i)) < 2 q^3 (q^(m-2)+1)", lhs < 2 * pw(q, 3) * nb)) return v;
      std::int64_t e = 2;
      if (m % 2 == 1 && i == (m - 1) / 2) e = 3;
      else if (m % 2 == 0 && i == m / 2) e = 1;
      v.derived["k_star_max"] = "q^" + std::to_string(e);
      stage(v, "q^(i(2m-3i)) < 2 (v-1)_2 (q^(m-2)+1)", lhs < 2 * pw(q, e) * nb);
      return v;
    };
    p.check = [](const std::vector<PointVerdict>& pts) {
      return both(check_stage1_index(pts, 2, {1, 2}, "i"), check_empty(pts));
    };
    p.conclusion = "first-stage survivors have i in {1,2}; none survive the (v-1)_2 refinement";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "psp-parabolic";
    p.description = "PSp(2m,q), q even, parabolic P_i with i <= m";
    p.basis = "q^(i(4m-3i)) < v < 2k <= 2 q (q^m-1)/(q-1)";
    p.axes = {"m", "q", "i"};
    p.default_ranges = {{"m", {2, 20}}, {"q", {2, 64}}, {"i", {1, 20}}};
    p.enumerate = [](const Ranges& r) {
      return mqi_grid(
          r, QKind::even, [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(1, std::int64_t(m)); },
          [](std::int64_t m, std::int64_t q, std::int64_t) { return !(m == 2 && q == 2); });
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i] = std::tuple(x[0], x[1], x[2]);
      auto v = verdict(x);
      if (!stage(v, "q^(i(4m-3i)) (q-1) < 2 q (q^m-1)", pw(q, i * (4 * m - 3 * i)) * (q - 1) < 2 * q * (pw(q, m) - 1)))
        return v;
      if (i == 1) stage(v, "q^(4m-3) < q^(m+2)", pw(q, 4 * m - 3) < pw(q, m + 2));
      return v;
    };
    p.check = [](const std::vector<PointVerdict>& pts) {
      return both(check_stage1_index(pts, 2, {1}, "i"), check_empty(pts));
    };
    p.conclusion = "first-stage survivors have i = 1; q^(4m-3) < q^(m+2) then fails";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "omega-odd-n1-minus";
    p.description = "O(2m+1,q), q odd, stabilizer of a minus-type hyperplane";
    p.basis = "v = q^m(q^m-1)/2 < 2n^2 with n <= (q^m+1)/(q+1)";
    p.axes = {"m", "q"};
    p.default_ranges = {{"m", {3, 20}}, {"q", {3, 49}}};
    p.enumerate = [](const Ranges& r) { return mq_grid(r, QKind::odd); };
    p.evaluate = [](const Point& x) {
      const auto [m, q] = std::tuple(x[0], x[1]);
      auto v = verdict(x);
      const Integer qm = pw(q, m);
      stage(v, "q^m (q^m-1) (q+1)^2 < 4 (q^m+1)^2", qm * (qm - 1) * (q + 1) * (q + 1) < 4 * (qm + 1) * (qm + 1));
      return v;
    };
    p.check = check_empty;
    p.conclusion = "no survivors";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "omega-even-parabolic";
    p.description = "O+/-(2m,q), q even, parabolic P_i with i <= m-1";
    p.basis = "2^-5 q^((4mi-3i^2-i)/2) < v < 2k <= 2 k* (q^(m-1)+1) with k* <= q^3";
    p.axes = {"m", "q", "i", "eps"};
    p.default_ranges = {{"m", {4, 24}}, {"q", {2, 64}}, {"i", {1, 23}}, {"eps", {-1, 1}}};
    p.enumerate = [](const Ranges& r) {
      std::vector<Point> out;
      const Range& re = at(r, "eps");
      for (const auto& b : mqi_grid(r, QKind::even,
                                    [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(1, m - 1); }))
        for (std::int64_t eps : {-1, 1})
          if (re.contains(eps)) out.push_back({b[0], b[1], b[2], eps});
      return out;
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i, eps] = std::tuple(x[0], x[1], x[2], x[3]);
      auto v = verdict(x);
      const std::int64_t e = (4 * m * i - 3 * i * i - i) / 2;
      const Integer nb = pw(q, m - 1) + 1;
      const Integer lhs = pw(q, e);
      if (!stage(v, "q^((4mi-3i^2-i)/2) < 2^6 q^3 (q^(m-1)+1)", lhs < 64 * pw(q, 3) * nb)) return v;
      if (i > 3) return v;
      const Integer deg = orthogonal_parabolic_degree(m, q, i, eps);
      const std::int64_t kexp = i <= 2 ? 1 : 3;
      v.derived["v"] = big(deg);
      v.derived["k_star_max"] = "q^" + std::to_string(kexp);
      v.derived["lower_bound_consistent"] = 32 * deg > lhs;
      stage(v, "v < 2 k*max (q^(m-1)+1)", deg < 2 * pw(q, kexp) * nb);
      return v;
    };
    p.check = [](const std::vector<PointVerdict>& pts) -> std::optional<std::string> {
      if (auto f = check_stage1_index(pts, 2, {1, 2, 3}, "i")) return f;
      for (const auto& pt : pts)
        if (pt.derived.contains("lower_bound_consistent") && !pt.derived["lower_bound_consistent"].get<bool>())
          return "exact degree below 2^-5 q^e at a grid point";
      return check_empty(pts);
    };
    p.conclusion = "first-stage survivors have i in {1,2,3}; the exact degree eliminates each";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "psl-decomposition";
    p.description = "PSL(m,q), q odd, stabilizer of V = V_1 + ... + V_t, dim V_j = i >= 2";
    p.basis = "q^(m(m-i))/t! < v < 2n^2 <= 2 t^2 ((q^i-1)/(q-1))^2";
    p.axes = {"m", "q", "i"};
    p.default_ranges = {{"m", {5, 24}}, {"q", {3, 49}}, {"i", {2, 12}}};
    p.enumerate = [](const Ranges& r) {
      return mqi_grid(
          r, QKind::odd, [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(2, m / 2); },
          [](std::int64_t m, std::int64_t, std::int64_t i) { return m % i == 0; });
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i] = std::tuple(x[0], x[1], x[2]);
      const std::int64_t t = m / i;
      auto v = verdict(x);
      v.derived["t"] = t;
      stage(v, "q^(m(m-i)) < 8 t^2 q^(2i-2) t!",
            pw(q, m * (m - i)) < 8 * Integer(t * t) * pw(q, 2 * i - 2) * factorial(static_cast<unsigned>(t)));
      return v;
    };
    p.check = check_empty;
    p.conclusion = "no survivors";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "psl-decomposition-i1";
    p.description = "PSL(m,q), q odd, stabilizer of a decomposition into m lines";
    p.basis = "q^(m^2-2) < |X| < |M0|^3 = ((q-1)^(m-1) m! / (m,q-1))^3";
    p.axes = {"m", "q"};
    p.default_ranges = {{"m", {5, 24}}, {"q", {3, 49}}};
    p.enumerate = [](const Ranges& r) { return mq_grid(r, QKind::odd); };
    p.evaluate = [](const Point& x) {
      const auto [m, q] = std::tuple(x[0], x[1]);
      const Integer d = gcd64(m, q - 1);
      auto v = verdict(x);
      const Integer mf = factorial(static_cast<unsigned>(m));
      stage(v, "q^(m^2-2) (m,q-1)^3 < (m!)^3 (q-1)^(3m-3)",
            pw(q, m * m - 2) * d * d * d < mf * mf * mf * pw(q - 1, 3 * m - 3));
      return v;
    };
    p.check = check_empty;
    p.conclusion = "no survivors";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "psl-flag-pair";
    p.description = "PSL(m,q), q odd, stabilizer of a flag U < W with dim U = i < m/2";
    p.basis = "q^(i(2m-3i)) < v < 2 k* n <= 2 q (q^(m-2)-1)";
    p.axes = {"m", "q", "i"};
    p.default_ranges = {{"m", {5, 24}}, {"q", {3, 49}}, {"i", {1, 12}}};
    p.enumerate = [](const Ranges& r) {
      return mqi_grid(r, QKind::odd,
                      [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(1, (m - 1) / 2); });
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i] = std::tuple(x[0], x[1], x[2]);
      auto v = verdict(x);
      stage(v, "q^(i(2m-3i)) < 2 q (q^(m-2)-1)", pw(q, i * (2 * m - 3 * i)) < 2 * q * (pw(q, m - 2) - 1));
      return v;
    };
    p.check = check_empty;
    p.conclusion = "no survivors";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "psl-complement-pair";
    p.description = "PSL(m,q), stabilizer of a decomposition U + W with dim U = i < m/2";
    p.basis = "q^(2i(m-i)) < v < 2n^2 <= 2 (q^(m-i)-1)^2";
    p.axes = {"m", "q", "i"};
    p.default_ranges = {{"m", {5, 24}}, {"q", {2, 64}}, {"i", {1, 12}}};
    p.enumerate = [](const Ranges& r) {
      return mqi_grid(r, QKind::any,
                      [](std::int64_t m) { return std::make_pair<std::int64_t, std::int64_t>(1, (m - 1) / 2); });
    };
    p.evaluate = [](const Point& x) {
      const auto [m, q, i] = std::tuple(x[0], x[1], x[2]);
      auto v = verdict(x);
      const Integer a = pw(q, m - i) - 1;
      if (!stage(v, "q^(2i(m-i)) < 2 (q^(m-i)-1)^2", pw(q, 2 * i * (m - i)) < 2 * a * a)) return v;
      if (i == 1) {
        const Integer b = pw(q, m - 1) - 1;
        stage(v, "q^(m-1) (q^m-1) (q-1) < 2 (q^(m-1)-1)^2", pw(q, m - 1) * (pw(q, m) - 1) * (q - 1) < 2 * b * b);
      }
      return v;
    };
    p.check = [](const std::vector<PointVerdict>& pts) {
      return both(check_stage1_index(pts, 2, {1}, "i"), check_empty(pts));
    };
    p.conclusion = "first-stage survivors have i = 1; the exact degree then eliminates each";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "classical-min-degree";
    p.description = "classical X with n dividing |Out(X)| |X|_p";
    p.basis = "P(X) <= v < 2k <= 2 n^2 with n an odd prime dividing |Out(X)| p";
    p.axes = {"family", "m", "q"};
    p.default_ranges = {{"family", {0, 5}}, {"m", {2, 12}}, {"q", {2, 64}}};
    p.enumerate = [](const Ranges& r) {
      std::vector<Point> out;
      const auto qs = prime_powers_in(at(r, "q"), QKind::any);
      for (std::int64_t f : values_in(at(r, "family"))) {
        if (f < 0 || f > 5) continue;
        const auto kind = static_cast<FamilyKind>(f);
        for (std::int64_t m : values_in(at(r, "m"))) {
          if ((kind == FamilyKind::linear || kind == FamilyKind::unitary) && m < 5) continue;
          for (std::int64_t q : qs) {
            const GroupFamily g = make_family(kind, static_cast<unsigned>(m), static_cast<std::uint64_t>(q));
            if (admissibility_violation(g)) continue;
            out.push_back({f, m, q});
          }
        }
      }
      return out;
    };
    p.evaluate = [](const Point& x) {
      const GroupFamily g =
          make_family(static_cast<FamilyKind>(x[0]), static_cast<unsigned>(x[1]), static_cast<std::uint64_t>(x[2]));
      auto v = verdict(x);
      v.derived["X"] = g.to_string();
      const auto n = odd_prime_bound(g);
      if (!stage(v, "an odd prime divides |Out(X)| p", n.has_value())) return v;
      const MinDegree md = min_degree_lower_bound(g);
      v.derived["n_max"] = *n;
      v.derived["P"] = big(md.value);
      v.derived["P_exact"] = md.exact;
      stage(v, "P(X) < 2 n^2", md.value < 2 * Integer(*n) * Integer(*n));
      return v;
    };
    p.check = check_empty;
    p.conclusion = "no survivors: n divides |M0|_p'";
    reg.push_back(std::move(p));
  }

  {
    ScanPredicate p;
    p.id = "omega-odd-monomial";
    p.description = "O(2m+1,q), q odd, monomial stabilizer 2^(2m).A(2m+1) or 2^(2m).S(2m+1)";
    p.basis = "|X| < 2 |M0| (|M0|_p')^2, then v < 2 n^2 with n | |M0|_p'";
    p.axes = {"m", "q"};
    p.default_ranges = {{"m", {3, 9}}, {"q", {3, 49}}};
    p.enumerate = [](const Ranges& r) { return mq_grid(r, QKind::odd); };
    p.evaluate = [](const Point& x) {
      const auto [m, q] = std::tuple(x[0], x[1]);
      auto v = verdict(x);
      const GroupFamily g = make_family(FamilyKind::orthogonal_odd, static_cast<unsigned>(m), static_cast<std::uint64_t>(q));
      std::string label;
      const Factorization m0 = monomial_stabilizer(static_cast<unsigned>(m), static_cast<std::uint64_t>(q), &label);
      const Factorization order = group_order(g);
      const auto c = prime_order_constraints(order.value(), g.characteristic(), m0);
      v.derived["M0"] = label;
      if (!stage(v, "|X| < 2 |M0| (|M0|_p')^2", c.volume_bound)) return v;
      const Factorization deg = coset_degree(order, m0);
      const Integer n = c.n_max.value_or(0);
      v.derived["v"] = deg.to_string();
      v.derived["n_max"] = big(n);
      stage(v, "v < 2 n^2", deg.value() < 2 * n * n);
      return v;
    };
    p.check = [](const std::vector<PointVerdict>& pts) -> std::optional<std::string> {
      const std::set<std::pair<std::int64_t, std::int64_t>> expected{{3, 3}, {3, 5}, {4, 3}, {5, 3}};
      for (const auto& pt : pts) {
        const bool listed = expected.count({pt.values[0], pt.values[1]}) > 0;
        if (pt.passed_stage(0) != listed)
          return "first-stage status of O(" + std::to_string(2 * pt.values[0] + 1) + "," +
                 std::to_string(pt.values[1]) + ") differs from the four listed pairs";
      }
      return check_empty(pts);
    };
    p.conclusion = "first-stage survivors are O(7,3), O(7,5), O(9,3), O(11,3); each has v > 2n^2";
    reg.push_back(std::move(p));
  }

  return reg;
}

}  // namespace

std::vector<std::int64_t> prime_powers_in(const Range& r, QKind kind) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = std::max<std::int64_t>(r.lo, 2); q <= r.hi; ++q) {
    const auto pp = recognize_prime_power(static_cast<std::uint64_t>(q));
    if (!pp) continue;
    if (kind == QKind::odd && pp->p == 2) continue;
    if (kind == QKind::even && pp->p != 2) continue;
    out.push_back(q);
  }
  return out;
}

const std::vector<ScanPredicate>& scan_registry() {
  static const std::vector<ScanPredicate> reg = build_registry();
  return reg;
}

const ScanPredicate& find_predicate(const std::string& id) {
  for (const auto& p : scan_registry())
    if (p.id == id) return p;
  throw std::invalid_argument("unregistered scan predicate '" + id + "'");
}

ScanOutcome run_scan(const ScanPredicate& predicate, const std::map<std::string, Range>& ranges, unsigned jobs) {
  ScanOutcome out;
  out.predicate = &predicate;
  out.ranges = predicate.default_ranges;
  for (const auto& [k, r] : ranges) {
    if (!out.ranges.count(k))
      throw std::invalid_argument("predicate '" + predicate.id + "' has no axis '" + k + "'");
    out.ranges[k] = r;
  }

  const auto points = predicate.enumerate(out.ranges);
  const unsigned shards = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, points.size()))));
  std::vector<std::vector<PointVerdict>> parts(shards);
  std::vector<std::exception_ptr> errors(shards);
  auto work = [&](unsigned s) {
    try {
      for (std::size_t i = s; i < points.size(); i += shards) parts[s].push_back(predicate.evaluate(points[i]));
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < shards; ++s) threads.emplace_back(work, s);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& part : parts)
    for (auto& v : part) out.points.push_back(std::move(v));
  std::sort(out.points.begin(), out.points.end(),
            [](const PointVerdict& a, const PointVerdict& b) { return a.values < b.values; });

  for (const auto& p : out.points) {
    for (std::size_t s = 0; s < p.stages.size(); ++s) {
      if (out.stage_pass_counts.size() <= s) out.stage_pass_counts.resize(s + 1, 0);
      if (p.stages[s].holds) ++out.stage_pass_counts[s];
    }
    if (p.survives()) ++out.survivor_count;
  }
  out.conclusion_failure = predicate.check(out.points);
  return out;
}

CommandResult scan_records(const ScanOutcome& outcome) {
  const ScanPredicate& pred = *outcome.predicate;
  CommandResult r;

  Record grid;
  grid.inputs["predicate"] = pred.id;
  json rj = json::object();
  for (const auto& [k, v] : outcome.ranges) rj[k] = {v.lo, v.hi};
  grid.inputs["ranges"] = rj;
  grid.derived = json{{"points", outcome.points.size()},
                      {"stage_passes", outcome.stage_pass_counts},
                      {"survivors", outcome.survivor_count},
                      {"conclusion", pred.conclusion},
                      {"conclusion_holds", outcome.conclusion_holds()}};
  grid.verdict = outcome.conclusion_holds() ? "conclusion-holds" : "conclusion-fails";
  if (outcome.conclusion_failure) grid.reasons.push_back(*outcome.conclusion_failure);
  grid.reasons.push_back("checked on this finite grid only");
  grid.basis = pred.description + ": " + pred.basis;
  r.records.push_back(grid);

  for (const auto& p : outcome.points) {
    if (!p.passed_stage(0)) continue;
    Record rec;
    for (std::size_t a = 0; a < pred.axes.size(); ++a) {
      const std::string& axis = pred.axes[a];
      if (axis == "family") rec.inputs[axis] = kind_label(p.values[a]);
      else if (axis == "eps") rec.inputs[axis] = p.values[a] > 0 ? "+" : "-";
      else rec.inputs[axis] = p.values[a];
    }
    rec.derived = p.derived;
    json stages = json::array();
    for (const auto& s : p.stages) stages.push_back({{"stage", s.name}, {"holds", s.holds}});
    rec.derived["stages"] = stages;
    if (p.survives()) {
      rec.verdict = pred.survivor_verdict;
    } else {
      rec.verdict = "eliminated";
      for (const auto& s : p.stages)
        if (!s.holds) rec.reasons.push_back("fails " + s.name);
    }
    rec.basis = pred.basis;
    r.records.push_back(rec);
  }

  const bool violated = !outcome.conclusion_holds() || (pred.claims_empty && outcome.survivor_count > 0);
  r.claim_violated = violated;
  r.summary = pred.id + ": " + std::to_string(outcome.points.size()) + " points, " +
              std::to_string(outcome.survivor_count) + " survivors, conclusion " +
              (outcome.conclusion_holds() ? "holds" : "fails");
  return r;
}

}  // namespace symdes
