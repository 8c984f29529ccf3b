#include "symdes/incidence.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symdes {

IncidenceStructure::IncidenceStructure(int v, std::vector<std::vector<int>> blocks) : v_(v) {
  if (v < 1) throw std::invalid_argument("incidence structure needs v >= 1");
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (int x : b)
      if (x < 0 || x >= v) throw std::invalid_argument("point " + std::to_string(x) + " outside 0.." + std::to_string(v - 1));
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  blocks_ = std::move(blocks);
  members_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    boost::dynamic_bitset<> bits(static_cast<std::size_t>(v));
    for (int x : b) bits.set(static_cast<std::size_t>(x));
    members_.push_back(std::move(bits));
  }
}

std::optional<std::size_t> IncidenceStructure::find_block(const std::vector<int>& sorted_points) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sorted_points);
  if (it == blocks_.end() || *it != sorted_points) return std::nullopt;
  return static_cast<std::size_t>(it - blocks_.begin());
}

IncidenceStructure build_biplane_11() {
  const std::array<int, 5> residues{1, 3, 4, 5, 9};
  std::vector<std::vector<int>> blocks;
  for (int t = 0; t < 11; ++t) {
    std::vector<int> b;
    for (int r : residues) b.push_back((r + t) % 11);
    blocks.push_back(std::move(b));
  }
  return IncidenceStructure(11, std::move(blocks));
}

namespace {

using Vec3 = std::array<int, 3>;

bool prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Vec3> plane_points(int n) {
  std::vector<Vec3> pts;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pts.push_back({1, a, b});
  for (int a = 0; a < n; ++a) pts.push_back({0, 1, a});
  pts.push_back({0, 0, 1});
  return pts;
}

int mod(int x, int n) { return ((x % n) + n) % n; }

int inverse_mod(int a, int n) {
  for (int x = 1; x < n; ++x)
    if (mod(a * x, n) == 1) return x;
  throw std::logic_error("no inverse");
}

Vec3 normalize(Vec3 x, int n) {
  for (int& c : x) c = mod(c, n);
  for (int c : x) {
    if (c == 0) continue;
    const int inv = inverse_mod(c, n);
    for (int& d : x) d = mod(d * inv, n);
    return x;
  }
  throw std::logic_error("zero vector is not a projective point");
}

std::map<Vec3, int> point_index(const std::vector<Vec3>& pts) {
  std::map<Vec3, int> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace

IncidenceStructure build_projective_plane(int n) {
  if (!prime_int(n)) throw std::invalid_argument("projective plane order must be prime, got " + std::to_string(n));
  const auto pts = plane_points(n);
  std::vector<std::vector<int>> blocks;
  for (const auto& line : pts) {
    std::vector<int> b;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& x = pts[i];
      if (mod(line[0] * x[0] + line[1] * x[1] + line[2] * x[2], n) == 0) b.push_back(static_cast<int>(i));
    }
    blocks.push_back(std::move(b));
  }
  return IncidenceStructure(static_cast<int>(pts.size()), std::move(blocks));
}

IncidenceStructure complement_structure(const IncidenceStructure& d) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : d.blocks()) {
    std::vector<int> c;
    std::size_t j = 0;
    for (int x = 0; x < d.v(); ++x) {
      if (j < b.size() && b[j] == x) {
        ++j;
        continue;
      }
      c.push_back(x);
    }
    blocks.push_back(std::move(c));
  }
  return IncidenceStructure(d.v(), std::move(blocks));
}

DesignCheck verify_design(const IncidenceStructure& d) {
  DesignCheck out;
  const auto& blocks = d.blocks();
  if (static_cast<int>(blocks.size()) != d.v()) {
    out.failure = "block count " + std::to_string(blocks.size()) + " differs from point count " + std::to_string(d.v());
    return out;
  }
  const std::size_t k = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != k) {
      out.failure = "block sizes differ";
      return out;
    }
  const int v = d.v();
  std::vector<int> pairs(static_cast<std::size_t>(v) * v, 0);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) ++pairs[static_cast<std::size_t>(b[i]) * v + b[j]];
  std::optional<int> lambda;
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      const int c = pairs[static_cast<std::size_t>(x) * v + y];
      if (!lambda) lambda = c;
      if (c != *lambda) {
        out.failure = "pair multiplicity non-constant";
        return out;
      }
    }
  if (!lambda || *lambda < 1) {
    out.failure = "pair multiplicity is zero";
    return out;
  }
  out.params = DesignParams{v, static_cast<std::int64_t>(k), *lambda};
  return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("image list is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> img(b.image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

namespace {

// Block permutation induced by g, or nothing when g is not an automorphism.
std::optional<std::vector<std::size_t>> block_action(const IncidenceStructure& d, const Permutation& g) {
  if (g.size() != d.v()) return std::nullopt;
  std::vector<std::size_t> out;
  out.reserve(d.blocks().size());
  for (const auto& b : d.blocks()) {
    std::vector<int> img;
    img.reserve(b.size());
    for (int x : b) img.push_back(g(x));
    std::sort(img.begin(), img.end());
    auto idx = d.find_block(img);
    if (!idx) return std::nullopt;
    out.push_back(*idx);
  }
  return out;
}

}  // namespace

bool automorphism_check(const IncidenceStructure& d, const Permutation& g) { return block_action(d, g).has_value(); }

FlagOrbit flag_transitive(const IncidenceStructure& d, const std::vector<Permutation>& gens) {
  std::vector<std::vector<std::size_t>> actions;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != d.v())
      throw std::invalid_argument("generator " + std::to_string(i) + " has degree " + std::to_string(gens[i].size()) +
                                  ", expected " + std::to_string(d.v()));
    auto a = block_action(d, gens[i]);
    if (!a) throw std::invalid_argument("generator " + std::to_string(i) + " is not an automorphism");
    actions.push_back(std::move(*a));
  }

  const std::size_t nb = d.blocks().size();
  FlagOrbit out;
  for (const auto& b : d.blocks()) out.flags += static_cast<std::int64_t>(b.size());
  if (out.flags == 0) return out;

  // Flag (x, B) is encoded as x * nb + B.
  std::vector<bool> seen(static_cast<std::size_t>(d.v()) * nb, false);
  std::deque<std::size_t> queue;
  const std::size_t start = static_cast<std::size_t>(d.blocks().front().front()) * nb;
  seen[start] = true;
  queue.push_back(start);
  std::vector<bool> points(static_cast<std::size_t>(d.v()), false);
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    ++out.orbit;
    const int x = static_cast<int>(f / nb);
    const std::size_t b = f % nb;
    points[static_cast<std::size_t>(x)] = true;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::size_t img = static_cast<std::size_t>(gens[g](x)) * nb + actions[g][b];
      if (!seen[img]) {
        seen[img] = true;
        queue.push_back(img);
      }
    }
  }
  out.point_orbit = std::count(points.begin(), points.end(), true);
  out.transitive = out.orbit == out.flags;
  return out;
}

PermGroup::PermGroup(std::vector<Permutation> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("a permutation group needs at least one generator");
  for (const auto& g : gens_)
    if (g.size() != gens_.front().size()) throw std::invalid_argument("generators of different degree");
}

std::optional<std::vector<Permutation>> PermGroup::elements(std::size_t cap) const {
  // Finite group: closure under multiplication by generators is the group.
  std::set<Permutation> seen{Permutation::identity(gens_.front().size())};
  std::deque<Permutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const auto& g : gens_) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(y));
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

std::optional<std::uint64_t> PermGroup::order(std::size_t cap) const {
  auto e = elements(cap);
  if (!e) return std::nullopt;
  return e->size();
}

std::vector<Permutation> psl2_11_generators() {
  std::vector<int> shift(11), scale(11);
  for (int x = 0; x < 11; ++x) {
    shift[static_cast<std::size_t>(x)] = (x + 1) % 11;
    scale[static_cast<std::size_t>(x)] = (3 * x) % 11;
  }
  return {Permutation(shift), Permutation(scale), Permutation({0, 1, 5, 3, 7, 2, 8, 4, 6, 10, 9})};
}

std::vector<Permutation> psl3_generators(int n) {
  if (!prime_int(n)) throw std::invalid_argument("psl3_generators needs a prime, got " + std::to_string(n));
  const auto pts = plane_points(n);
  const auto idx = point_index(pts);
  std::vector<Permutation> gens;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (r == c) continue;
      // x -> x + x_c e_r
      std::vector<int> img;
      for (const auto& x : pts) {
        Vec3 y = x;
        y[static_cast<std::size_t>(r)] += x[static_cast<std::size_t>(c)];
        img.push_back(idx.at(normalize(y, n)));
      }
      gens.emplace_back(std::move(img));
    }
  return gens;
}

void write_structure(std::ostream& out, const IncidenceStructure& d) {
  const std::size_t k = d.blocks().empty() ? 0 : d.blocks().front().size();
  out << d.v() << ' ' << k << '\n';
  for (const auto& b : d.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
}

namespace {

std::vector<int> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream is(line);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
    out.push_back(x);
  }
  return out;
}

}  // namespace

IncidenceStructure read_structure(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    auto ints = parse_ints(line, line_no);
    if (ints.empty()) continue;
    rows.push_back(std::move(ints));
  }
  if (rows.empty() || rows.front().size() != 2) throw std::invalid_argument("structure file must start with 'v k'");
  const int v = rows.front()[0];
  const int k = rows.front()[1];
  if (v < 1 || k < 0) throw std::invalid_argument("structure header needs v >= 1 and k >= 0");
  std::vector<std::vector<int>> blocks(rows.begin() + 1, rows.end());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (static_cast<int>(blocks[i].size()) != k)
      throw std::invalid_argument("block " + std::to_string(i) + " has " + std::to_string(blocks[i].size()) +
                                  " points, header says " + std::to_string(k));
  return IncidenceStructure(v, std::move(blocks));
}

void write_generators(std::ostream& out, const std::vector<Permutation>& gens) {
  for (const auto& g : gens) {
    for (int i = 0; i < g.size(); ++i) out << (i ? " " : "") << g(i);
    out << '\n';
  }
}

std::vector<Permutation> read_generators(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    auto ints = parse_ints(line, line_no);
    if (ints.empty()) continue;
    try {
      gens.emplace_back(std::move(ints));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (gens.empty()) throw std::invalid_argument("generator file is empty");
  return gens;
}

}  // namespace symdes
