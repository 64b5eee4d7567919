#include "lierank/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "lierank/errors.hpp"
#include "lierank/linalg.hpp"

namespace lierank {

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

bool SimpleTypeId::admissible(Series s, int r) {
  switch (s) {
    case Series::A:
    case Series::B:
    case Series::C:
      return r >= 1;
    case Series::D:
      return r >= 2;
    case Series::E:
      return r >= 6 && r <= 8;
    case Series::F:
      return r == 4;
    case Series::G:
      return r == 2;
  }
  return false;
}

SimpleTypeId SimpleTypeId::make(Series s, int r) {
  if (!admissible(s, r)) {
    throw InadmissibleType(std::string("inadmissible simple type ") + series_letter(s) +
                           std::to_string(r));
  }
  return SimpleTypeId{s, r};
}

std::string SimpleTypeId::name() const { return series_letter(series) + std::to_string(rank); }

RootSet make_root_set(std::vector<HalfIntVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const RootSet& s, const HalfIntVector& v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const RootSet& a, const RootSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RootSet set_difference(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RootLookup make_lookup(const RootSet& s) { return RootLookup(s.begin(), s.end()); }

namespace {

// All sign patterns (+-1)^n as doubled halves, optionally filtered by parity
// of the number of minus signs.
std::vector<HalfIntVector> half_sums(std::size_t n, int minus_parity /* -1 = any */) {
  std::vector<HalfIntVector> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int minus = __builtin_popcount(mask);
    if (minus_parity >= 0 && minus % 2 != minus_parity) continue;
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1u ? -1 : 1;
    out.emplace_back(std::move(c));
  }
  return out;
}

void add_pm_pairs(std::vector<HalfIntVector>& out, std::size_t dim, std::size_t n, bool plus,
                  bool minus) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto ei = HalfIntVector::unit(dim, i), ej = HalfIntVector::unit(dim, j);
      if (minus) {
        out.push_back(ei - ej);
        out.push_back(ej - ei);
      }
      if (plus) {
        out.push_back(ei + ej);
        out.push_back(-(ei + ej));
      }
    }
  }
}

RootSet build_e8() {
  std::vector<HalfIntVector> r;
  add_pm_pairs(r, 8, 8, true, true);
  for (auto& h : half_sums(8, 0)) r.push_back(h);
  return make_root_set(std::move(r));
}

RootSystem build(SimpleTypeId t) {
  RootSystem rs;
  rs.type = t;
  rs.label = t.name();
  rs.rank = t.rank;
  const int n = t.rank;
  std::vector<HalfIntVector> r;
  switch (t.series) {
    case Series::A:
      rs.ambient_dim = n + 1;
      add_pm_pairs(r, n + 1, n + 1, false, true);
      break;
    case Series::B:
    case Series::C:
    case Series::D:
      rs.ambient_dim = n;
      add_pm_pairs(r, n, n, true, true);
      if (t.series != Series::D) {
        int k = t.series == Series::B ? 1 : 2;
        for (int i = 0; i < n; ++i) {
          r.push_back(HalfIntVector::unit(n, i) * k);
          r.push_back(HalfIntVector::unit(n, i) * -k);
        }
      }
      break;
    case Series::G: {
      rs.ambient_dim = 3;
      add_pm_pairs(r, 3, 3, false, true);
      for (int i = 0; i < 3; ++i) {
        std::vector<int> c(3, -1);
        c[i] = 2;
        auto v = HalfIntVector::from_integers(c);
        r.push_back(v);
        r.push_back(-v);
      }
      break;
    }
    case Series::F:
      rs.ambient_dim = 4;
      add_pm_pairs(r, 4, 4, true, true);
      for (int i = 0; i < 4; ++i) {
        r.push_back(HalfIntVector::unit(4, i));
        r.push_back(-HalfIntVector::unit(4, i));
      }
      for (auto& h : half_sums(4, -1)) r.push_back(h);
      break;
    case Series::E: {
      rs.ambient_dim = 8;
      RootSet e8 = build_e8();
      if (n == 8) {
        r = e8;
      } else if (n == 7) {
        r = orthogonal_filter(e8, e7_cut_vector());
      } else {
        auto e5 = HalfIntVector::unit(8, 5), e6 = HalfIntVector::unit(8, 6),
             e7 = HalfIntVector::unit(8, 7);
        r = orthogonal_filter(orthogonal_filter(e8, e5 - e6), e6 - e7);
      }
      break;
    }
  }
  rs.roots = make_root_set(std::move(r));
  return rs;
}

}  // namespace

const RootSystem& realize(SimpleTypeId t) {
  if (!SimpleTypeId::admissible(t.series, t.rank)) SimpleTypeId::make(t.series, t.rank);
  static std::mutex mu;
  static std::map<SimpleTypeId, std::unique_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[t];
  if (!slot) slot = std::make_unique<const RootSystem>(build(t));
  return *slot;
}

HalfIntVector e7_cut_vector() { return HalfIntVector(std::vector<int>(8, 1)); }

HalfIntVector reflect(const HalfIntVector& v, const HalfIntVector& a) {
  const std::int64_t aa = dot4(a, a);
  if (aa == 0) throw Error("reflect: reflection in the zero vector");
  const std::int64_t va2 = 2 * dot4(v, a);
  std::vector<int> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::int64_t num = va2 * a.doubled(i);
    if (num % aa != 0) throw NotRepresentable("reflect: result leaves the half-integer lattice");
    out[i] = static_cast<int>(v.doubled(i) - num / aa);
  }
  return HalfIntVector(std::move(out));
}

RootSet orthogonal_filter(const RootSet& roots, const HalfIntVector& v) {
  RootSet out;
  for (const auto& a : roots) {
    if (dot4(a, v) == 0) out.push_back(a);
  }
  return out;
}

RootSet orthogonal_filter(const RootSystem& r, const HalfIntVector& v) {
  return orthogonal_filter(r.roots, v);
}

void require_reflection_closed(const RootSet& roots) {
  auto look = make_lookup(roots);
  for (const auto& a : roots) {
    if (a.is_zero()) throw NotClosedSubsystem("root set contains the zero vector");
    if (!look.count(-a)) {
      throw NotClosedSubsystem("not closed under negation: " + a.str());
    }
  }
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      bool ok = false;
      try {
        ok = look.count(reflect(b, a)) > 0;
      } catch (const NotRepresentable&) {
      }
      if (!ok) {
        throw NotClosedSubsystem("reflection of " + b.str() + " in " + a.str() +
                                 " leaves the set");
      }
    }
  }
}

bool is_reflection_closed(const RootSet& roots) {
  try {
    require_reflection_closed(roots);
    return true;
  } catch (const NotClosedSubsystem&) {
    return false;
  }
}

bool is_closed_in(const RootSet& s, const RootSet& parent) {
  auto ps = make_lookup(parent);
  auto ss = make_lookup(s);
  for (const auto& a : s) {
    if (!ss.count(-a)) return false;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      auto sum = s[i] + s[j];
      if (ps.count(sum) && !ss.count(sum)) return false;
    }
  }
  return true;
}

RootSet closed_subsystem_generated(const RootSet& gens, const RootSet& parent) {
  auto ps = make_lookup(parent);
  RootLookup have;
  std::vector<HalfIntVector> list;
  auto add = [&](const HalfIntVector& v) {
    if (have.insert(v).second) list.push_back(v);
  };
  for (const auto& g : gens) {
    add(g);
    add(-g);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto sum = list[i] + list[j];
      if (ps.count(sum)) {
        add(sum);
        add(-sum);
      }
    }
  }
  return make_root_set(std::move(list));
}

bool is_positive(const HalfIntVector& v) {
  for (int x : v.doubled()) {
    if (x != 0) return x > 0;
  }
  return false;
}

namespace {

SimpleTypeId classify_diagram(const std::vector<HalfIntVector>& simple) {
  const std::size_t n = simple.size();
  if (n == 1) return SimpleTypeId{Series::A, 1};
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> degree(n, 0);
  int double_edges = 0, triple_edges = 0, edges = 0;
  std::size_t di = 0, dj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto d = dot4(simple[i], simple[j]);
      if (d == 0) continue;
      auto aij = 2 * d / dot4(simple[j], simple[j]);
      auto aji = 2 * d / dot4(simple[i], simple[i]);
      int m = static_cast<int>(aij * aji);
      mult[i][j] = mult[j][i] = m;
      ++degree[i];
      ++degree[j];
      ++edges;
      if (m == 2) {
        ++double_edges;
        di = i;
        dj = j;
      }
      if (m == 3) ++triple_edges;
    }
  }
  auto bad = [&]() { return NotClosedSubsystem("root set does not form a crystallographic root system"); };
  if (edges != static_cast<int>(n) - 1) throw bad();
  const int rank = static_cast<int>(n);
  if (triple_edges) {
    if (n != 2) throw bad();
    return SimpleTypeId{Series::G, 2};
  }
  int maxdeg = *std::max_element(degree.begin(), degree.end());
  if (double_edges) {
    if (double_edges > 1 || maxdeg > 2) throw bad();
    if (n == 2) return SimpleTypeId{Series::B, 2};
    if (n == 4 && degree[di] == 2 && degree[dj] == 2) return SimpleTypeId{Series::F, 4};
    std::size_t end = degree[di] == 1 ? di : dj;
    std::size_t other = end == di ? dj : di;
    if (degree[end] != 1) throw bad();
    bool end_short = dot4(simple[end], simple[end]) < dot4(simple[other], simple[other]);
    return SimpleTypeId{end_short ? Series::B : Series::C, rank};
  }
  if (maxdeg <= 2) return SimpleTypeId{Series::A, rank};
  if (maxdeg > 3 || std::count(degree.begin(), degree.end(), 3) != 1) throw bad();
  std::size_t center = std::find(degree.begin(), degree.end(), 3) - degree.begin();
  std::vector<int> arms;
  for (std::size_t nb = 0; nb < n; ++nb) {
    if (!mult[center][nb]) continue;
    int len = 0;
    std::size_t prev = center, cur = nb;
    while (true) {
      ++len;
      std::size_t next = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != prev && mult[cur][k]) next = k;
      }
      if (next == n) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return SimpleTypeId{Series::D, rank};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return SimpleTypeId{Series::E, rank};
  }
  throw bad();
}

}  // namespace

std::vector<Component> decompose(const RootSet& roots) {
  const std::size_t m = roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dot4(roots[i], roots[j]) != 0) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<HalfIntVector>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(roots[i]);

  std::vector<Component> out;
  for (auto& [_, members] : groups) {
    Component c;
    c.roots = make_root_set(std::move(members));
    auto look = make_lookup(c.roots);
    std::vector<HalfIntVector> pos;
    for (const auto& a : c.roots) {
      if (is_positive(a)) pos.push_back(a);
    }
    RootLookup decomposable;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        auto s = pos[i] + pos[j];
        if (look.count(s)) decomposable.insert(s);
      }
    }
    for (const auto& a : pos) {
      if (!decomposable.count(a)) c.simple.push_back(a);
    }
    c.type = classify_diagram(c.simple);
    if (static_cast<int>(c.roots.size()) != root_count(c.type)) {
      throw NotClosedSubsystem("component of type " + c.type.name() + " has " +
                               std::to_string(c.roots.size()) + " roots");
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return std::tie(a.type, a.roots) < std::tie(b.type, b.roots);
  });
  return out;
}

int IdentificationResult::semisimple_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string IdentificationResult::str() const {
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += "x";
    s += c.name();
  }
  if (torus_rank > 0) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(torus_rank);
  }
  return s.empty() ? "1" : s;
}

IdentificationResult identify(const RootSet& roots, int ambient_rank) {
  require_reflection_closed(roots);
  IdentificationResult r;
  for (const auto& c : decompose(roots)) r.components.push_back(c.type);
  std::sort(r.components.begin(), r.components.end());
  r.torus_rank = ambient_rank - r.semisimple_rank();
  if (r.torus_rank < 0) {
    throw DimensionMismatch("root set of rank " + std::to_string(r.semisimple_rank()) +
                            " exceeds ambient rank " + std::to_string(ambient_rank));
  }
  return r;
}

HalfIntVector apply_linear(const HalfIntVector& v, const std::vector<HalfIntVector>& images) {
  if (images.size() != v.dim()) {
    throw DimensionMismatch("linear map has " + std::to_string(images.size()) +
                            " basis images for a vector of dimension " + std::to_string(v.dim()));
  }
  const std::size_t out_dim = images.empty() ? 0 : images.front().dim();
  std::vector<long> acc(out_dim, 0);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (images[i].dim() != out_dim) throw DimensionMismatch("basis images differ in dimension");
    for (std::size_t k = 0; k < out_dim; ++k) acc[k] += long{v.doubled(i)} * images[i].doubled(k);
  }
  std::vector<int> out(out_dim);
  for (std::size_t k = 0; k < out_dim; ++k) {
    if (acc[k] % 2 != 0) throw NotRepresentable("image leaves the half-integer lattice");
    out[k] = static_cast<int>(acc[k] / 2);
  }
  return HalfIntVector(std::move(out));
}

bool verify_isometry(const RootSet& src, const RootSet& dst,
                     const std::vector<HalfIntVector>& images_of_basis) {
  if (!src.empty() && images_of_basis.size() != src.front().dim()) {
    throw DimensionMismatch("basis images do not match the source dimension");
  }
  if (!dst.empty()) {
    for (const auto& im : images_of_basis) {
      if (im.dim() != dst.front().dim()) {
        throw DimensionMismatch("basis images do not match the target dimension");
      }
    }
  }
  std::vector<HalfIntVector> mapped;
  mapped.reserve(src.size());
  try {
    for (const auto& v : src) mapped.push_back(apply_linear(v, images_of_basis));
  } catch (const NotRepresentable&) {
    return false;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i; j < src.size(); ++j) {
      if (dot4(mapped[i], mapped[j]) != dot4(src[i], src[j])) return false;
    }
  }
  RootSet image = make_root_set(mapped);
  return image.size() == src.size() && image == dst;
}

RootSet weyl_orbit(const std::vector<HalfIntVector>& generators, const HalfIntVector& seed) {
  for (const auto& g : generators) {
    if (g.is_zero()) throw Error("weyl_orbit: zero generator");
  }
  RootLookup seen{seed};
  std::vector<HalfIntVector> queue{seed};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      auto w = reflect(queue[i], g);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return make_root_set(std::move(queue));
}

std::uint64_t weyl_order(SimpleTypeId t) {
  SimpleTypeId::make(t.series, t.rank);
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = t.rank;
  switch (t.series) {
    case Series::A:
      return fact(n + 1);
    case Series::B:
    case Series::C:
      return (std::uint64_t{1} << n) * fact(n);
    case Series::D:
      return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Series::G:
      return 12;
    case Series::F:
      return 1152;
    case Series::E:
      return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  }
  return 0;
}

int root_count(SimpleTypeId t) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A:
      return n * (n + 1);
    case Series::B:
    case Series::C:
      return 2 * n * n;
    case Series::D:
      return 2 * n * (n - 1);
    case Series::G:
      return 12;
    case Series::F:
      return 48;
    case Series::E:
      return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  return 0;
}

HalfIntVector highest_root(const Component& c) {
  return *std::max_element(c.roots.begin(), c.roots.end());
}

std::vector<int> root_coefficients(const Component& c, const HalfIntVector& positive_root) {
  auto look = make_lookup(c.roots);
  std::vector<int> coef(c.simple.size(), 0);
  HalfIntVector beta = positive_root;
  while (!beta.is_zero()) {
    bool stepped = false;
    for (std::size_t i = 0; i < c.simple.size() && !stepped; ++i) {
      auto rest = beta - c.simple[i];
      if (rest.is_zero() || (look.count(rest) && is_positive(rest))) {
        ++coef[i];
        beta = rest;
        stepped = true;
      }
    }
    if (!stepped) throw Error("root_coefficients: " + positive_root.str() + " is not a positive root");
  }
  return coef;
}

std::vector<int> dynkin_marks_table(SimpleTypeId t) {
  const int n = t.rank;
  std::vector<int> m;
  switch (t.series) {
    case Series::A:
      m.assign(n, 1);
      break;
    case Series::B:
    case Series::C:
      m.assign(n, 2);
      m[0] = 1;
      break;
    case Series::D:
      m.assign(n, 2);
      m[0] = m[1] = m[2] = 1;
      if (n == 2) m = {1, 1};
      break;
    case Series::G:
      m = {2, 3};
      break;
    case Series::F:
      m = {2, 2, 3, 4};
      break;
    case Series::E:
      if (n == 6) m = {1, 1, 2, 2, 2, 3};
      if (n == 7) m = {1, 2, 2, 2, 3, 3, 4};
      if (n == 8) m = {2, 2, 3, 3, 4, 4, 5, 6};
      break;
  }
  return m;
}

}  // namespace lierank
