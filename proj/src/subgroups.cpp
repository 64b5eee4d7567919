#include "lierank/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lierank/errors.hpp"
#include "lierank/kernels.hpp"
#include "lierank/linalg.hpp"

namespace lierank {

std::string Factor::name() const {
  if (kind == Kind::Unitary) return "U(" + std::to_string(q) + ")";
  return type.name();
}

void GroupDescriptor::canonicalize() {
  std::vector<Factor> kept;
  for (const auto& f : factors) {
    if (f.kind == Factor::Kind::Unitary && f.q == 1) {
      ++torus_rank;
    } else {
      kept.push_back(f);
    }
  }
  std::sort(kept.begin(), kept.end());
  factors = std::move(kept);
}

int GroupDescriptor::rank() const {
  int r = torus_rank;
  for (const auto& f : factors) r += f.rank();
  return r;
}

int GroupDescriptor::total_torus_rank() const {
  int r = torus_rank;
  for (const auto& f : factors) r += f.kind == Factor::Kind::Unitary ? 1 : 0;
  return r;
}

std::string GroupDescriptor::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!s.empty()) s += "x";
    s += factors[i].name();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  if (torus_rank > 0) {
    if (!s.empty()) s += "x";
    s += "T" + std::to_string(torus_rank);
  }
  return s.empty() ? "1" : s;
}

std::vector<SimpleTypeId> GroupDescriptor::normalized_types() const {
  std::vector<SimpleTypeId> out;
  for (const auto& f : factors) {
    if (f.kind == Factor::Kind::Unitary) {
      out.push_back({Series::A, f.q - 1});
      continue;
    }
    SimpleTypeId t = f.type;
    if ((t.series == Series::B || t.series == Series::C) && t.rank == 1) t = {Series::A, 1};
    if (t.series == Series::C && t.rank == 2) t = {Series::B, 2};
    if (t.series == Series::D && t.rank == 3) t = {Series::A, 3};
    if (t.series == Series::D && t.rank == 2) {
      out.push_back({Series::A, 1});
      t = {Series::A, 1};
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t weyl_order(const GroupDescriptor& d) {
  std::uint64_t w = 1;
  for (const auto& f : d.factors) {
    if (f.kind == Factor::Kind::Unitary) {
      for (int i = 2; i <= f.q; ++i) w *= static_cast<std::uint64_t>(i);
    } else {
      w *= weyl_order(f.type);
    }
  }
  return w;
}

std::vector<HalfIntVector> cartan_complement(const RootSystem& g, const RootSet& s) {
  auto outside = linalg::orthogonal_complement(g.roots, g.ambient_dim);
  std::vector<HalfIntVector> rows(s.begin(), s.end());
  rows.insert(rows.end(), outside.begin(), outside.end());
  return linalg::orthogonal_complement(rows, g.ambient_dim);
}

namespace {

bool is_classical_bcd(const RootSystem& g) {
  return g.type && (g.type->series == Series::B || g.type->series == Series::C ||
                    g.type->series == Series::D);
}

// Normal form of a closed subsystem of B_n, C_n or D_n read off from the
// coordinate blocks its roots connect.
GroupDescriptor describe_classical(const RootSystem& g, const RootSet& s) {
  const int n = g.type->rank;
  std::vector<int> block(n);
  std::iota(block.begin(), block.end(), 0);
  auto find = [&](int x) {
    while (block[x] != x) x = block[x] = block[block[x]];
    return x;
  };
  for (const auto& a : s) {
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (a.doubled(i) == 0) continue;
      if (first < 0) {
        first = i;
      } else {
        block[find(i)] = find(first);
      }
    }
  }
  std::map<int, int> size, roots, single;
  for (int i = 0; i < n; ++i) ++size[find(i)];
  for (const auto& a : s) {
    int support = 0, at = -1;
    for (int i = 0; i < n; ++i) {
      if (a.doubled(i) != 0) {
        ++support;
        at = i;
      }
    }
    ++roots[find(at)];
    if (support == 1) ++single[find(at)];
  }
  GroupDescriptor d;
  for (auto [b, sz] : size) {
    int nr = roots.count(b) ? roots[b] : 0;
    if (single.count(b)) {
      if (nr != 2 * sz * sz) throw NotClosedSubsystem("unexpected block in classical subsystem");
      d.factors.push_back(Factor::simple({g.type->series == Series::B ? Series::B : Series::C, sz}));
    } else if (sz >= 2 && nr == 2 * sz * (sz - 1)) {
      d.factors.push_back(Factor::simple({Series::D, sz}));
    } else if (nr == sz * (sz - 1)) {
      d.factors.push_back(Factor::unitary(sz));
    } else {
      throw NotClosedSubsystem("unexpected block in classical subsystem");
    }
  }
  d.canonicalize();
  return d;
}

std::string length_tag(const RootSet& component, std::int64_t longest) {
  std::int64_t mx = 0;
  for (const auto& a : component) mx = std::max(mx, dot4(a, a));
  return mx == longest ? "" : "s";
}

}  // namespace

GroupDescriptor describe(const RootSystem& g, const RootSet& subsystem) {
  if (is_classical_bcd(g)) return describe_classical(g, subsystem);
  auto id = identify(subsystem, g.rank);
  GroupDescriptor d;
  for (const auto& t : id.components) d.factors.push_back(Factor::simple(t));
  d.torus_rank = id.torus_rank;
  d.canonicalize();
  return d;
}

EmbeddedSubgroup make_subgroup(const RootSystem& g, RootSet subsystem) {
  if (!is_subset(subsystem, g.roots)) throw NotClosedSubsystem("subsystem is not inside the parent roots");
  if (!is_closed_in(subsystem, g.roots)) {
    throw NotClosedSubsystem("subsystem is not closed in " + g.label);
  }
  EmbeddedSubgroup h;
  h.parent = &g;
  h.descriptor = describe(g, subsystem);
  if (h.descriptor.rank() != g.rank) {
    throw NotEqualRank("subgroup " + h.descriptor.str() + " does not have full rank in " + g.label);
  }
  h.cartan_complement = cartan_complement(g, subsystem);
  h.subsystem = std::move(subsystem);
  return h;
}

std::vector<RootSet> maximal_subsystems(const Component& c) {
  const auto theta = highest_root(c);
  const auto marks = root_coefficients(c, theta);
  std::vector<RootSet> out;
  for (std::size_t i = 0; i < c.simple.size(); ++i) {
    std::vector<HalfIntVector> gens;
    for (std::size_t j = 0; j < c.simple.size(); ++j) {
      if (j != i) gens.push_back(c.simple[j]);
    }
    const int m = marks[i];
    if (m == 1) {
      out.push_back(closed_subsystem_generated(make_root_set(gens), c.roots));
    } else if (m == 2 || m == 3 || m == 5) {
      gens.push_back(-theta);
      out.push_back(closed_subsystem_generated(make_root_set(gens), c.roots));
    }
  }
  return out;
}

CanonicalForm conjugacy_canonical_form(const EmbeddedSubgroup& h) {
  const RootSystem& g = *h.parent;
  CanonicalForm cf;
  cf.descriptor = h.descriptor;
  cf.subsystem = h.subsystem;
  if (is_classical_bcd(g) || (g.type && g.type->series == Series::A)) {
    cf.key = h.descriptor.str();
    if (g.type->series == Series::D) {
      for (const auto& f : h.descriptor.factors) {
        if (f.kind == Factor::Kind::Unitary && f.q == g.type->rank) cf.ambiguous_mirror = true;
      }
    }
    return cf;
  }
  // Exceptional parents: types with length classes, torus, the centralizer of
  // the centre, and the sizes of the irreducible isotropy summands.
  std::int64_t longest = 0;
  for (const auto& a : g.roots) longest = std::max(longest, dot4(a, a));
  std::vector<std::string> parts;
  for (const auto& comp : decompose(h.subsystem)) {
    parts.push_back(comp.type.name() + length_tag(comp.roots, longest));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + ".";
  key += "T" + std::to_string(h.descriptor.torus_rank);
  auto cent = centralizer_of_torus(g, h.cartan_complement);
  key += "|C:";
  for (const auto& comp : decompose(cent.subsystem)) {
    key += comp.type.name() + length_tag(comp.roots, longest) + ".";
  }
  auto weights = set_difference(g.roots, h.subsystem);
  auto lab = kernels::root_string_blocks_serial(weights, h.subsystem);
  std::map<int, int> sizes;
  for (int l : lab) ++sizes[l];
  std::vector<int> sz;
  for (auto [_, s] : sizes) sz.push_back(s);
  std::sort(sz.begin(), sz.end());
  key += "|B:";
  for (int s : sz) key += std::to_string(s) + ",";
  cf.key = key;
  return cf;
}

namespace {

bool canonical_less(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b) {
  // Larger subgroups first, then by printed descriptor, then by roots.
  if (a.subsystem.size() != b.subsystem.size()) return a.subsystem.size() > b.subsystem.size();
  auto sa = a.descriptor.str(), sb = b.descriptor.str();
  if (sa != sb) return sa < sb;
  return conjugacy_canonical_form(a).key < conjugacy_canonical_form(b).key;
}

std::vector<EmbeddedSubgroup> children(const EmbeddedSubgroup& h) {
  std::vector<EmbeddedSubgroup> out;
  for (const auto& comp : decompose(h.subsystem)) {
    RootSet rest = set_difference(h.subsystem, comp.roots);
    for (auto& m : maximal_subsystems(comp)) {
      RootSet merged = rest;
      merged.insert(merged.end(), m.begin(), m.end());
      out.push_back(make_subgroup(*h.parent, make_root_set(std::move(merged))));
    }
  }
  return out;
}

std::vector<EmbeddedSubgroup> unique_by_key(std::vector<EmbeddedSubgroup> in) {
  std::set<std::string> seen;
  std::vector<EmbeddedSubgroup> out;
  for (auto& h : in) {
    if (seen.insert(conjugacy_canonical_form(h).key).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

template <bool Parallel>
std::vector<EmbeddedSubgroup> enumerate_impl(SimpleTypeId t, int max_depth) {
  const RootSystem& g = realize(t);
  EmbeddedSubgroup top = make_subgroup(g, g.roots);
  std::set<std::string> seen{conjugacy_canonical_form(top).key};
  std::vector<EmbeddedSubgroup> found;
  std::vector<EmbeddedSubgroup> frontier{top};
  for (int depth = 0; (max_depth < 0 || depth < max_depth) && !frontier.empty(); ++depth) {
    std::vector<std::vector<EmbeddedSubgroup>> kids(frontier.size());
    std::vector<std::vector<std::string>> keys(frontier.size());
    const int nf = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (int i = 0; i < nf; ++i) {
      kids[i] = children(frontier[i]);
      for (const auto& k : kids[i]) keys[i].push_back(conjugacy_canonical_form(k).key);
    }
    std::vector<EmbeddedSubgroup> next;
    for (int i = 0; i < nf; ++i) {
      for (std::size_t j = 0; j < kids[i].size(); ++j) {
        if (seen.insert(keys[i][j]).second) next.push_back(std::move(kids[i][j]));
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), canonical_less);
  found.insert(found.begin(), top);
  return found;
}

}  // namespace

std::vector<EmbeddedSubgroup> maximal_subgroups_of(const EmbeddedSubgroup& h) {
  return unique_by_key(children(h));
}

std::vector<EmbeddedSubgroup> maximal_full_rank_subgroups(SimpleTypeId t) {
  const RootSystem& g = realize(t);
  return maximal_subgroups_of(make_subgroup(g, g.roots));
}

std::vector<EmbeddedSubgroup> enumerate_full_rank_subgroups(SimpleTypeId g, int max_depth) {
  return enumerate_impl<true>(g, max_depth);
}

std::vector<EmbeddedSubgroup> enumerate_full_rank_subgroups_serial(SimpleTypeId g,
                                                                   int max_depth) {
  return enumerate_impl<false>(g, max_depth);
}

EmbeddedSubgroup centralizer_of_torus(const RootSystem& g,
                                      const std::vector<HalfIntVector>& directions) {
  RootSet s;
  for (const auto& a : g.roots) {
    bool ok = std::all_of(directions.begin(), directions.end(),
                          [&](const HalfIntVector& d) { return dot4(a, d) == 0; });
    if (ok) s.push_back(a);
  }
  return make_subgroup(g, std::move(s));
}

bool is_centralizer_of_torus(const RootSystem& g, const EmbeddedSubgroup& h) {
  return centralizer_of_torus(g, h.cartan_complement).subsystem == h.subsystem;
}

std::uint64_t euler_characteristic(const GroupDescriptor& g, const GroupDescriptor& h) {
  if (g.rank() != h.rank()) {
    throw NotEqualRank("rank " + std::to_string(h.rank()) + " subgroup in rank " +
                       std::to_string(g.rank()) + " group");
  }
  auto wg = weyl_order(g), wh = weyl_order(h);
  if (wh == 0 || wg % wh != 0) {
    throw Error("Weyl group order of " + h.str() + " does not divide that of " + g.str());
  }
  return wg / wh;
}

bool is_maximal_in(const RootSet& h, const RootSet& over, const RootSet& parent_roots) {
  if (h.size() >= over.size() || !is_subset(h, over)) return false;
  RootSystem tmp;
  tmp.roots = parent_roots;
  const auto& t = kernels::root_table(tmp);
  auto hm = kernels::to_mask(t, h);
  auto om = kernels::to_mask(t, over);
  for (int b = 0; b < t.size(); ++b) {
    if (!om[b] || hm[b]) continue;
    auto g = hm;
    g[b] = 1;
    if (kernels::closure(t, std::move(g)) != om) return false;
  }
  return true;
}

std::vector<EmbeddedSubgroup> minimal_overgroups(const EmbeddedSubgroup& h) {
  const RootSystem& g = *h.parent;
  const auto& t = kernels::root_table(g);
  auto hm = kernels::to_mask(t, h.subsystem);
  auto ext = kernels::one_root_extensions(t, hm);
  auto count = [](const kernels::Mask& m) { return std::count(m.begin(), m.end(), 1); };
  std::vector<EmbeddedSubgroup> out;
  for (const auto& cand : ext) {
    bool minimal = true;
    for (const auto& other : ext) {
      if (&other == &cand || count(other) >= count(cand)) continue;
      bool inside = true;
      for (int i = 0; i < t.size() && inside; ++i) inside = !other[i] || cand[i];
      if (inside) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(make_subgroup(g, kernels::from_mask(t, cand)));
  }
  return out;
}

bool SubgroupChain::verify() const {
  for (std::size_t i = 0; i + 1 < links.size(); ++i) {
    const auto& lo = links[i];
    const auto& hi = links[i + 1];
    if (lo.parent != hi.parent) return false;
    if (!is_maximal_in(lo.subsystem, hi.subsystem, lo.parent->roots)) return false;
  }
  return true;
}

}  // namespace lierank
