#include "lierank/reps.hpp"

#include <algorithm>

#include "lierank/errors.hpp"
#include "lierank/kernels.hpp"

namespace lierank {

void WeightMultiset::add(const HalfIntVector& w, int mult) {
  if (w.dim() != ambient_dim) throw DimensionMismatch("weight of wrong dimension");
  if (mult > 0) entries[w] += mult;
}

int WeightMultiset::dimension() const {
  int d = 0;
  for (const auto& [_, m] : entries) d += m;
  return d;
}

int WeightMultiset::multiplicity(const HalfIntVector& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

bool WeightMultiset::negation_symmetric() const {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const auto& e) { return multiplicity(-e.first) == e.second; });
}

WeightMultiset WeightMultiset::operator+(const WeightMultiset& o) const {
  if (ambient_dim != o.ambient_dim) throw DimensionMismatch("multisets of different dimension");
  WeightMultiset r = *this;
  for (const auto& [w, m] : o.entries) r.entries[w] += m;
  return r;
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m;
  m.rows.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

LinearMap LinearMap::coordinates(std::size_t n, const std::vector<std::size_t>& keep) {
  LinearMap m;
  for (auto k : keep) {
    std::vector<int> row(n, 0);
    row.at(k) = 1;
    m.rows.push_back(std::move(row));
  }
  return m;
}

WeightMultiset standard_symplectic_weights(int n) {
  if (n < 1) throw Error("standard_symplectic_weights: n must be positive");
  WeightMultiset w;
  w.ambient_dim = n;
  for (int i = 0; i < n; ++i) {
    w.add(HalfIntVector::unit(n, i));
    w.add(-HalfIntVector::unit(n, i));
  }
  return w;
}

namespace {

std::vector<HalfIntVector> expand(const WeightMultiset& w) {
  std::vector<HalfIntVector> out;
  for (const auto& [v, m] : w.entries) out.insert(out.end(), m, v);
  return out;
}

}  // namespace

WeightMultiset exterior_square(const WeightMultiset& w) {
  auto v = expand(w);
  WeightMultiset r;
  r.ambient_dim = w.ambient_dim;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) r.add(v[i] + v[j]);
  }
  return r;
}

WeightMultiset symmetric_square(const WeightMultiset& w) {
  auto v = expand(w);
  WeightMultiset r;
  r.ambient_dim = w.ambient_dim;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) r.add(v[i] + v[j]);
  }
  return r;
}

WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionMismatch("tensor of multisets of different dimension");
  WeightMultiset r;
  r.ambient_dim = a.ambient_dim;
  for (const auto& [x, m] : a.entries) {
    for (const auto& [y, k] : b.entries) r.add(x + y, m * k);
  }
  return r;
}

WeightMultiset restrict(const WeightMultiset& w, const LinearMap& p) {
  if (p.in_dim() != w.ambient_dim) throw DimensionMismatch("projection does not match weight dimension");
  if (p.denominator == 0) throw Error("projection with zero denominator");
  WeightMultiset r;
  r.ambient_dim = p.out_dim();
  for (const auto& [v, m] : w.entries) {
    std::vector<int> out(p.out_dim());
    for (std::size_t i = 0; i < p.out_dim(); ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < p.in_dim(); ++j) acc += long{p.rows[i][j]} * v.doubled(j);
      if (acc % p.denominator != 0) throw NotRepresentable("projected weight leaves the lattice");
      out[i] = static_cast<int>(acc / p.denominator);
    }
    r.entries[HalfIntVector(std::move(out))] += m;
  }
  return r;
}

IsotropyRep isotropy_weights(const RootSystem& g, const EmbeddedSubgroup& h) {
  if (h.descriptor.rank() != g.rank) throw NotEqualRank("isotropy_weights: subgroup is not of full rank");
  if (!is_subset(h.subsystem, g.roots)) throw NotClosedSubsystem("isotropy_weights: subgroup outside parent");
  IsotropyRep rep{WeightMultiset{}, h};
  rep.weights.ambient_dim = g.ambient_dim;
  for (const auto& a : set_difference(g.roots, h.subsystem)) rep.weights.add(a);
  return rep;
}

bool verify_lemma_iso(int n) {
  auto lhs = exterior_square(standard_symplectic_weights(n));
  const RootSystem& cn = realize(SimpleTypeId::make(Series::C, n));
  RootSet long_roots;
  for (int i = 0; i < n; ++i) {
    long_roots.push_back(HalfIntVector::unit(n, i) * 2);
    long_roots.push_back(HalfIntVector::unit(n, i) * -2);
  }
  auto h = make_subgroup(cn, make_root_set(long_roots));
  WeightMultiset rhs;
  rhs.ambient_dim = n;
  rhs.add(HalfIntVector(n), n);
  rhs = rhs + isotropy_weights(cn, h).weights;
  return lhs == rhs;
}

CnSplit prop_cn_split(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0 || p + q != n) {
    throw Error("prop_cn_split: need p, q >= 0 with p + q = n >= 1");
  }
  auto block = [&](int from, int count) {
    WeightMultiset w;
    w.ambient_dim = n;
    for (int i = from; i < from + count; ++i) {
      w.add(HalfIntVector::unit(n, i));
      w.add(-HalfIntVector::unit(n, i));
    }
    return w;
  };
  auto hq = block(0, q), hp = block(q, p);
  CnSplit s;
  s.lambda2_q = exterior_square(hq);
  s.cross_qp = tensor(hq, hp);
  s.trivial_p.ambient_dim = n;
  s.trivial_p.add(HalfIntVector(n), p);
  s.tau_p.ambient_dim = n;
  for (int i = q; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto ei = HalfIntVector::unit(n, i), ej = HalfIntVector::unit(n, j);
      for (int a : {1, -1}) {
        for (int b : {1, -1}) s.tau_p.add(ei * a + ej * b);
      }
    }
  }
  for (auto* w : {&s.lambda2_q, &s.cross_qp, &s.trivial_p, &s.tau_p}) w->real_form = true;
  return s;
}

std::vector<RootSet> isotropy_blocks(const RootSystem& g, const EmbeddedSubgroup& h) {
  auto weights = set_difference(g.roots, h.subsystem);
  auto label = kernels::root_string_blocks(weights, h.subsystem);
  // W(H) images of a block stay inside the module it spans; merge anyway so
  // the partition is closed under the simple reflections of H.
  std::vector<HalfIntVector> simple;
  for (const auto& c : decompose(h.subsystem)) simple.insert(simple.end(), c.simple.begin(), c.simple.end());
  std::vector<int> parent(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) parent[i] = label[i];
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (const auto& s : simple) {
      auto img = reflect(weights[i], s);
      auto it = std::lower_bound(weights.begin(), weights.end(), img);
      if (it != weights.end() && *it == img) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(it - weights.begin()));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<int, RootSet> groups;
  for (std::size_t i = 0; i < weights.size(); ++i) groups[find(static_cast<int>(i))].push_back(weights[i]);
  std::vector<RootSet> out;
  for (auto& [_, b] : groups) out.push_back(std::move(b));
  return out;
}

bool invariant_acs_exists(const RootSystem& g, const EmbeddedSubgroup& h) {
  for (const auto& block : isotropy_blocks(g, h)) {
    for (const auto& w : block) {
      if (contains(block, -w)) return false;
    }
  }
  return true;
}

}  // namespace lierank
