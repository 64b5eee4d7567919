#include "lierank/kernels.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace lierank::kernels {

int RootTable::index_of(const HalfIntVector& v) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), v);
  if (it == roots.end() || !(*it == v)) return -1;
  return static_cast<int>(it - roots.begin());
}

const RootTable& root_table(const RootSystem& g) {
  static std::mutex mu;
  static std::map<RootSet, std::unique_ptr<RootTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[g.roots];
  if (!slot) {
    auto t = std::make_unique<RootTable>();
    t->roots = g.roots;
    const int n = t->size();
    t->neg.assign(n, -1);
    t->sum.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      t->neg[i] = t->index_of(-t->roots[i]);
      for (int j = 0; j < n; ++j) {
        t->sum[static_cast<std::size_t>(i) * n + j] = t->index_of(t->roots[i] + t->roots[j]);
      }
    }
    slot = std::move(t);
  }
  return *slot;
}

Mask to_mask(const RootTable& t, const RootSet& s) {
  Mask m(t.size(), 0);
  for (const auto& v : s) {
    int i = t.index_of(v);
    if (i >= 0) m[i] = 1;
  }
  return m;
}

RootSet from_mask(const RootTable& t, const Mask& m) {
  RootSet s;
  for (int i = 0; i < t.size(); ++i) {
    if (m[i]) s.push_back(t.roots[i]);
  }
  return s;
}

Mask closure(const RootTable& t, Mask m) {
  const int n = t.size();
  std::vector<int> list;
  for (int i = 0; i < n; ++i) {
    if (m[i]) list.push_back(i);
  }
  auto add = [&](int i) {
    if (i >= 0 && !m[i]) {
      m[i] = 1;
      list.push_back(i);
    }
  };
  for (std::size_t k = 0; k < list.size(); ++k) add(t.neg[list[k]]);
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      int s = t.sum[static_cast<std::size_t>(list[a]) * n + list[b]];
      if (s >= 0 && !m[s]) {
        add(s);
        add(t.neg[s]);
      }
    }
  }
  return m;
}

namespace {

std::vector<Mask> dedupe(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Mask> one_root_extensions_serial(const RootTable& t, const Mask& h) {
  std::vector<Mask> out;
  for (int b = 0; b < t.size(); ++b) {
    if (h[b]) continue;
    Mask g = h;
    g[b] = 1;
    out.push_back(closure(t, std::move(g)));
  }
  return dedupe(std::move(out));
}

std::vector<Mask> one_root_extensions(const RootTable& t, const Mask& h) {
  const int n = t.size();
  std::vector<Mask> out(n);
#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < n; ++b) {
    if (h[b]) continue;
    Mask g = h;
    g[b] = 1;
    out[b] = closure(t, std::move(g));
  }
  std::erase_if(out, [](const Mask& m) { return m.empty(); });
  return dedupe(std::move(out));
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> labels(UnionFind& uf, int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = uf.find(i);
  return out;
}

}  // namespace

std::vector<int> root_string_blocks_serial(const RootSet& weights, const RootSet& h_roots) {
  const int n = static_cast<int>(weights.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& a : h_roots) {
      auto it = std::lower_bound(weights.begin(), weights.end(), weights[i] + a);
      if (it != weights.end() && *it == weights[i] + a) {
        uf.join(i, static_cast<int>(it - weights.begin()));
      }
    }
  }
  return labels(uf, n);
}

std::vector<int> root_string_blocks(const RootSet& weights, const RootSet& h_roots) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::vector<int>> partner(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (const auto& a : h_roots) {
      auto it = std::lower_bound(weights.begin(), weights.end(), weights[i] + a);
      if (it != weights.end() && *it == weights[i] + a) {
        partner[i].push_back(static_cast<int>(it - weights.begin()));
      }
    }
  }
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (int j : partner[i]) uf.join(i, j);
  }
  return labels(uf, n);
}

RootSet orthogonal_filter_parallel(const RootSet& roots, const HalfIntVector& v) {
  const int n = static_cast<int>(roots.size());
  std::vector<char> keep(n, 0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) keep[i] = dot4(roots[i], v) == 0;
  RootSet out;
  for (int i = 0; i < n; ++i) {
    if (keep[i]) out.push_back(roots[i]);
  }
  return out;
}

}  // namespace lierank::kernels
