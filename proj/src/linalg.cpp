#include "lierank/linalg.hpp"

#include <numeric>

#include "lierank/errors.hpp"

namespace lierank::linalg {
namespace {

using Row = std::vector<__int128>;

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void normalize(Row& r) {
  __int128 g = 0;
  for (auto x : r) g = gcd128(g, x);
  if (g > 1) {
    for (auto& x : r) x /= g;
  }
}

// Fraction-free row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<Row>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      __int128 a = m[r][c], b = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
      normalize(m[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<Row> to_rows(const std::vector<HalfIntVector>& vs, std::size_t dim) {
  std::vector<Row> m;
  m.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.dim() != dim) throw DimensionMismatch("linalg: vector of wrong dimension");
    Row r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = v.doubled(j);
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

int rank(const std::vector<HalfIntVector>& vs, std::size_t dim) {
  auto m = to_rows(vs, dim);
  return static_cast<int>(echelon(m, dim).size());
}

std::vector<HalfIntVector> orthogonal_complement(const std::vector<HalfIntVector>& vs,
                                                 std::size_t dim) {
  auto m = to_rows(vs, dim);
  auto pivots = echelon(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<HalfIntVector> out;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    // Solve with x_free = L, where L clears all pivot denominators.
    __int128 l = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      __int128 d = abs128(m[i][pivots[i]]);
      l = l / gcd128(l, d) * d;
    }
    Row x(dim, 0);
    x[free] = l;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = -m[i][free] * (l / m[i][pivots[i]]);
    }
    normalize(x);
    std::vector<int> coords(dim);
    for (std::size_t j = 0; j < dim; ++j) coords[j] = static_cast<int>(x[j]);
    out.push_back(HalfIntVector::from_integers(coords));
  }
  return out;
}

bool in_span(const std::vector<HalfIntVector>& vs, const HalfIntVector& v) {
  if (v.is_zero()) return true;
  auto with = vs;
  with.push_back(v);
  return rank(with, v.dim()) == rank(vs, v.dim());
}

}  // namespace lierank::linalg
