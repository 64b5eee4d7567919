#pragma once

#include <vector>

#include "lierank/rootsys.hpp"

// Data-parallel inner loops. Each OpenMP kernel has a serial twin with the
// same signature; tests compare the two and the benchmark times them.
namespace lierank::kernels {

/// Index tables over a parent root set: negation and sum lookups.
struct RootTable {
  RootSet roots;
  std::vector<int> neg;
  /// sum[i * n + j] = index of roots[i] + roots[j], or -1.
  std::vector<int> sum;
  int size() const { return static_cast<int>(roots.size()); }
  int index_of(const HalfIntVector& v) const;
};

/// Cached per root system; safe to call from several threads.
const RootTable& root_table(const RootSystem& g);

using Mask = std::vector<char>;

Mask to_mask(const RootTable& t, const RootSet& s);
RootSet from_mask(const RootTable& t, const Mask& m);

/// Smallest symmetric additively closed subset containing the mask.
Mask closure(const RootTable& t, Mask gens);

/// All closures of H ∪ {β} for β outside H, deduplicated and sorted.
std::vector<Mask> one_root_extensions(const RootTable& t, const Mask& h);
std::vector<Mask> one_root_extensions_serial(const RootTable& t, const Mask& h);

/// Label each weight by the class it falls in when weights differing by a
/// root of H are joined. Labels are the smallest index in the class.
std::vector<int> root_string_blocks(const RootSet& weights, const RootSet& h_roots);
std::vector<int> root_string_blocks_serial(const RootSet& weights, const RootSet& h_roots);

RootSet orthogonal_filter_parallel(const RootSet& roots, const HalfIntVector& v);

}  // namespace lierank::kernels
