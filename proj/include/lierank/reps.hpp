#pragma once

#include <map>
#include <vector>

#include "lierank/subgroups.hpp"

namespace lierank {

/// Weights with explicit multiplicities; zero weights are never dropped.
struct WeightMultiset {
  std::size_t ambient_dim = 0;
  std::map<HalfIntVector, int> entries;
  /// Set on multisets standing for the real part of a module with a real
  /// structure; every equality check still runs on complex weights.
  bool real_form = false;

  void add(const HalfIntVector& w, int mult = 1);
  int dimension() const;
  int multiplicity(const HalfIntVector& w) const;
  bool negation_symmetric() const;
  /// Multiset union.
  WeightMultiset operator+(const WeightMultiset& o) const;
  bool operator==(const WeightMultiset& o) const { return ambient_dim == o.ambient_dim && entries == o.entries; }
};

struct IsotropyRep {
  WeightMultiset weights;
  EmbeddedSubgroup acting_subgroup;
};

/// Linear map on doubled coordinates: out = (rows * in) / denominator.
struct LinearMap {
  std::vector<std::vector<int>> rows;
  int denominator = 1;
  std::size_t in_dim() const { return rows.empty() ? 0 : rows.front().size(); }
  std::size_t out_dim() const { return rows.size(); }

  static LinearMap identity(std::size_t n);
  /// Keep the listed coordinates, in order.
  static LinearMap coordinates(std::size_t n, const std::vector<std::size_t>& keep);
};

/// Weights ±e_i of the standard 2n-dimensional module of C_n.
WeightMultiset standard_symplectic_weights(int n);

WeightMultiset exterior_square(const WeightMultiset& w);
WeightMultiset symmetric_square(const WeightMultiset& w);
WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b);

WeightMultiset restrict(const WeightMultiset& w, const LinearMap& projection);

/// R(G) \ R(H), each with multiplicity one.
IsotropyRep isotropy_weights(const RootSystem& g, const EmbeddedSubgroup& h);

/// Λ² of the standard C_n module against n trivial weights plus the isotropy
/// weights of C_n/(C1)^n.
bool verify_lemma_iso(int n);

/// The four pieces of Λ²(H^n) restricted to (C1)^p x U with H^n = H^q ⊕ H^p
/// (the first q coordinates carry H^q).
struct CnSplit {
  WeightMultiset lambda2_q;      ///< complex
  WeightMultiset cross_qp;       ///< complex
  WeightMultiset trivial_p;      ///< p zero weights
  WeightMultiset tau_p;          ///< isotropy of C_p/(C1)^p
  bool lambda2_q_complex = true;
  bool cross_qp_complex = true;
  WeightMultiset total() const { return lambda2_q + cross_qp + trivial_p + tau_p; }
};

CnSplit prop_cn_split(int n, int p, int q);

/// Irreducible summands of the complexified isotropy module as weight blocks.
std::vector<RootSet> isotropy_blocks(const RootSystem& g, const EmbeddedSubgroup& h);

/// True iff no isotropy block contains a weight together with its negative.
bool invariant_acs_exists(const RootSystem& g, const EmbeddedSubgroup& h);

}  // namespace lierank
