#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lierank/rootsys.hpp"

namespace lierank {

/// One factor of a group descriptor: a simple group, or U(q) = A_{q-1} x T1
/// embedded through U(q) in SO(2q) or Sp(q).
struct Factor {
  enum class Kind { Simple, Unitary };
  Kind kind = Kind::Simple;
  SimpleTypeId type{};  // Simple only
  int q = 0;            // Unitary only, q >= 2

  static Factor simple(SimpleTypeId t) { return Factor{Kind::Simple, t, 0}; }
  static Factor unitary(int q) { return Factor{Kind::Unitary, SimpleTypeId{}, q}; }

  int rank() const { return kind == Kind::Simple ? type.rank : q; }
  std::string name() const;
  auto operator<=>(const Factor&) const = default;
};

/// Symbolic product of factors and a torus, kept sorted so equality is
/// structural. U(1) is folded into the torus.
struct GroupDescriptor {
  std::vector<Factor> factors;
  int torus_rank = 0;

  void canonicalize();
  int rank() const;
  /// Printed form, e.g. "D2xU(2)xT1", "C1^3xT1", "E8".
  std::string str() const;
  /// Simple types after folding B1/C1 -> A1, D2 -> A1^2, D3 -> A3, C2 -> B2
  /// and U(q) -> A_{q-1}; sorted.
  std::vector<SimpleTypeId> normalized_types() const;
  /// Torus rank including the centres of the unitary factors.
  int total_torus_rank() const;
  bool semisimple() const { return total_torus_rank() == 0; }
  bool operator==(const GroupDescriptor&) const = default;
};

std::uint64_t weyl_order(const GroupDescriptor& d);

/// A connected full-rank subgroup H of a simple group G, given by its root
/// subsystem in G's realization.
struct EmbeddedSubgroup {
  const RootSystem* parent = nullptr;
  RootSet subsystem;
  GroupDescriptor descriptor;
  /// Basis of the Cartan directions of G orthogonal to span(subsystem).
  std::vector<HalfIntVector> cartan_complement;
};

/// Build and validate an embedded subgroup (closed in the parent, full rank).
EmbeddedSubgroup make_subgroup(const RootSystem& g, RootSet subsystem);

/// Descriptor of a closed subsystem: block normal form for
/// B/C/D parents, identified types plus torus otherwise.
GroupDescriptor describe(const RootSystem& g, const RootSet& subsystem);

/// Directions of the Cartan of g orthogonal to every vector in s.
std::vector<HalfIntVector> cartan_complement(const RootSystem& g, const RootSet& s);

/// Maximal closed subsystems of full rank inside one irreducible component:
/// prime-mark deletions of the extended diagram and mark-one deletions of the
/// plain diagram. Unsorted, may contain conjugate duplicates.
std::vector<RootSet> maximal_subsystems(const Component& c);

/// Maximal proper connected full-rank subgroups of H inside its parent,
/// obtained by shrinking one simple factor. Deduplicated by canonical form.
std::vector<EmbeddedSubgroup> maximal_subgroups_of(const EmbeddedSubgroup& h);

std::vector<EmbeddedSubgroup> maximal_full_rank_subgroups(SimpleTypeId g);

/// Conjugacy classes of full-rank connected subgroups reachable in at most
/// max_depth maximal steps (max_depth < 0 means unbounded). The first entry
/// is G itself; the rest are sorted canonically.
std::vector<EmbeddedSubgroup> enumerate_full_rank_subgroups(SimpleTypeId g, int max_depth);
/// Same result computed without OpenMP; kept as the reference for tests.
std::vector<EmbeddedSubgroup> enumerate_full_rank_subgroups_serial(SimpleTypeId g,
                                                                   int max_depth);

EmbeddedSubgroup centralizer_of_torus(const RootSystem& g,
                                      const std::vector<HalfIntVector>& directions);
bool is_centralizer_of_torus(const RootSystem& g, const EmbeddedSubgroup& h);

/// |W(G)|/|W(H)|. Throws on unequal rank or non-divisibility.
std::uint64_t euler_characteristic(const GroupDescriptor& g, const GroupDescriptor& h);

struct CanonicalForm {
  /// Equal keys for W(G)-conjugate subgroups.
  std::string key;
  GroupDescriptor descriptor;
  RootSet subsystem;
  /// Set for U(n) inside D_n where the two mirror embeddings share a key.
  bool ambiguous_mirror = false;
};

CanonicalForm conjugacy_canonical_form(const EmbeddedSubgroup& h);

/// Chain H_k ⊂ ... ⊂ H_1 ⊂ G, listed from the smallest subgroup upwards.
struct SubgroupChain {
  std::vector<EmbeddedSubgroup> links;
  /// Every link strictly contained in the next and maximal in it.
  bool verify() const;
};

/// Subgroups H' ⊋ H in which H is maximal (one upward step).
std::vector<EmbeddedSubgroup> minimal_overgroups(const EmbeddedSubgroup& h);

bool is_maximal_in(const RootSet& h, const RootSet& over, const RootSet& parent_roots);

}  // namespace lierank
