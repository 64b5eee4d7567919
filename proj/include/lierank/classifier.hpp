#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lierank/reps.hpp"
#include "lierank/subgroups.hpp"

namespace lierank {

enum class VerdictKind { InvariantACS, StablyTrivial, WeaklyComplexOnly, NotWeaklyComplex };

std::string to_string(VerdictKind k);
bool weakly_complex(VerdictKind k);

enum class Rule {
  ProductSplit,
  FiberObstruction,
  StackConstruction,
  FibConstruction,
  OracleQK,
  OracleInnerSym,
  OracleE7A7,
  CentralizerCase,
  StablyTrivialTable,
  BorelSiebenthalList,
};

std::string to_string(Rule r);

struct WitnessStep {
  Rule rule;
  /// Descriptors of the subgroups involved, smallest first, ending with G.
  std::vector<std::string> chain;
  std::string note;
  /// Root subsystems matching chain (same parent), used for replay.
  std::vector<RootSet> subsystems;
};

struct WitnessChain {
  std::vector<WitnessStep> steps;
};

struct Verdict {
  VerdictKind kind = VerdictKind::NotWeaklyComplex;
  std::string case_label;
  WitnessChain witness;
  std::string group;
  std::string subgroup;
  std::uint64_t chi = 1;
  /// Metadata flags: ambiguity notes and disagreements with the weight-level
  /// invariant-ACS test.
  std::vector<std::string> notes;
};

/// Imported non-existence facts. Every rejection cites one of these.
struct OracleFact {
  Rule rule;
  std::string statement;
};
const std::vector<OracleFact>& oracle_fact_table();

/// Weakly-complex obstruction carried by an irreducible piece F ⊃ L when L is
/// maximal and F/L is irreducible inner symmetric, not a sphere, not Hermitian.
std::optional<Rule> fiber_obstruction(const RootSet& f, const RootSet& l);

/// True iff F/L is a symmetric pair at the root level: no two isotropy roots
/// add up to an isotropy root.
bool symmetric_pair(const RootSet& f, const RootSet& l);

/// Long roots of an irreducible root set.
RootSet long_roots(const RootSet& roots);

Verdict classify_simple(SimpleTypeId g, const EmbeddedSubgroup& h);

/// The witness chain attached to an existing verdict (recomputed).
WitnessChain witness_chain(SimpleTypeId g, const EmbeddedSubgroup& h, const Verdict& v);

/// Replays every chain step at the root-subsystem level: containments,
/// maximality of obstruction fibers, and oracle citations.
bool replay_witness(const RootSystem& g, const WitnessChain& w);

/// Product G = G_1 x ... x G_k realized on concatenated coordinates.
RootSystem product_realization(const std::vector<SimpleTypeId>& factors);

/// Cut H (given by roots in the product realization and its declared rank)
/// into H ∩ G_i. Throws NotEqualRank when rank(H) != rank(G).
std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>> split_product(
    const std::vector<SimpleTypeId>& factors, const RootSet& h_roots, int h_rank);

/// ProductSplit step followed by the factor verdicts.
Verdict classify_product(const std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>>& parts);

struct TableEntry {
  SimpleTypeId group;
  EmbeddedSubgroup subgroup;
  std::string key;
  Verdict verdict;
};

struct TableReport {
  int rank_cap = 0;
  std::vector<TableEntry> entries;
  std::vector<std::string> unclassified;
  int count(VerdictKind k) const;
};

/// Simple types up to a rank cap, skipping low-rank duplicates (B1, C1, D2, D3).
std::vector<SimpleTypeId> simple_types_up_to(int rank_cap);

TableReport reproduce_theorem_tables(int rank_cap);
TableReport reproduce_theorem_tables_serial(int rank_cap);

}  // namespace lierank
