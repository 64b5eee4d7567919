#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lierank/half_int_vector.hpp"

namespace lierank {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

/// A simple Lie type such as B4 or E8. Only admissible pairs can be built
/// through make(); the aggregate form is for constexpr tables.
struct SimpleTypeId {
  Series series = Series::A;
  int rank = 1;

  /// Throws InadmissibleType for pairs like D1, F5 or E9.
  static SimpleTypeId make(Series s, int rank);
  static bool admissible(Series s, int rank);

  std::string name() const;
  auto operator<=>(const SimpleTypeId&) const = default;
};

/// Sorted, duplicate-free set of vectors.
using RootSet = std::vector<HalfIntVector>;

RootSet make_root_set(std::vector<HalfIntVector> vs);
bool contains(const RootSet& s, const HalfIntVector& v);
/// a ⊆ b for two sorted sets.
bool is_subset(const RootSet& a, const RootSet& b);
RootSet set_difference(const RootSet& a, const RootSet& b);

using RootLookup = std::unordered_set<HalfIntVector, HalfIntVectorHash>;
RootLookup make_lookup(const RootSet& s);

struct RootSystem {
  std::size_t ambient_dim = 0;
  RootSet roots;
  std::string label;
  std::optional<SimpleTypeId> type;
  /// Rank of the group (dimension of its Cartan subalgebra), not ambient_dim.
  int rank = 0;
};

/// Standard realization of a simple type. E7 is the slice of E8 orthogonal to
/// (1/2)(e1+...+e8) and E6 the slice orthogonal to e6-e7 and e7-e8.
const RootSystem& realize(SimpleTypeId t);

/// The distinguished vector (1/2)(e1+...+e8) cutting E7 out of E8.
HalfIntVector e7_cut_vector();

/// s_a(v) = v - 2<v,a>/<a,a> a. Throws on a = 0 or when the result leaves
/// the half-integer lattice.
HalfIntVector reflect(const HalfIntVector& v, const HalfIntVector& a);

/// Roots orthogonal to v. The zero vector keeps every root.
RootSet orthogonal_filter(const RootSet& roots, const HalfIntVector& v);
RootSet orthogonal_filter(const RootSystem& r, const HalfIntVector& v);

/// Throws NotClosedSubsystem naming a violating pair when the set is not
/// closed under negation and its own reflections.
void require_reflection_closed(const RootSet& roots);
bool is_reflection_closed(const RootSet& roots);

/// Additive closure test inside a parent: a, b in s and a+b in parent imply
/// a+b in s. Connected full-rank subgroups correspond to such sets.
bool is_closed_in(const RootSet& s, const RootSet& parent);

/// Smallest symmetric additively closed subset of parent containing gens.
RootSet closed_subsystem_generated(const RootSet& gens, const RootSet& parent);

/// One irreducible piece of a root set, with its base.
struct Component {
  SimpleTypeId type;
  RootSet roots;
  /// Simple roots w.r.t. the lexicographic order on doubled coordinates.
  std::vector<HalfIntVector> simple;
};

/// Split into irreducible components, each typed. Input must be reflection
/// closed. Output is sorted by (type, roots).
std::vector<Component> decompose(const RootSet& roots);

struct IdentificationResult {
  std::vector<SimpleTypeId> components;
  int torus_rank = 0;

  int semisimple_rank() const;
  std::string str() const;
  bool operator==(const IdentificationResult&) const = default;
};

IdentificationResult identify(const RootSet& roots, int ambient_rank);

/// Maps src into the target space through the images of the standard basis
/// of the src ambient space and checks that inner products among src are kept
/// and src lands bijectively on dst.
bool verify_isometry(const RootSet& src, const RootSet& dst,
                     const std::vector<HalfIntVector>& images_of_basis);

/// Apply the linear map defined by images of the standard basis.
HalfIntVector apply_linear(const HalfIntVector& v, const std::vector<HalfIntVector>& images);

RootSet weyl_orbit(const std::vector<HalfIntVector>& generators, const HalfIntVector& seed);

std::uint64_t weyl_order(SimpleTypeId t);

/// Lexicographically positive: first nonzero coordinate is positive.
bool is_positive(const HalfIntVector& v);

/// Highest root of an irreducible component (largest in the lexicographic
/// order) and its coefficients in the component base.
HalfIntVector highest_root(const Component& c);
std::vector<int> root_coefficients(const Component& c, const HalfIntVector& positive_root);

/// Coefficients of the highest root (the extended Dynkin marks), sorted.
/// Hard-coded table; tests check it against the realizations.
std::vector<int> dynkin_marks_table(SimpleTypeId t);

/// Number of roots of a simple type.
int root_count(SimpleTypeId t);

}  // namespace lierank
