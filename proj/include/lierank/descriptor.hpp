#pragma once

#include <string>
#include <vector>

#include "lierank/classifier.hpp"
#include "lierank/subgroups.hpp"

namespace lierank {

/// Parse a product such as "B2xD2", "(C1)^3xT1", "Spin(7)xU(2)" or "SU(3)".
/// Throws ParseError naming the offending token and its position.
GroupDescriptor parse_group(const std::string& text);

struct SpaceDescriptor {
  GroupDescriptor group;
  GroupDescriptor subgroup;
  std::string str() const { return group.str() + "/" + subgroup.str(); }
};

/// Parse "G/H".
SpaceDescriptor parse_space(const std::string& text);

/// Conjugacy classes of full-rank subgroups of g matching a descriptor. An
/// exact descriptor match wins; otherwise types are compared after
/// normalization, with D_p and C1 read as long roots and B1 as short roots.
/// U(q) sits on long roots next to B/D factors and on short roots next to C
/// factors.
std::vector<EmbeddedSubgroup> resolve_subgroup(SimpleTypeId g, const GroupDescriptor& h);

/// One candidate embedding of H into a product of simple groups.
using ProductEmbedding = std::vector<std::pair<SimpleTypeId, EmbeddedSubgroup>>;

/// Distribute H over the simple factors of G and resolve every part. Torus
/// factors of G are absorbed into H. Throws NotEqualRank on rank mismatch and
/// InadmissibleType when G has a non-simple factor. At most `limit`
/// candidates are returned.
std::vector<ProductEmbedding> resolve_space(const SpaceDescriptor& s, std::size_t limit = 64);

struct Resolution {
  Verdict verdict;
  /// Number of candidate embeddings examined.
  std::size_t candidates = 0;
  /// Set when candidates disagree; the verdict is then that of the first.
  bool ambiguous = false;
  std::vector<std::string> alternatives;
};

/// Classify G/H from descriptors alone.
Resolution classify_space(const SpaceDescriptor& s);

}  // namespace lierank
